#include "wcolab/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "wcolab/errors.hpp"

namespace wcolab {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr parse() {
    skip_space();
    if (pos_ == s_.size()) fail("expected an expression");
    Expr e = expression();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  double number() {
    skip_space();
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      negative = s_[pos_] == '-';
      ++pos_;
    }
    // from_chars would accept "inf" and "nan"; only plain decimals are allowed
    if (pos_ >= s_.size() || !(std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      pos_ = start;
      fail("expected a number");
    }
    double x = 0.0;
    auto [end, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), x);
    if (ec != std::errc() || !std::isfinite(x)) {
      pos_ = start;
      fail("expected a finite number");
    }
    pos_ = static_cast<std::size_t>(end - s_.data());
    return negative ? -x : x;
  }

  // re | re+imi | re-imi | imi
  Complex complex_literal() {
    double first = number();
    if (pos_ < s_.size() && s_[pos_] == 'i') {
      ++pos_;
      return {0.0, first};
    }
    if (peek('+') || peek('-')) {
      double im = number();
      if (pos_ >= s_.size() || s_[pos_] != 'i') fail("expected 'i' after the imaginary part");
      ++pos_;
      return {first, im};
    }
    return {first, 0.0};
  }

  Expr expression() {
    skip_space();
    const std::size_t start = pos_;
    std::string_view name = word();
    if (name.empty()) fail("expected one of const, poly, mobius, add, mul, compose, recip, pow");
    expect('(');
    auto build = [&](auto&& make) -> Expr {
      try {
        return make();
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(start, e.what());
      }
    };
    Expr out = [&]() -> Expr {
      if (name == "const") {
        double re = number();
        expect(',');
        double im = number();
        return Expr::constant({re, im});
      }
      if (name == "poly") {
        std::vector<Complex> c{complex_literal()};
        while (peek(',')) {
          ++pos_;
          c.push_back(complex_literal());
        }
        return Expr::poly(std::move(c));
      }
      if (name == "mobius") {
        double are = number();
        expect(',');
        double aim = number();
        expect(',');
        double th = number();
        return build([&] { return Expr::moebius(MoebiusMap({are, aim}, std::polar(1.0, th))); });
      }
      if (name == "add" || name == "mul" || name == "compose") {
        Expr a = expression();
        expect(',');
        Expr b = expression();
        if (name == "add") return Expr::add(a, b);
        if (name == "mul") return Expr::mul(a, b);
        return Expr::compose(a, b);
      }
      if (name == "recip") return Expr::recip(expression());
      if (name == "pow") {
        Expr a = expression();
        expect(',');
        double e = number();
        return build([&] { return Expr::pow(a, e); });
      }
      pos_ = start;
      fail("unknown function '" + std::string(name) + "'");
    }();
    expect(')');
    return out;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace wcolab
