#include "wcolab/analytic.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <variant>

#include "wcolab/errors.hpp"

namespace wcolab {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void require_finite(Complex c, const char* what) {
  if (!finite(c)) throw ParameterError(std::string(what) + " must be finite");
}

bool on_branch_cut(Complex u) { return u.imag() == 0.0 && u.real() <= 0.0; }

}  // namespace

std::string format_double(double x) {
  char buf[64];
  if (x == 0.0) x = 0.0;  // no "-0"
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// MoebiusMap

MoebiusMap::MoebiusMap(Complex a, Complex lambda) : a_(a), lambda_(lambda) {
  require_finite(a, "Moebius parameter a");
  require_finite(lambda, "Moebius parameter lambda");
  if (std::abs(a) >= 1.0) throw ParameterError("Moebius parameter requires |a| < 1");
  double m = std::abs(lambda);
  if (std::abs(m - 1.0) > 1e-9) throw ParameterError("Moebius parameter requires |lambda| = 1");
  lambda_ /= m;
}

MoebiusMap MoebiusMap::rotation(double theta) {
  return MoebiusMap({0.0, 0.0}, -std::polar(1.0, theta));
}

Complex MoebiusMap::operator()(Complex z) const {
  return lambda_ * (a_ - z) / (1.0 - std::conj(a_) * z);
}

Jet2 MoebiusMap::jet(Complex z) const {
  Complex ac = std::conj(a_);
  Complex den = 1.0 - ac * z;
  Complex c = lambda_ * (std::norm(a_) - 1.0);
  Complex d1 = c / (den * den);
  return {lambda_ * (a_ - z) / den, d1, 2.0 * ac * d1 / den};
}

MoebiusMap moebius_inverse(const MoebiusMap& m) {
  // w = l (a - z)/(1 - conj(a) z)  <=>  z = conj(l) (l a - w)/(1 - conj(l a) w)
  return MoebiusMap(m.lambda() * m.a(), std::conj(m.lambda()));
}

MoebiusMap compose_moebius(const MoebiusMap& m1, const MoebiusMap& m2) {
  // The zero of m1 o m2 is m2^{-1}(a1); lambda follows from the derivative
  // there: (l (a - z)/(1 - conj(a) z))' at z = a equals -l / (1 - |a|^2).
  Complex a = moebius_inverse(m2)(m1.a());
  Complex d = m1.jet(m1.a()).df * m2.jet(a).df;
  Complex lambda = -d * (1.0 - std::norm(a));
  return MoebiusMap(a, lambda / std::abs(lambda));
}

// ---------------------------------------------------------------------------
// Expr

struct Expr::Node {
  struct Const {
    Complex c;
  };
  struct Poly {
    std::vector<Complex> c;
  };
  struct Moebius {
    MoebiusMap m;
  };
  struct Binary {
    Expr l, r;
  };
  struct Unary {
    Expr inner;
  };
  struct Power {
    Expr inner;
    double exponent;
  };

  Kind kind;
  std::variant<Const, Poly, Moebius, Binary, Unary, Power> payload;
};

Expr Expr::constant(Complex c) {
  require_finite(c, "constant");
  return Expr(std::make_shared<const Node>(Node{Kind::Const, Node::Const{c}}));
}

Expr Expr::poly(std::vector<Complex> coefficients) {
  if (coefficients.empty()) throw ParameterError("poly() needs at least one coefficient");
  for (Complex c : coefficients) require_finite(c, "polynomial coefficient");
  return Expr(std::make_shared<const Node>(Node{Kind::Poly, Node::Poly{std::move(coefficients)}}));
}

Expr Expr::moebius(const MoebiusMap& m) {
  return Expr(std::make_shared<const Node>(Node{Kind::Moebius, Node::Moebius{m}}));
}

Expr Expr::add(Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const Node>(Node{Kind::Add, Node::Binary{std::move(lhs), std::move(rhs)}}));
}

Expr Expr::mul(Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const Node>(Node{Kind::Mul, Node::Binary{std::move(lhs), std::move(rhs)}}));
}

Expr Expr::compose(Expr outer, Expr inner) {
  return Expr(
      std::make_shared<const Node>(Node{Kind::Compose, Node::Binary{std::move(outer), std::move(inner)}}));
}

Expr Expr::recip(Expr inner) {
  return Expr(std::make_shared<const Node>(Node{Kind::Recip, Node::Unary{std::move(inner)}}));
}

Expr Expr::pow(Expr inner, double exponent) {
  if (!std::isfinite(exponent)) throw ParameterError("pow() exponent must be finite");
  return Expr(std::make_shared<const Node>(Node{Kind::Pow, Node::Power{std::move(inner), exponent}}));
}

Expr Expr::monomial(int k) {
  if (k < 0) throw ParameterError("monomial degree must be nonnegative");
  std::vector<Complex> c(static_cast<std::size_t>(k) + 1, 0.0);
  c.back() = 1.0;
  return poly(std::move(c));
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }

Complex Expr::constant_value() const { return std::get<Node::Const>(node_->payload).c; }

std::span<const Complex> Expr::coefficients() const { return std::get<Node::Poly>(node_->payload).c; }

const MoebiusMap& Expr::map() const { return std::get<Node::Moebius>(node_->payload).m; }

const Expr& Expr::first() const {
  if (auto* b = std::get_if<Node::Binary>(&node_->payload)) return b->l;
  if (auto* u = std::get_if<Node::Unary>(&node_->payload)) return u->inner;
  return std::get<Node::Power>(node_->payload).inner;
}

const Expr& Expr::second() const { return std::get<Node::Binary>(node_->payload).r; }

double Expr::exponent() const { return std::get<Node::Power>(node_->payload).exponent; }

Jet2 Expr::jet(Complex z) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Const:
      return {std::get<Node::Const>(n.payload).c, 0.0, 0.0};
    case Kind::Poly: {
      const auto& c = std::get<Node::Poly>(n.payload).c;
      Complex v = c.back(), d1 = 0.0, d2 = 0.0;
      for (std::size_t k = c.size() - 1; k-- > 0;) {
        d2 = d2 * z + d1;
        d1 = d1 * z + v;
        v = v * z + c[k];
      }
      return {v, d1, 2.0 * d2};
    }
    case Kind::Moebius:
      return std::get<Node::Moebius>(n.payload).m.jet(z);
    case Kind::Add: {
      const auto& b = std::get<Node::Binary>(n.payload);
      return b.l.jet(z) + b.r.jet(z);
    }
    case Kind::Mul: {
      const auto& b = std::get<Node::Binary>(n.payload);
      return b.l.jet(z) * b.r.jet(z);
    }
    case Kind::Compose: {
      const auto& b = std::get<Node::Binary>(n.payload);
      Jet2 inner = b.r.jet(z);
      if (!(std::abs(inner.f) < 1.0)) throw DomainError("composition argument left the unit disk");
      return chain(b.l.jet(inner.f), inner);
    }
    case Kind::Recip: {
      Jet2 u = std::get<Node::Unary>(n.payload).inner.jet(z);
      if (u.f == Complex(0.0)) throw DomainError("reciprocal of zero");
      Complex v = 1.0 / u.f;
      return {v, -u.df * v * v, (2.0 * u.df * u.df * v - u.d2f) * v * v};
    }
    case Kind::Pow: {
      const auto& p = std::get<Node::Power>(n.payload);
      Jet2 u = p.inner.jet(z);
      if (on_branch_cut(u.f)) throw BranchError("pow() argument on the principal branch cut");
      double e = p.exponent;
      Complex v = std::pow(u.f, e);
      Complex r1 = u.df / u.f;
      return {v, e * v * r1, e * v * ((e - 1.0) * r1 * r1 + u.d2f / u.f)};
    }
  }
  return {};
}

Complex Expr::value(Complex z) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Const:
      return std::get<Node::Const>(n.payload).c;
    case Kind::Poly: {
      const auto& c = std::get<Node::Poly>(n.payload).c;
      Complex v = c.back();
      for (std::size_t k = c.size() - 1; k-- > 0;) v = v * z + c[k];
      return v;
    }
    case Kind::Moebius:
      return std::get<Node::Moebius>(n.payload).m(z);
    case Kind::Add: {
      const auto& b = std::get<Node::Binary>(n.payload);
      return b.l.value(z) + b.r.value(z);
    }
    case Kind::Mul: {
      const auto& b = std::get<Node::Binary>(n.payload);
      return b.l.value(z) * b.r.value(z);
    }
    case Kind::Compose: {
      const auto& b = std::get<Node::Binary>(n.payload);
      Complex w = b.r.value(z);
      if (!(std::abs(w) < 1.0)) throw DomainError("composition argument left the unit disk");
      return b.l.value(w);
    }
    case Kind::Recip: {
      Complex u = std::get<Node::Unary>(n.payload).inner.value(z);
      if (u == Complex(0.0)) throw DomainError("reciprocal of zero");
      return 1.0 / u;
    }
    case Kind::Pow: {
      const auto& p = std::get<Node::Power>(n.payload);
      Complex u = p.inner.value(z);
      if (on_branch_cut(u)) throw BranchError("pow() argument on the principal branch cut");
      return std::pow(u, p.exponent);
    }
  }
  return {};
}

namespace {

std::string format_complex(Complex c) {
  if (c.imag() == 0.0) return format_double(c.real());
  if (c.real() == 0.0) return format_double(c.imag()) + "i";
  std::string im = format_double(c.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return format_double(c.real()) + im + "i";
}

}  // namespace

std::string Expr::to_string() const {
  switch (kind()) {
    case Kind::Const: {
      Complex c = constant_value();
      return "const(" + format_double(c.real()) + "," + format_double(c.imag()) + ")";
    }
    case Kind::Poly: {
      std::string s = "poly(";
      bool first_term = true;
      for (Complex c : coefficients()) {
        if (!first_term) s += ",";
        s += format_complex(c);
        first_term = false;
      }
      return s + ")";
    }
    case Kind::Moebius: {
      const MoebiusMap& m = map();
      return "mobius(" + format_double(m.a().real()) + "," + format_double(m.a().imag()) + "," +
             format_double(std::arg(m.lambda())) + ")";
    }
    case Kind::Add:
      return "add(" + first().to_string() + "," + second().to_string() + ")";
    case Kind::Mul:
      return "mul(" + first().to_string() + "," + second().to_string() + ")";
    case Kind::Compose:
      return "compose(" + first().to_string() + "," + second().to_string() + ")";
    case Kind::Recip:
      return "recip(" + first().to_string() + ")";
    case Kind::Pow:
      return "pow(" + first().to_string() + "," + format_double(exponent()) + ")";
  }
  return {};
}

}  // namespace wcolab
