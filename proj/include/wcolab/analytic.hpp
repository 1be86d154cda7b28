#pragma once

#include <complex>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace wcolab {

using Complex = std::complex<double>;

/// Value, first and second derivative of an analytic function at one point.
struct Jet2 {
  Complex f{};
  Complex df{};
  Complex d2f{};
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.f + b.f, a.df + b.df, a.d2f + b.d2f};
}

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.f * b.f, a.df * b.f + a.f * b.df, a.d2f * b.f + 2.0 * a.df * b.df + a.f * b.d2f};
}

inline Jet2 operator*(Complex c, const Jet2& a) { return {c * a.f, c * a.df, c * a.d2f}; }

/// outer evaluated at inner.f, combined by the chain rule.
inline Jet2 chain(const Jet2& outer_at_inner, const Jet2& inner) {
  return {outer_at_inner.f, outer_at_inner.df * inner.df,
          outer_at_inner.d2f * inner.df * inner.df + outer_at_inner.df * inner.d2f};
}

/// Disk automorphism z -> lambda (a - z) / (1 - conj(a) z), |a| < 1, |lambda| = 1.
///
/// With lambda = 1 this is the involution phi_a. Rotations z -> e^{i t} z are
/// represented with a = 0 and lambda = -e^{i t}.
class MoebiusMap {
 public:
  /// Throws ParameterError unless |a| < 1 and |lambda| = 1 (to 1e-9; the
  /// stored lambda is renormalized).
  MoebiusMap(Complex a, Complex lambda);

  static MoebiusMap identity() { return MoebiusMap({0.0, 0.0}, {-1.0, 0.0}); }
  static MoebiusMap rotation(double theta);
  static MoebiusMap involution(Complex a) { return MoebiusMap(a, {1.0, 0.0}); }

  Complex a() const noexcept { return a_; }
  Complex lambda() const noexcept { return lambda_; }

  Complex operator()(Complex z) const;
  Jet2 jet(Complex z) const;

 private:
  Complex a_;
  Complex lambda_;
};

MoebiusMap moebius_inverse(const MoebiusMap& m);

/// m1 o m2, parameters recomputed in closed form.
MoebiusMap compose_moebius(const MoebiusMap& m1, const MoebiusMap& m2);

/// Immutable expression tree denoting an analytic function on the unit disk.
///
/// Copies share the underlying nodes. Evaluation is pure and thread-safe.
class Expr {
 public:
  enum class Kind { Const, Poly, Moebius, Add, Mul, Compose, Recip, Pow };

  static Expr constant(Complex c);
  static Expr poly(std::vector<Complex> coefficients);
  static Expr moebius(const MoebiusMap& m);
  static Expr add(Expr lhs, Expr rhs);
  static Expr mul(Expr lhs, Expr rhs);
  static Expr compose(Expr outer, Expr inner);
  static Expr recip(Expr inner);
  static Expr pow(Expr inner, double exponent);

  /// z -> z
  static Expr identity() { return poly({0.0, 1.0}); }
  /// z -> z^k
  static Expr monomial(int k);

  Kind kind() const noexcept;

  // Node payloads; each is only meaningful for the matching kind.
  Complex constant_value() const;
  std::span<const Complex> coefficients() const;
  const MoebiusMap& map() const;
  /// First child (lhs, outer, or the single inner child).
  const Expr& first() const;
  /// Second child (rhs or inner of a composition).
  const Expr& second() const;
  double exponent() const;

  /// Throws DomainError / BranchError when a node precondition fails at z.
  Jet2 jet(Complex z) const;
  Complex value(Complex z) const;
  Complex operator()(Complex z) const { return value(z); }

  /// Mini-language rendering, re-parseable by parse_expression.
  std::string to_string() const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline Expr operator+(Expr a, Expr b) { return Expr::add(std::move(a), std::move(b)); }
inline Expr operator*(Expr a, Expr b) { return Expr::mul(std::move(a), std::move(b)); }

/// Shortest round-trip decimal form.
std::string format_double(double x);

}  // namespace wcolab
