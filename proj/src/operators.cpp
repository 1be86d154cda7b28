#include "wcolab/operators.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "wcolab/errors.hpp"

namespace wcolab {

WcoSymbols make_wco(Expr F, Expr phi, const GridConfig& cfg) {
  const Complex phi0 = phi(0.0);
  double f_max = std::abs(F(0.0));
  double phi_spread = 0.0;
  const int n = cfg.n_theta;
  for (double r : cfg.sup_radii) {
    for (int j = 0; j < n; ++j) {
      Complex z = std::polar(r, 2.0 * std::numbers::pi * j / n);
      Complex w = phi(z);
      if (!(std::abs(w) < 1.0))
        throw DomainError("composition symbol is not a self-map of the disk at z = " + format_double(z.real()) +
                          (z.imag() < 0 ? "" : "+") + format_double(z.imag()) + "i");
      phi_spread = std::max(phi_spread, std::abs(w - phi0));
      f_max = std::max(f_max, std::abs(F(z)));
    }
  }
  if (phi_spread < 1e-12) throw ParameterError("composition symbol is constant");
  if (f_max < 1e-14) throw ParameterError("multiplication symbol vanishes identically");
  return {std::move(F), std::move(phi)};
}

Expr apply(const WcoSymbols& w, const Expr& f) { return Expr::mul(w.F, Expr::compose(f, w.phi)); }

WcoSymbols compose_wco(const WcoSymbols& outer, const WcoSymbols& inner) {
  // W1 W2 f = F1 * (F2 o phi1) * (f o phi2 o phi1)
  return {Expr::mul(outer.F, Expr::compose(inner.F, outer.phi)), Expr::compose(inner.phi, outer.phi)};
}

FiniteSection finite_section(const WcoSymbols& w, int N, const GridConfig& cfg, double radius) {
  if (N < 1 || N > cfg.n_theta / 2) throw ParameterError("section dimension must lie in [1, n_theta/2]");
  FiniteSection s;
  s.dimension = N;
  s.radius = radius;
  s.entries.resize(N, N);
  for (int k = 0; k < N; ++k) {
    TaylorCoefficients c = taylor_coefficients(apply(w, Expr::monomial(k)), N, radius, cfg);
    s.ill_conditioned = s.ill_conditioned || c.ill_conditioned;
    for (int j = 0; j < N; ++j) s.entries(j, k) = c.coefficients[j];
  }
  return s;
}

double isometry_defect(const WcoSymbols& w, const SpaceSpec& space, const std::vector<Expr>& family,
                       const GridConfig& cfg) {
  if (family.empty()) throw DegenerateInput("isometry defect needs a nonempty family");
  double defect = 0.0;
  for (const Expr& f : family) {
    double nf = norm(space, f, cfg).total;
    if (nf < 1e-14) throw DegenerateInput("family member " + f.to_string() + " has zero norm");
    double nw = norm(space, apply(w, f), cfg).total;
    defect = std::max(defect, std::abs(nw / nf - 1.0));
  }
  return defect;
}

double condition_number(const FiniteSection& s) {
  if (s.dimension < 2) throw ParameterError("condition number needs N >= 2");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s.entries);
  const auto& sv = svd.singularValues();
  double smallest = sv(sv.size() - 1);
  if (smallest < 1e-300) throw SingularMatrix("section matrix is numerically singular");
  return sv(0) / smallest;
}

std::vector<Expr> random_polynomials(int count, std::uint64_t seed, int max_degree) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degree(1, max_degree);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Expr> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::vector<Complex> c(static_cast<std::size_t>(degree(rng)) + 1);
    for (Complex& x : c) {
      double r = std::sqrt(unit(rng));
      x = std::polar(r, 2.0 * std::numbers::pi * unit(rng));
    }
    out.push_back(Expr::poly(std::move(c)));
  }
  return out;
}

std::vector<Expr> probe_family(int count) {
  std::vector<Expr> out;
  for (int k = 0; k < count; ++k)
    out.push_back(Expr::poly({1.0, std::polar(1.0, 2.0 * std::numbers::pi * k / count)}));
  return out;
}

std::vector<Expr> default_defect_family(std::uint64_t seed) {
  std::vector<Expr> out;
  for (int k = 0; k <= 8; ++k) out.push_back(Expr::monomial(k));
  for (Expr& p : random_polynomials(30, seed)) out.push_back(std::move(p));
  for (Expr& p : probe_family(8)) out.push_back(std::move(p));
  return out;
}

std::string section_csv(const FiniteSection& s) {
  std::ostringstream out;
  for (int j = 0; j < s.dimension; ++j) {
    for (int k = 0; k < s.dimension; ++k) {
      if (k > 0) out << ',';
      out << format_double(s.entries(j, k).real()) << ',' << format_double(s.entries(j, k).imag());
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace wcolab
