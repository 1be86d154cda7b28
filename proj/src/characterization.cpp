#include "wcolab/characterization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "wcolab/errors.hpp"

namespace wcolab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Calls visit(z) on {0} and sup_radii x n_theta.
template <typename Visit>
void for_each_grid_point(const GridConfig& cfg, Visit&& visit) {
  visit(Complex(0.0));
  const int n = cfg.n_theta;
  for (double r : cfg.sup_radii)
    for (int j = 0; j < n; ++j) visit(std::polar(r, kTwoPi * j / n));
}

double grid_min_modulus(const Expr& f, const GridConfig& cfg) {
  double m = kInfinity;
  for_each_grid_point(cfg, [&](Complex z) { m = std::min(m, std::abs(f(z))); });
  return m;
}

bool is_numerically_constant(const Expr& u, const GridConfig& cfg) {
  const Complex u0 = u(0.0);
  double spread = 0.0;
  for_each_grid_point(cfg, [&](Complex z) { spread = std::max(spread, std::abs(u(z) - u0)); });
  return spread <= 1e-12 * std::max(1.0, std::abs(u0));
}

/// Least-squares slope of the circle maxima of q against log(1/(1-r)) on the
/// last six sup radii, relative to the last value.
double boundary_trend(const PointFunction& q, const GridConfig& cfg) {
  const auto& radii = cfg.sup_radii;
  const std::size_t take = std::min<std::size_t>(6, radii.size());
  std::vector<double> xs, ys;
  for (std::size_t k = radii.size() - take; k < radii.size(); ++k) {
    double r = radii[k];
    double m = 0.0;
    for (int j = 0; j < cfg.n_theta; ++j) m = std::max(m, q(std::polar(r, kTwoPi * j / cfg.n_theta)));
    if (!std::isfinite(m)) return kInfinity;
    xs.push_back(-std::log1p(-r));
    ys.push_back(m);
  }
  if (xs.size() < 2) return 0.0;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= xs.size();
  my /= ys.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  double slope = sxx > 0.0 ? sxy / sxx : 0.0;
  return slope / std::max(std::abs(ys.back()), 1e-300);
}

}  // namespace

std::string to_string(MultiplierStatus s) {
  switch (s) {
    case MultiplierStatus::YesExact:
      return "Yes_Exact";
    case MultiplierStatus::NoExact:
      return "No_Exact";
    case MultiplierStatus::YesEmpirical:
      return "Yes_Empirical";
    case MultiplierStatus::Inconclusive:
      return "Inconclusive";
  }
  return {};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Invertible:
      return "Invertible";
    case Verdict::NotInvertible:
      return "NotInvertible";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return {};
}

int count_zeros(const Expr& f, double r, const GridConfig& cfg, double contour_tol) {
  if (!(r > 0.0 && r < 1.0)) throw ParameterError("zero count radius must lie in (0, 1)");
  auto sample = [&](double t) {
    Complex v = f(std::polar(r, t));
    if (std::abs(v) < contour_tol) throw ContourZero("function nearly vanishes on |z| = " + format_double(r));
    return v;
  };
  // Phase increment over [t0, t1], bisecting until each step is unambiguous.
  auto arc = [&](auto&& self, double t0, Complex v0, double t1, Complex v1, int depth) -> double {
    double step = std::arg(v1 / v0);
    if (std::abs(step) < std::numbers::pi / 4) return step;
    if (depth == 0) throw ContourZero("phase of the function on |z| = " + format_double(r) + " cannot be resolved");
    double tm = 0.5 * (t0 + t1);
    Complex vm = sample(tm);
    return self(self, t0, v0, tm, vm, depth - 1) + self(self, tm, vm, t1, v1, depth - 1);
  };
  const int n = cfg.n_theta;
  std::vector<Complex> values(n);
  for (int j = 0; j < n; ++j) values[j] = sample(kTwoPi * j / n);
  double total = 0.0;
  for (int j = 0; j < n; ++j)
    total += arc(arc, kTwoPi * j / n, values[j], kTwoPi * (j + 1) / n, values[(j + 1) % n], 48);
  return static_cast<int>(std::lround(total / kTwoPi));
}

AutomorphismFit detect_automorphism(const Expr& phi, const GridConfig& cfg, const Tolerances& tol) {
  AutomorphismFit fit;
  fit.zero_count = count_zeros(phi, cfg.r_max, cfg, tol.contour);
  if (fit.zero_count != 1) return fit;

  Complex z = 0.0;
  double best = kInfinity;
  for (double r : scan_radii(cfg))
    for (int j = 0; j < cfg.n_theta; ++j) {
      Complex w = std::polar(r, kTwoPi * j / cfg.n_theta);
      double m = std::abs(phi(w));
      if (m < best) {
        best = m;
        z = w;
      }
    }
  for (int iter = 0; iter < 60; ++iter) {
    Jet2 j = phi.jet(z);
    if (j.df == Complex(0.0)) break;
    Complex step = j.f / j.df;
    Complex next = z - step;
    if (std::abs(next) > cfg.r_max) next *= cfg.r_max / std::abs(next);
    z = next;
    if (std::abs(step) < 1e-16) break;
  }

  // phi'(a) = -lambda / (1 - |a|^2) for lambda (a - z)/(1 - conj(a) z)
  Complex lambda = -phi.jet(z).df * (1.0 - std::norm(z));
  if (std::abs(lambda) < 1e-300) return fit;
  MoebiusMap candidate(z, lambda / std::abs(lambda));
  double residual = 0.0;
  for (double r : scan_radii(cfg))
    for (int j = 0; j < cfg.n_theta; ++j) {
      Complex w = std::polar(r, kTwoPi * j / cfg.n_theta);
      residual = std::max(residual, std::abs(phi(w) - candidate(w)));
    }
  fit.map = candidate;
  fit.residual = residual;
  fit.found = residual <= tol.automorphism;
  return fit;
}

MultiplierVerdict multiplier_test(const Expr& u, const SpaceSpec& space, const GridConfig& cfg,
                                  const Tolerances& tol) {
  space.validate();
  MultiplierVerdict v;
  if (is_numerically_constant(u, cfg)) {
    v.status = MultiplierStatus::YesExact;
    v.measured_constant = std::abs(u(0.0));
    v.criterion = "constant";
    return v;
  }

  auto modulus = [&](Complex z) { return std::abs(u(z)); };
  const bool bloch_one = space.family == Family::Bloch && space.beta == 1.0;
  if (bloch_one || space.multipliers_are_hinf()) {
    double sup_u = sup_over_disk(modulus, cfg).value;
    bool bounded = boundary_trend(modulus, cfg) <= tol.trend_slope && std::isfinite(sup_u);
    if (bloch_one) {
      auto weighted = [&](Complex z) { return log_bloch_weight(1.0, std::abs(z)) * std::abs(u.jet(z).df); };
      double sup_w = bloch_multiplier_quantity(u, cfg).value;
      bounded = bounded && boundary_trend(weighted, cfg) <= tol.trend_slope && std::isfinite(sup_w);
      v.measured_constant = sup_w;
      v.criterion = "hinf+log-weighted-derivative";
    } else {
      v.measured_constant = sup_u;
      v.criterion = "hinf";
    }
    v.status = bounded ? MultiplierStatus::YesExact : MultiplierStatus::NoExact;
    return v;
  }

  double ratio = 0.0;
  for (const Expr& f : default_defect_family()) {
    double nf = norm(space, f, cfg).total;
    ratio = std::max(ratio, norm(space, Expr::mul(u, f), cfg).total / nf);
  }
  v.measured_constant = ratio;
  v.criterion = "empirical-ratio";
  v.status = std::isfinite(ratio) && ratio <= tol.empirical_bound ? MultiplierStatus::YesEmpirical
                                                                  : MultiplierStatus::Inconclusive;
  return v;
}

std::pair<Expr, Expr> inverse_symbols(const WcoSymbols& w, const AutomorphismFit& fit, const GridConfig& cfg) {
  if (!fit.found || !fit.map) throw ParameterError("inverse symbols need a fitted automorphism");
  Expr psi = Expr::moebius(moebius_inverse(*fit.map));
  Expr composed = Expr::compose(w.F, psi);
  if (grid_min_modulus(composed, cfg) < 1e-9)
    throw NonVanishingViolation("multiplication symbol vanishes on the grid disk");
  return {Expr::recip(composed), psi};
}

double roundtrip_residual(const WcoSymbols& w, const WcoSymbols& inverse, const std::vector<Expr>& family,
                          const GridConfig& cfg) {
  double worst = 0.0;
  for (const Expr& f : family) {
    Expr there_and_back = apply(inverse, apply(w, f));
    Expr back_and_there = apply(w, apply(inverse, f));
    for_each_grid_point(cfg, [&](Complex z) {
      Complex fz = f(z);
      worst = std::max({worst, std::abs(there_and_back(z) - fz), std::abs(back_and_there(z) - fz)});
    });
  }
  return worst;
}

InvertibilityReport check_invertible(const WcoSymbols& w, const SpaceSpec& space, const GridConfig& cfg,
                                     const Tolerances& tol) {
  space.validate();
  InvertibilityReport rep;
  rep.automorphism = detect_automorphism(w.phi, cfg, tol);
  rep.F_zero_count = count_zeros(w.F, cfg.r_max, cfg, tol.contour);
  rep.min_modulus = grid_min_modulus(w.F, cfg);
  rep.nonvanishing = rep.F_zero_count == 0 && rep.min_modulus > tol.contour;
  rep.caveat = "zeros of F are counted inside |z| < " + format_double(cfg.r_max) +
               "; zeros closer to the boundary are not detected";

  if (rep.nonvanishing) rep.reciprocal_multiplier = multiplier_test(Expr::recip(w.F), space, cfg, tol);

  if (!rep.automorphism.found || !rep.nonvanishing) {
    rep.verdict = Verdict::NotInvertible;
  } else {
    switch (rep.reciprocal_multiplier->status) {
      case MultiplierStatus::YesExact:
      case MultiplierStatus::YesEmpirical:
        rep.verdict = Verdict::Invertible;
        break;
      case MultiplierStatus::NoExact:
        rep.verdict = Verdict::NotInvertible;
        break;
      case MultiplierStatus::Inconclusive:
        rep.verdict = Verdict::Inconclusive;
        break;
    }
  }

  if (rep.verdict == Verdict::Invertible) {
    auto symbols = inverse_symbols(w, rep.automorphism, cfg);
    WcoSymbols inverse{symbols.first, symbols.second};
    rep.roundtrip_residual = roundtrip_residual(w, inverse, default_defect_family(), cfg);
    rep.inverse_symbols = std::move(symbols);
  }

  for (int n : {8, 16, 32}) {
    double c = kInfinity;
    try {
      c = condition_number(finite_section(w, n, cfg));
    } catch (const SingularMatrix&) {
    }
    rep.section_condition_numbers.emplace_back(n, c);
  }
  return rep;
}

IsometryReport check_isometry(const WcoSymbols& w, const SpaceSpec& space, const GridConfig& cfg,
                              const Tolerances& tol) {
  space.validate();
  if (!space.has_a6_form())
    throw UnsupportedSpace("isometry characterization needs a |f(0)| + p(f) norm; got " + space.to_string());
  IsometryReport rep;
  rep.phi_origin_value = w.phi(0.0);

  double sup_f = sup_over_disk([&](Complex z) { return std::abs(w.F(z)); }, cfg).value;
  double inf_f = -sup_over_disk([&](Complex z) { return -std::abs(w.F(z)); }, cfg).value;
  double p_f = seminorm(space, w.F, cfg);
  rep.F_is_unimodular_const =
      std::abs(sup_f - 1.0) <= tol.unimodular && std::abs(inf_f - 1.0) <= tol.unimodular && p_f < tol.unimodular;

  AutomorphismFit fit = detect_automorphism(w.phi, cfg, tol);
  rep.phi_is_rotation = fit.found && std::abs(fit.map->a()) < tol.rotation;
  rep.surjective_isometry = rep.F_is_unimodular_const && rep.phi_is_rotation;
  rep.measured_defect = isometry_defect(w, space, default_defect_family(), cfg);
  return rep;
}

void validate_expression(const Expr& e, const GridConfig& cfg) {
  auto require_nonvanishing = [&](const Expr& inner, const char* what) {
    int zeros = 0;
    try {
      zeros = count_zeros(inner, cfg.r_max, cfg);
    } catch (const ContourZero&) {
      throw NonVanishingViolation(std::string(what) + " argument nearly vanishes on |z| = r_max");
    }
    if (zeros != 0) throw NonVanishingViolation(std::string(what) + " argument has zeros in the disk");
  };

  switch (e.kind()) {
    case Expr::Kind::Const:
    case Expr::Kind::Poly:
    case Expr::Kind::Moebius:
      return;
    case Expr::Kind::Add:
    case Expr::Kind::Mul:
      validate_expression(e.first(), cfg);
      validate_expression(e.second(), cfg);
      return;
    case Expr::Kind::Compose: {
      validate_expression(e.first(), cfg);
      validate_expression(e.second(), cfg);
      const Expr& inner = e.second();
      for_each_grid_point(cfg, [&](Complex z) {
        if (!(std::abs(inner(z)) < 1.0)) throw DomainError("compose() inner function leaves the unit disk");
      });
      return;
    }
    case Expr::Kind::Recip:
      validate_expression(e.first(), cfg);
      require_nonvanishing(e.first(), "recip()");
      return;
    case Expr::Kind::Pow: {
      validate_expression(e.first(), cfg);
      const Expr& inner = e.first();
      require_nonvanishing(inner, "pow()");
      const int n = cfg.n_theta;
      for (double r : cfg.sup_radii) {
        Complex prev = inner(std::polar(r, 0.0));
        for (int j = 1; j <= n; ++j) {
          Complex cur = inner(std::polar(r, kTwoPi * j / n));
          bool crosses = cur.real() < 0.0 && prev.real() < 0.0 && (cur.imag() > 0.0) != (prev.imag() > 0.0);
          if (crosses || (cur.imag() == 0.0 && cur.real() <= 0.0))
            throw BranchError("pow() argument crosses the principal branch cut");
          prev = cur;
        }
      }
      return;
    }
  }
}

}  // namespace wcolab
