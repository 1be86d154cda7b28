#include "wcolab/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wcolab/characterization.hpp"
#include "wcolab/errors.hpp"

namespace wcolab {

namespace {

constexpr double kSlack = 1.05;      // relative allowance on every explicit ceiling
constexpr double kStability = 1.1;   // max ratio between grid levels

std::string key(const std::string& name, double x) { return name + "_" + format_double(x); }

std::string complex_text(Complex z) {
  return format_double(z.real()) + (std::signbit(z.imag()) ? "" : "+") + format_double(z.imag()) + "i";
}

bool stable(double coarse, double fine) {
  if (!std::isfinite(coarse) || !std::isfinite(fine)) return false;
  double lo = std::min(coarse, fine), hi = std::max(coarse, fine);
  return lo > 0.0 ? hi / lo < kStability : hi == 0.0;
}

double total(const SpaceSpec& s, const Expr& f, const GridConfig& cfg) { return norm(s, f, cfg).total; }

/// Worst ratio ||T f|| / ||f|| over the family and the index of the worst member.
template <typename Map>
std::pair<double, std::size_t> worst_ratio(const SpaceSpec& s, const std::vector<Expr>& family, Map&& map,
                                           const GridConfig& cfg) {
  double worst = -1.0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    double nf = total(s, family[i], cfg);
    if (!(nf > 1e-14)) throw DegenerateInput("family member " + family[i].to_string() + " has zero norm");
    double r = total(s, map(family[i]), cfg) / nf;
    if (!(r <= worst)) {  // also picks up NaN
      worst = r;
      at = i;
    }
  }
  return {worst, at};
}

/// Known ceiling for ||f o phi_a|| / ||f||.
std::optional<double> a5_ceiling(const SpaceSpec& s, double r) {
  double q = (1.0 + r) / (1.0 - r);
  switch (s.family) {
    case Family::Hinf:
      return 1.0;
    case Family::Hardy:
      return std::pow(q, 1.0 / s.p);
    case Family::Bergman:
      return std::pow(q, (2.0 + s.alpha) / s.p);
    case Family::Growth:
      return std::pow(q, s.gamma);
    case Family::Bloch:
      // |f(a)| + p(f) <= |f(0)| + (1 + B(|a|)) p(f); the seminorm is conformally invariant
      if (s.beta == 1.0) return 1.0 + pointeval_bound(s, r);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::optional<double> a3_ceiling(const SpaceSpec& s) {
  if (s.multipliers_are_hinf()) return 1.0;  // |z f| <= |f| pointwise and these norms are monotone
  if (s.family == Family::BMOA) return bmoa_shift_constant();
  return std::nullopt;
}

AxiomReport start(const char* axiom, const SpaceSpec& space) {
  AxiomReport r;
  r.axiom = axiom;
  r.space = space;
  return r;
}

void finish(AxiomReport& r) {
  r.passed = r.witnesses.empty();
}

}  // namespace

std::optional<double> AxiomReport::value(const std::string& name) const {
  for (const auto& [k, v] : measured)
    if (k == name) return v;
  return std::nullopt;
}

std::vector<Expr> axiom_family(std::uint64_t seed) {
  std::vector<Expr> out;
  for (int k = 0; k <= 4; ++k) out.push_back(Expr::monomial(k));
  for (Expr& p : random_polynomials(6, seed)) out.push_back(std::move(p));
  for (Expr& p : probe_family(4)) out.push_back(std::move(p));
  return out;
}

double bmoa_shift_constant() {
  // r = tanh s: Integral_0^1 g(r) 2r dr = Integral_0^inf g(tanh s) 2 tanh s sech^2 s ds
  auto integrand = [](double s) {
    double c = std::cosh(s);
    double w = 1.0 + std::sqrt(2.0) * s;
    return w * w * 2.0 * std::tanh(s) / (c * c);
  };
  const double h = 1e-3;
  double k = 0.0;
  for (double s = 0.0; s < 40.0; s += h) k += h / 6.0 * (integrand(s) + 4.0 * integrand(s + 0.5 * h) + integrand(s + h));
  return 1.0 + std::sqrt(k);
}

AxiomReport check_a1(const SpaceSpec& space, const std::vector<Expr>& family, const std::vector<double>& radii,
                     const GridConfig& cfg) {
  AxiomReport rep = start("A1", space);
  if (family.empty()) throw DegenerateInput("A1 needs a nonempty family");
  std::vector<double> norms;
  for (const Expr& f : family) norms.push_back(total(space, f, cfg));
  const int n = cfg.n_theta;
  for (double r : radii) {
    double estimate = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < family.size(); ++i)
      for (int j = 0; j < n; ++j) {
        double v = std::abs(family[i](std::polar(r, 2.0 * std::numbers::pi * j / n))) / norms[i];
        if (v > estimate) {
          estimate = v;
          worst = i;
        }
      }
    double bound = 1.0 + pointeval_bound(space, r);
    rep.measured.emplace_back(key("estimate_r", r), estimate);
    rep.measured.emplace_back(key("bound_r", r), bound);
    if (!(estimate <= kSlack * bound))
      rep.witnesses.push_back("r=" + format_double(r) + " f=" + family[worst].to_string() + " estimate " +
                              format_double(estimate) + " exceeds " + format_double(bound));
  }
  finish(rep);
  return rep;
}

AxiomReport check_a2(const SpaceSpec& space, const GridConfig& cfg) {
  AxiomReport rep = start("A2", space);
  double one = total(space, Expr::constant(1.0), cfg);
  rep.measured.emplace_back("norm_one", one);
  if (!(std::abs(one - 1.0) <= 1e-9)) rep.witnesses.push_back("||1|| = " + format_double(one));
  finish(rep);
  return rep;
}

AxiomReport check_a3(const SpaceSpec& space, const std::vector<Expr>& family, const GridConfig& cfg) {
  AxiomReport rep = start("A3", space);
  if (family.empty()) throw DegenerateInput("A3 needs a nonempty family");
  const Expr chi = Expr::identity();
  auto shift = [&](const Expr& f) { return Expr::mul(chi, f); };
  auto [s, at] = worst_ratio(space, family, shift, cfg);
  GridConfig fine = cfg.refined();
  double s_fine = total(space, shift(family[at]), fine) / total(space, family[at], fine);
  rep.measured.emplace_back("shift_bound", s);
  rep.measured.emplace_back("shift_bound_refined", s_fine);
  if (!stable(s, s_fine))
    rep.witnesses.push_back("f=" + family[at].to_string() + " unstable shift ratio " + format_double(s) + " vs " +
                            format_double(s_fine));
  if (auto c = a3_ceiling(space)) {
    rep.measured.emplace_back("shift_ceiling", *c);
    if (!(s <= kSlack * *c))
      rep.witnesses.push_back("f=" + family[at].to_string() + " shift ratio " + format_double(s) + " exceeds " +
                              format_double(*c));
  }
  finish(rep);
  return rep;
}

AxiomReport check_a4(const SpaceSpec& space, const Expr& u, const Expr& f, double alpha, const GridConfig& cfg) {
  AxiomReport rep = start("A4", space);
  space.validate();
  const bool second_order = space.family == Family::BesovMin;
  const bool derivative_type = space.has_a6_form();
  const double min_alpha = second_order ? 2.0 : 1.0;
  if (!(alpha > min_alpha) || alpha == std::floor(alpha))
    throw ParameterError("A4 needs a non-integer alpha above " + format_double(min_alpha));

  // hypothesis sampled at n = 1, 2, 3
  Expr power = u;
  std::vector<double> fu_norm;
  for (int k = 1; k <= 3; ++k) {
    double v = total(space, Expr::mul(f, power), cfg);
    fu_norm.push_back(v);
    rep.measured.emplace_back("norm_fu^" + std::to_string(k), v);
    if (!std::isfinite(v)) rep.witnesses.push_back("||f u^" + std::to_string(k) + "|| is not finite");
    power = Expr::mul(power, u);
  }

  Expr u_alpha = Expr::pow(u, alpha);
  validate_expression(u_alpha, cfg);
  double left = total(space, Expr::mul(f, u_alpha), cfg);
  double nf = total(space, f, cfg);
  double m = sup_over_disk([&](Complex z) { return std::abs(u(z)); }, cfg).value;

  double right = 0.0;
  if (second_order) {
    // (u^a f)'' = a(a-1)/2 u^(a-2) (f u^2)'' - a(a-2) u^(a-1) (f u)'' + (a-1)(a-2)/2 u^a f''
    // and (u^a f)' = (1-a) u^a f' + a u^(a-1) (f u)'
    double c2 = alpha * (alpha - 1.0) / 2.0;
    double c1 = alpha * std::max(std::abs(alpha - 2.0), 1.0);
    double c0 = std::max({1.0, alpha - 1.0, std::abs((alpha - 1.0) * (alpha - 2.0)) / 2.0});
    right = c2 * std::pow(m, alpha - 2.0) * fu_norm[1] + c1 * std::pow(m, alpha - 1.0) * fu_norm[0] +
            c0 * std::pow(m, alpha) * nf;
  } else if (derivative_type) {
    right = std::pow(m, alpha) * nf + alpha * std::pow(m, alpha - 1.0) * fu_norm[0] +
            (alpha - 1.0) * std::pow(m, alpha) * nf;
  } else {
    right = std::pow(m, alpha) * nf;
  }
  rep.measured.emplace_back("alpha", alpha);
  rep.measured.emplace_back("u_sup", m);
  rep.measured.emplace_back("left", left);
  rep.measured.emplace_back("right", right);
  rep.measured.emplace_back("slack", right - left);
  if (!(left <= kSlack * right))
    rep.witnesses.push_back("u=" + u.to_string() + " f=" + f.to_string() + " ||f u^alpha|| = " + format_double(left) +
                            " exceeds chain " + format_double(right));
  finish(rep);
  return rep;
}

AxiomReport check_a5(const SpaceSpec& space, Complex a, const std::vector<Expr>& family, const GridConfig& cfg) {
  AxiomReport rep = start("A5", space);
  if (family.empty()) throw DegenerateInput("A5 needs a nonempty family");
  const Expr phi = Expr::moebius(MoebiusMap::involution(a));
  auto compose = [&](const Expr& f) { return Expr::compose(f, phi); };
  auto [c, at] = worst_ratio(space, family, compose, cfg);
  GridConfig fine = cfg.refined();
  double c_fine = total(space, compose(family[at]), fine) / total(space, family[at], fine);
  const std::string tag = "_a=" + complex_text(a);
  rep.measured.emplace_back("composition_bound" + tag, c);
  rep.measured.emplace_back("composition_bound_refined" + tag, c_fine);
  if (!stable(c, c_fine))
    rep.witnesses.push_back("a=" + complex_text(a) + " f=" + family[at].to_string() + " unstable ratio " +
                            format_double(c) + " vs " + format_double(c_fine));
  if (auto ceiling = a5_ceiling(space, std::abs(a))) {
    rep.measured.emplace_back("composition_ceiling" + tag, *ceiling);
    if (!(c <= kSlack * *ceiling))
      rep.witnesses.push_back("a=" + complex_text(a) + " f=" + family[at].to_string() + " ratio " +
                              format_double(c) + " exceeds " + format_double(*ceiling));
  }
  if (space.family == Family::Bloch && space.beta == 1.0) {
    double worst = 0.0;
    for (const Expr& f : family) {
      double p = seminorm(space, f, cfg);
      if (p == 0.0) continue;
      double d = std::abs(seminorm(space, compose(f), cfg) - p) / p;
      if (d > worst) worst = d;
      if (!(d <= 1e-6))
        rep.witnesses.push_back("a=" + complex_text(a) + " f=" + f.to_string() + " seminorm changed by " +
                                format_double(d) + " (relative)");
    }
    rep.measured.emplace_back("seminorm_invariance_defect" + tag, worst);
  }
  finish(rep);
  return rep;
}

AxiomReport check_a6(const SpaceSpec& space, const std::vector<Expr>& family, const std::vector<Complex>& constants,
                     const GridConfig& cfg) {
  if (!space.has_a6_form()) throw UnsupportedSpace("space " + space.to_string() + " has no |f(0)| + p(f) norm form");
  AxiomReport rep = start("A6", space);
  double shift_defect = 0.0, split_defect = 0.0;
  auto check_split = [&](const Expr& g) {
    NormBreakdown nb = norm(space, g, cfg);
    double direct = std::abs(g(0.0)) + seminorm(space, g, cfg);
    double d = std::abs(nb.total - direct) / std::max(1.0, nb.total);
    split_defect = std::max(split_defect, d);
    if (!(d <= 1e-12)) rep.witnesses.push_back("f=" + g.to_string() + " norm is not |f(0)| + p(f)");
  };
  for (const Expr& f : family) {
    double p = seminorm(space, f, cfg);
    check_split(f);
    for (Complex c : constants) {
      Expr shifted = Expr::add(f, Expr::constant(c));
      double d = std::abs(seminorm(space, shifted, cfg) - p);
      shift_defect = std::max(shift_defect, d);
      if (!(d < 1e-10))
        rep.witnesses.push_back("f=" + f.to_string() + " C=" + complex_text(c) + " |p(f+C) - p(f)| = " +
                                format_double(d));
      check_split(shifted);
    }
  }
  rep.measured.emplace_back("translation_defect", shift_defect);
  rep.measured.emplace_back("decomposition_defect", split_defect);
  finish(rep);
  return rep;
}

std::vector<AxiomReport> run_all(const SpaceSpec& space, const GridConfig& cfg, std::uint64_t seed) {
  space.validate();
  const std::vector<Expr> family = axiom_family(seed);
  std::vector<AxiomReport> out;
  out.push_back(check_a1(space, family, {0.0, 0.5, 0.9, 0.99}, cfg));
  out.push_back(check_a2(space, cfg));
  out.push_back(check_a3(space, family, cfg));
  out.push_back(check_a4(space, Expr::poly({2.0 / 3.0, 1.0 / 3.0}), Expr::monomial(2), 2.5, cfg));

  AxiomReport a5 = start("A5", space);
  for (Complex a : {Complex(0.3, 0.0), Complex(0.0, 0.5), Complex(-0.7, 0.0)}) {
    AxiomReport one = check_a5(space, a, family, cfg);
    a5.measured.insert(a5.measured.end(), one.measured.begin(), one.measured.end());
    a5.witnesses.insert(a5.witnesses.end(), one.witnesses.begin(), one.witnesses.end());
  }
  finish(a5);
  out.push_back(std::move(a5));

  if (space.has_a6_form()) {
    out.push_back(check_a6(space, family, {5.0, Complex(-2.0, 3.0), Complex(0.0, 1000.0)}, cfg));
  } else {
    AxiomReport a6 = start("A6", space);
    a6.unsupported = true;
    a6.witnesses.push_back("UnsupportedSpace: " + space.to_string() + " has no |f(0)| + p(f) norm form");
    out.push_back(std::move(a6));
  }
  return out;
}

}  // namespace wcolab
