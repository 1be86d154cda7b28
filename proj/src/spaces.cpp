#include "wcolab/spaces.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

#include "wcolab/errors.hpp"

namespace wcolab {

namespace {

bool finite_at_least_one(double p) { return p >= 1.0 && std::isfinite(p); }

std::string format_param(double x) { return std::isinf(x) ? std::string("inf") : format_double(x); }

double parse_number(std::string_view s) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
    return v;
  };
  s = trim(s);
  if (s == "inf" || s == "infinity") return kInfinity;
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParameterError("bad numeric parameter '" + std::string(s) + "' in space spec");
  return x;
}

std::vector<double> split_params(std::string_view s) {
  std::vector<double> out;
  while (true) {
    auto comma = s.find(',');
    out.push_back(parse_number(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

// --- Bloch-type seminorm engines --------------------------------------------

double sup_weighted_derivative(const Expr& f, const std::function<double(double)>& weight,
                               const GridConfig& cfg) {
  return sup_over_disk([&](Complex z) { return weight(std::abs(z)) * std::abs(f.jet(z).df); }, cfg).value;
}

double bmoa_star_seminorm(const Expr& f, const GridConfig& cfg) {
  // I(a) = Integral |f'|^2 (1 - |phi_a|^2) dA, with
  // 1 - |phi_a(z)|^2 = (1 - |a|^2)(1 - |z|^2) / |1 - conj(a) z|^2.
  AreaGrid grid = area_grid(cfg);
  const std::size_t n = grid.points.size();
  std::vector<double> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex z = grid.points[i];
    q[i] = grid.weights[i] * std::norm(f.jet(z).df) * (1.0 - std::norm(z));
  }
  auto integral = [&](Complex a) {
    Complex ac = std::conj(a);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += q[i] / std::norm(1.0 - ac * grid.points[i]);
    return (1.0 - std::norm(a)) * s;
  };

  constexpr std::array<double, 5> kRadii{0.3, 0.6, 0.8, 0.9, 0.95};
  constexpr int kAngles = 16;
  constexpr double kAMax = 0.98;
  struct Sample {
    Complex a;
    double v;
  };
  std::vector<Sample> samples{{0.0, integral(0.0)}};
  for (double r : kRadii)
    for (int k = 0; k < kAngles; ++k) {
      Complex a = std::polar(r, 2.0 * std::numbers::pi * k / kAngles);
      samples.push_back({a, integral(a)});
    }
  std::sort(samples.begin(), samples.end(), [](const Sample& x, const Sample& y) { return x.v > y.v; });
  double best = samples.front().v;
  for (std::size_t k = 0; k < std::min<std::size_t>(2, samples.size()); ++k) {
    auto found = detail::maximize_in_disk(integral, samples[k].a, 0.05, kAMax, 200);
    best = std::max(best, found.value);
  }
  return std::sqrt(std::max(best, 0.0));
}

double besov_seminorm(const Expr& f, double p, double alpha, const GridConfig& cfg) {
  auto mean = [&](double r) {
    if (p == 2.0) return circle_mean([&](Complex z) { return std::norm(f.jet(z).df); }, r, cfg.n_theta);
    return circle_mean([&](Complex z) { return std::pow(std::abs(f.jet(z).df), p); }, r, cfg.n_theta);
  };
  return std::pow(weighted_radial_integral(mean, alpha, cfg), 1.0 / p);
}

// |f''| has cone kinks at the zeros of f''; the trapezoid rule in theta is
// the slow direction there, so the angular grid is 4x finer.
double second_derivative_area_norm(const Expr& f, const GridConfig& cfg) {
  GridConfig fine = cfg;
  fine.n_theta *= 4;
  return area_integral([&](Complex z) { return std::abs(f.jet(z).d2f); }, fine);
}

// --- pointwise bounds ------------------------------------------------------

/// Integral_0^r (1 - rho^2)^-beta d rho in the three-case closed/explicit form.
double bloch_increment(double beta, double r) {
  if (beta == 1.0) return 0.5 * std::log((1.0 + r) / (1.0 - r));
  if (beta < 1.0) return 0.5 * std::beta(0.5, 1.0 - beta);  // Integral_0^1
  // beta > 1: C / (1 - r^2)^(beta - 1) with C = sup_r (1 - r^2)^(beta-1) Integral_0^r.
  // Under rho = tanh s the ratio is R(S) = Integral_0^S (cosh s / cosh S)^m ds, m = 2 beta - 2.
  static std::mutex mutex;
  static std::map<double, double> cache;
  double c = 0.0;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(beta);
    if (it != cache.end()) c = it->second;
  }
  if (c == 0.0) {
    const double m = 2.0 * beta - 2.0;
    const double h = 1e-3;
    double ratio = 0.0, best = 0.0;
    for (double s = 0.0; s < 60.0; s += h) {
      double shrink = std::pow(std::cosh(s) / std::cosh(s + h), m);
      auto g = [&](double t) { return std::pow(std::cosh(t) / std::cosh(s + h), m); };
      double piece = h / 6.0 * (g(s) + 4.0 * g(s + 0.5 * h) + g(s + h));
      ratio = ratio * shrink + piece;
      best = std::max(best, ratio);
    }
    c = std::max(best, 1.0 / m);
    std::lock_guard lock(mutex);
    cache[beta] = c;
  }
  return c / std::pow(1.0 - r * r, beta - 1.0);
}

/// C_eps / (1 - r^2)^eps with eps = 0.1 and C_eps = sup_r (1 - r^2)^eps I(r),
/// I(r) = Integral_0^r d rho / ((1 - rho^2) log^gamma(2 / (1 - rho^2))).
double log_bloch_increment(double gamma, double r) {
  constexpr double kEps = 0.1;
  static std::mutex mutex;
  static std::map<double, double> cache;
  double c = 0.0;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(gamma);
    if (it != cache.end()) c = it->second;
  }
  if (c == 0.0) {
    // rho = tanh s: d rho / (1 - rho^2) = ds, 1 - rho^2 = sech^2 s.
    auto log_cosh = [](double s) { return s + std::log1p(std::exp(-2.0 * s)) - std::log(2.0); };
    auto integrand = [&](double s) { return std::pow(std::log(2.0) + 2.0 * log_cosh(s), -gamma); };
    const double h = 1e-2;
    double integral = 0.0, best = 0.0;
    for (double s = 0.0; s < 400.0; s += h) {
      integral += h / 6.0 * (integrand(s) + 4.0 * integrand(s + 0.5 * h) + integrand(s + h));
      double scaled = integral * std::exp(-2.0 * kEps * log_cosh(s + h));
      best = std::max(best, scaled);
    }
    c = best;
    std::lock_guard lock(mutex);
    cache[gamma] = c;
  }
  return c / std::pow(1.0 - r * r, kEps);
}

/// |f(z)| <= ||f||_{H(p,q,alpha)} * inf_{r<R<1} (1 - R^2)^-alpha (1 - r^2/R^2)^(-1/p).
double mixed_growth(double p, double alpha, double r) {
  if (r == 0.0) return 1.0;
  if (std::isinf(p)) return std::pow(1.0 - r * r, -alpha);
  auto bound = [&](double u) {
    double big_r = r + (1.0 - r) * u;
    return std::pow(1.0 - big_r * big_r, -alpha) * std::pow(1.0 - r * r / (big_r * big_r), -1.0 / p);
  };
  auto [u, neg] = detail::golden_maximize([&](double u) { return -bound(u); }, 1e-12, 1.0 - 1e-12, 200);
  return -neg;
}

}  // namespace

// ---------------------------------------------------------------------------
// SpaceSpec

void SpaceSpec::validate() const {
  switch (family) {
    case Family::Hinf:
    case Family::BMOA:
    case Family::BesovMin:
      return;
    case Family::Hardy:
      if (!finite_at_least_one(p)) throw ParameterError("hardy needs 1 <= p < inf");
      return;
    case Family::Bergman:
    case Family::Besov:
      if (!finite_at_least_one(p)) throw ParameterError("bergman/besov need 1 <= p < inf");
      if (!(alpha > -1.0) || !std::isfinite(alpha)) throw ParameterError("bergman/besov need alpha > -1");
      return;
    case Family::MixedNorm:
      if (!(p >= 1.0)) throw ParameterError("mixed norm needs p >= 1");
      if (!(q >= 1.0)) throw ParameterError("mixed norm needs q >= 1");
      if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ParameterError("mixed norm needs alpha > 0");
      return;
    case Family::Growth:
      if (!(gamma > 0.0) || !std::isfinite(gamma)) throw ParameterError("growth needs gamma > 0");
      return;
    case Family::Bloch:
      if (!(beta > 0.0) || !std::isfinite(beta)) throw ParameterError("bloch needs beta > 0");
      return;
    case Family::LogBloch:
      if (!std::isfinite(gamma)) throw ParameterError("logbloch needs a finite gamma");
      return;
  }
}

bool SpaceSpec::has_a6_form() const {
  switch (family) {
    case Family::Bloch:
    case Family::LogBloch:
    case Family::BMOA:
    case Family::Besov:
    case Family::BesovMin:
      return true;
    default:
      return false;
  }
}

bool SpaceSpec::multipliers_are_hinf() const {
  switch (family) {
    case Family::Hinf:
    case Family::Hardy:
    case Family::Bergman:
    case Family::MixedNorm:
    case Family::Growth:
      return true;
    default:
      return false;
  }
}

std::string SpaceSpec::to_string() const {
  switch (family) {
    case Family::Hinf:
      return "hinf";
    case Family::Hardy:
      return "hardy:" + format_param(p);
    case Family::Bergman:
      return "bergman:" + format_param(p) + "," + format_param(alpha);
    case Family::MixedNorm:
      return "mixed:" + format_param(p) + "," + format_param(q) + "," + format_param(alpha);
    case Family::Growth:
      return "growth:" + format_param(gamma);
    case Family::Bloch:
      return "bloch:" + format_param(beta);
    case Family::LogBloch:
      return "logbloch:" + format_param(gamma);
    case Family::BMOA:
      return "bmoa";
    case Family::Besov:
      return "besov:" + format_param(p) + "," + format_param(alpha);
    case Family::BesovMin:
      return "b1";
  }
  return {};
}

SpaceSpec SpaceSpec::parse(std::string_view text) {
  auto colon = text.find(':');
  std::string_view name = text.substr(0, colon);
  std::vector<double> args;
  if (colon != std::string_view::npos) args = split_params(text.substr(colon + 1));
  auto want = [&](std::size_t n) {
    if (args.size() != n)
      throw ParameterError("space '" + std::string(name) + "' takes " + std::to_string(n) + " parameter(s)");
  };
  SpaceSpec s;
  if (name == "hinf") {
    want(0);
    s = hinf();
  } else if (name == "hardy") {
    want(1);
    s = hardy(args[0]);
  } else if (name == "bergman") {
    want(2);
    s = bergman(args[0], args[1]);
  } else if (name == "mixed") {
    want(3);
    s = mixed(args[0], args[1], args[2]);
  } else if (name == "growth") {
    want(1);
    s = growth(args[0]);
  } else if (name == "bloch") {
    want(1);
    s = bloch(args[0]);
  } else if (name == "logbloch") {
    want(1);
    s = log_bloch(args[0]);
  } else if (name == "bmoa") {
    want(0);
    s = bmoa();
  } else if (name == "besov") {
    want(2);
    s = besov(args[0], args[1]);
  } else if (name == "b1") {
    want(0);
    s = besov_min();
  } else {
    throw ParameterError("unknown space family '" + std::string(name) + "'");
  }
  s.validate();
  return s;
}

// ---------------------------------------------------------------------------
// norms

double bloch_weight(double beta, double r) { return std::pow(1.0 - r * r, beta); }

double log_bloch_weight(double gamma, double r) {
  double t = 1.0 - r * r;
  return t * std::pow(std::log(2.0 / t), gamma);
}

SupResult bloch_multiplier_quantity(const Expr& u, const GridConfig& cfg) {
  return sup_over_disk([&](Complex z) { return log_bloch_weight(1.0, std::abs(z)) * std::abs(u.jet(z).df); },
                       cfg);
}

double seminorm(const SpaceSpec& space, const Expr& f, const GridConfig& cfg) {
  space.validate();
  switch (space.family) {
    case Family::Bloch:
      return sup_weighted_derivative(f, [b = space.beta](double r) { return bloch_weight(b, r); }, cfg);
    case Family::LogBloch:
      return sup_weighted_derivative(f, [g = space.gamma](double r) { return log_bloch_weight(g, r); }, cfg);
    case Family::BMOA:
      return bmoa_star_seminorm(f, cfg);
    case Family::Besov:
      return besov_seminorm(f, space.p, space.alpha, cfg);
    case Family::BesovMin:
      return std::abs(f.jet(0.0).df) + second_derivative_area_norm(f, cfg);
    default:
      throw UnsupportedSpace("space " + space.to_string() + " has no |f(0)| + p(f) norm form");
  }
}

NormBreakdown norm(const SpaceSpec& space, const Expr& f, const GridConfig& cfg) {
  space.validate();
  NormBreakdown out;
  out.has_a6_form = space.has_a6_form();
  if (out.has_a6_form) {
    Jet2 at0 = f.jet(0.0);
    if (space.family == Family::BesovMin) {
      out.point_part = std::abs(at0.f) + std::abs(at0.df);
      out.seminorm_part = second_derivative_area_norm(f, cfg);
    } else {
      out.point_part = std::abs(at0.f);
      out.seminorm_part = seminorm(space, f, cfg);
    }
    out.total = out.point_part + out.seminorm_part;
    return out;
  }

  double value = 0.0;
  switch (space.family) {
    case Family::Hinf:
      value = sup_over_disk([&](Complex z) { return std::abs(f(z)); }, cfg).value;
      break;
    case Family::Hardy:
      // integral means are nondecreasing in r
      value = integral_mean(f, space.p, cfg.sup_radii.back(), cfg);
      break;
    case Family::Bergman: {
      double p = space.p;
      auto mean = [&](double r) { return std::pow(integral_mean(f, p, r, cfg), p); };
      value = std::pow(weighted_radial_integral(mean, space.alpha, cfg), 1.0 / p);
      break;
    }
    case Family::MixedNorm: {
      double p = space.p, q = space.q, a = space.alpha;
      if (std::isinf(q)) {
        value = sup_over_radius([&](double r) { return std::pow(1.0 - r * r, a) * integral_mean(f, p, r, cfg); },
                                cfg)
                    .value;
      } else {
        auto mean = [&](double r) { return std::pow(integral_mean(f, p, r, cfg), q); };
        value = std::pow(weighted_radial_integral(mean, a * q - 1.0, cfg), 1.0 / q);
      }
      break;
    }
    case Family::Growth: {
      double g = space.gamma;
      value = sup_over_disk([&](Complex z) { return std::pow(1.0 - std::norm(z), g) * std::abs(f(z)); }, cfg).value;
      break;
    }
    default:
      break;
  }
  out.seminorm_part = value;
  out.total = value;
  return out;
}

double pointeval_bound(const SpaceSpec& space, double r) {
  space.validate();
  if (!(r >= 0.0 && r < 1.0)) throw ParameterError("pointeval_bound needs 0 <= r < 1");
  switch (space.family) {
    case Family::Hinf:
      return 0.0;
    case Family::Hardy:
      return std::pow(1.0 - r * r, -1.0 / space.p) - 1.0;
    case Family::Bergman:
      return std::pow(1.0 - r * r, -(2.0 + space.alpha) / space.p) - 1.0;
    case Family::MixedNorm:
      return mixed_growth(space.p, space.alpha, r) - 1.0;
    case Family::Growth:
      return std::pow(1.0 - r * r, -space.gamma) - 1.0;
    case Family::Bloch:
      return bloch_increment(space.beta, r);
    case Family::LogBloch:
      return log_bloch_increment(space.gamma, r);
    case Family::BMOA:
      // (1 - |a|^2)|f'(a)| <= sqrt(2) p_*(f): the first Taylor coefficient of f o phi_a
      return std::sqrt(2.0) * bloch_increment(1.0, r);
    case Family::Besov:
      // f' in A^p_alpha gives |f'(z)| <= p(f) (1 - |z|^2)^-((2 + alpha)/p)
      return bloch_increment((2.0 + space.alpha) / space.p, r);
    case Family::BesovMin: {
      // |f''| <= p(f)/(1-|z|^2)^2, integrated twice along the radius
      double k = -0.25 * std::log(1.0 - r * r) +
                 0.25 * ((1.0 + r) * std::log1p(r) + (r < 1.0 ? (1.0 - r) * std::log1p(-r) : 0.0));
      return std::max(r, k);
    }
  }
  return 0.0;
}

}  // namespace wcolab
