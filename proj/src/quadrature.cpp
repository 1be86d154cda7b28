#include "wcolab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include <Eigen/Dense>

#include "wcolab/errors.hpp"

namespace wcolab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

QuadRule make_gauss_legendre_unit(int n) {
  // Roots of P_n by Newton from the Tricomi-type initial guess, then mapped
  // from [-1, 1] to [0, 1].
  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    rule.weights[i] = 0.5 * w;
    rule.weights[n - 1 - i] = 0.5 * w;
  }
  return rule;
}

std::vector<Complex> unit_roots(int n) {
  std::vector<Complex> w(n);
  for (int j = 0; j < n; ++j) w[j] = std::polar(1.0, kTwoPi * j / n);
  return w;
}

}  // namespace

// ---------------------------------------------------------------------------
// GridConfig

std::vector<double> GridConfig::default_sup_radii(double r_max) {
  std::vector<double> radii;
  for (int k = 1; k <= 20; ++k) {
    double r = std::min(1.0 - std::ldexp(1.0, -k), r_max);
    if (radii.empty() || r > radii.back()) radii.push_back(r);
  }
  return radii;
}

void GridConfig::validate() const {
  if (!is_power_of_two(n_theta) || n_theta < 64)
    throw ParameterError("n_theta must be a power of two >= 64");
  if (n_radial < 2) throw ParameterError("n_radial must be >= 2");
  if (!(r_max > 0.0 && r_max < 1.0)) throw ParameterError("r_max must lie in (0, 1)");
  if (sup_radii.empty()) throw ParameterError("sup_radii must not be empty");
  for (std::size_t i = 0; i < sup_radii.size(); ++i) {
    if (!(sup_radii[i] > 0.0 && sup_radii[i] < 1.0))
      throw ParameterError("sup_radii must lie in (0, 1)");
    if (i > 0 && !(sup_radii[i] > sup_radii[i - 1]))
      throw ParameterError("sup_radii must be strictly increasing");
  }
}

GridConfig GridConfig::refined() const {
  GridConfig g = *this;
  g.n_theta *= 2;
  g.n_radial *= 2;
  return g;
}

GridConfig GridConfig::scaled(double factor) const {
  if (!(factor > 0.0)) throw ParameterError("grid scale must be positive");
  GridConfig g = *this;
  int target = static_cast<int>(std::lround(n_theta * factor));
  int n = 64;
  while (n < target) n *= 2;
  g.n_theta = n;
  g.n_radial = std::max(2, static_cast<int>(std::lround(n_radial * factor)));
  return g;
}

GridConfig GridConfig::with_r_max(double r) const {
  GridConfig g = *this;
  g.r_max = r;
  g.sup_radii = default_sup_radii(r);
  g.validate();
  return g;
}

// ---------------------------------------------------------------------------
// rules and grids

const QuadRule& gauss_legendre_unit(int n) {
  static std::mutex mutex;
  static std::map<int, QuadRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre_unit(n)).first;
  return it->second;
}

AreaGrid area_grid(const GridConfig& cfg) {
  const QuadRule& rule = gauss_legendre_unit(cfg.n_radial);
  std::vector<Complex> roots = unit_roots(cfg.n_theta);
  AreaGrid grid;
  grid.points.reserve(rule.nodes.size() * roots.size());
  grid.weights.reserve(rule.nodes.size() * roots.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double r = std::sqrt(rule.nodes[i]);
    double w = rule.weights[i] / cfg.n_theta;
    for (Complex u : roots) {
      grid.points.push_back(r * u);
      grid.weights.push_back(w);
    }
  }
  return grid;
}

double circle_mean(const PointFunction& g, double r, int n) {
  if (r == 0.0) return g(Complex(0.0));
  double sum = 0.0;
  for (int j = 0; j < n; ++j) sum += g(std::polar(r, kTwoPi * j / n));
  return sum / n;
}

double integral_mean(const Expr& f, double p, double r, const GridConfig& cfg) {
  if (!(p >= 1.0)) throw ParameterError("integral mean needs p >= 1");
  if (!(r >= 0.0 && r < 1.0)) throw ParameterError("integral mean needs 0 <= r < 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (int j = 0; j < cfg.n_theta; ++j) m = std::max(m, std::abs(f(std::polar(r, kTwoPi * j / cfg.n_theta))));
    return m;
  }
  if (p == 2.0) return std::sqrt(circle_mean([&](Complex z) { return std::norm(f(z)); }, r, cfg.n_theta));
  double mean = circle_mean([&](Complex z) { return std::pow(std::abs(f(z)), p); }, r, cfg.n_theta);
  return std::pow(mean, 1.0 / p);
}

double area_integral(const PointFunction& g, const GridConfig& cfg) {
  const QuadRule& rule = gauss_legendre_unit(cfg.n_radial);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    total += rule.weights[i] * circle_mean(g, std::sqrt(rule.nodes[i]), cfg.n_theta);
  return total;
}

const QuadRule& gauss_jacobi_unit(int n, double exponent) {
  if (!(exponent > -1.0) || !std::isfinite(exponent)) throw ParameterError("Jacobi exponent must be > -1");
  if (exponent == 0.0) return gauss_legendre_unit(n);
  static std::mutex mutex;
  static std::map<std::pair<int, double>, QuadRule> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(n, exponent);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  // Golub-Welsch for the weight (1 - x)^a on [-1, 1], then t = (1 + x)/2.
  const double a = exponent, b = 0.0;
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    double s = 2.0 * k + a + b;
    J(k, k) = k == 0 ? (b - a) / (a + b + 2.0) : (b * b - a * a) / (s * (s + 2.0));
    if (k + 1 < n) {
      double m = k + 1.0, sm = 2.0 * m + a + b;
      double beta = 4.0 * m * (m + a) * (m + b) * (m + a + b) / (sm * sm * (sm + 1.0) * (sm - 1.0));
      J(k, k + 1) = J(k + 1, k) = std::sqrt(beta);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(J);
  QuadRule rule;
  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    double v = eig.eigenvectors()(0, k);
    rule.nodes.push_back(0.5 * (1.0 + eig.eigenvalues()(k)));
    rule.weights.push_back(v * v);
    total += v * v;
  }
  for (double& w : rule.weights) w /= total;  // (e + 1) Integral (1 - t)^e dt = 1
  return cache.emplace(key, std::move(rule)).first->second;
}

double weighted_radial_integral(const RadialFunction& h, double exponent, const GridConfig& cfg) {
  const QuadRule& rule = gauss_jacobi_unit(cfg.n_radial, exponent);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) total += rule.weights[i] * h(std::sqrt(rule.nodes[i]));
  return total;
}

std::vector<double> scan_radii(const GridConfig& cfg) {
  std::vector<double> radii = cfg.sup_radii;
  for (int k = 0; k < 32; ++k) radii.push_back(k / 32.0);
  radii.push_back(cfg.r_max);
  std::erase_if(radii, [&](double r) { return r > cfg.r_max; });
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return radii;
}

// ---------------------------------------------------------------------------
// local searches

namespace detail {

PlaneSearch maximize_in_disk(const PointFunction& g, Complex start, double step, double radius,
                             int max_iterations) {
  auto clip = [radius](Complex z) {
    double m = std::abs(z);
    return m > radius ? z * (radius / m) : z;
  };
  struct Vertex {
    Complex z;
    double v;
  };
  auto make = [&](Complex z) {
    z = clip(z);
    return Vertex{z, g(z)};
  };
  std::array<Vertex, 3> s{make(start), make(start + step), make(start + Complex(0.0, step))};
  auto by_value = [](const Vertex& a, const Vertex& b) { return a.v > b.v; };

  for (int iter = 0; iter < max_iterations; ++iter) {
    std::sort(s.begin(), s.end(), by_value);
    double spread = s[0].v - s[2].v;
    double size = std::max(std::abs(s[1].z - s[0].z), std::abs(s[2].z - s[0].z));
    if (size < 1e-11 || (size < 1e-7 && spread <= 1e-15 * std::max(1.0, std::abs(s[0].v)))) break;

    Complex centroid = 0.5 * (s[0].z + s[1].z);
    Vertex reflected = make(centroid + (centroid - s[2].z));
    if (reflected.v > s[0].v) {
      Vertex expanded = make(centroid + 2.0 * (centroid - s[2].z));
      s[2] = expanded.v > reflected.v ? expanded : reflected;
    } else if (reflected.v > s[1].v) {
      s[2] = reflected;
    } else {
      Vertex contracted = reflected.v > s[2].v ? make(centroid + 0.5 * (reflected.z - centroid))
                                               : make(centroid + 0.5 * (s[2].z - centroid));
      if (contracted.v > std::max(reflected.v, s[2].v)) {
        s[2] = contracted;
      } else {
        s[1] = make(s[0].z + 0.5 * (s[1].z - s[0].z));
        s[2] = make(s[0].z + 0.5 * (s[2].z - s[0].z));
      }
    }
  }
  std::sort(s.begin(), s.end(), by_value);
  return {s[0].z, s[0].v};
}

std::pair<double, double> golden_maximize(const RadialFunction& h, double lo, double hi, int iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double hc = h(c), hd = h(d);
  for (int i = 0; i < iterations && b - a > 1e-15; ++i) {
    if (hc > hd) {
      b = d;
      d = c;
      hd = hc;
      c = b - inv_phi * (b - a);
      hc = h(c);
    } else {
      a = c;
      c = d;
      hc = hd;
      d = a + inv_phi * (b - a);
      hd = h(d);
    }
  }
  return hc > hd ? std::pair{c, hc} : std::pair{d, hd};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// sup engines

SupResult sup_over_disk(const PointFunction& g, const GridConfig& cfg) {
  const std::vector<double> radii = scan_radii(cfg);
  const int n = cfg.n_theta;
  const std::vector<Complex> roots = unit_roots(n);

  // values[i][j]; ring 0 is the center when radii[0] == 0.
  std::vector<std::vector<double>> values(radii.size());
  SupResult best{-kInfinity, {}};
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] == 0.0) {
      values[i].assign(1, g(Complex(0.0)));
    } else {
      values[i].resize(n);
      for (int j = 0; j < n; ++j) values[i][j] = g(radii[i] * roots[j]);
    }
    for (std::size_t j = 0; j < values[i].size(); ++j)
      if (values[i][j] > best.value) best = {values[i][j], radii[i] * roots[values[i].size() == 1 ? 0 : j]};
  }

  struct Candidate {
    double v;
    std::size_t i;
    int j;
  };
  std::vector<Candidate> candidates;
  auto at = [&](std::size_t i, int j) {
    const auto& ring = values[i];
    return ring.size() == 1 ? ring[0] : ring[static_cast<std::size_t>((j % n + n) % n)];
  };
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const int m = static_cast<int>(values[i].size());
    for (int j = 0; j < m; ++j) {
      double v = values[i][j];
      bool is_max = true;
      if (m == 1) {
        if (i + 1 < radii.size())
          for (double w : values[i + 1]) is_max = is_max && v >= w;
      } else {
        for (int di = -1; di <= 1 && is_max; ++di) {
          if ((di < 0 && i == 0) || (di > 0 && i + 1 == radii.size())) continue;
          for (int dj = -1; dj <= 1; ++dj) {
            if (di == 0 && dj == 0) continue;
            if (at(i + di, j + dj) > v) {
              is_max = false;
              break;
            }
          }
        }
      }
      if (is_max) candidates.push_back({v, i, j});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) { return a.v > b.v; });
  if (candidates.size() > 6) candidates.resize(6);

  for (const Candidate& c : candidates) {
    double r = radii[c.i];
    double dr = std::max(c.i > 0 ? r - radii[c.i - 1] : 0.0, c.i + 1 < radii.size() ? radii[c.i + 1] - r : 0.0);
    double step = 0.5 * std::max(dr, r * kTwoPi / n);
    Complex start = values[c.i].size() == 1 ? Complex(0.0) : r * roots[c.j];
    auto found = detail::maximize_in_disk(g, start, step, cfg.r_max);
    if (found.value > best.value) best = {found.value, found.argmax};
  }
  return best;
}

SupResult sup_over_radius(const RadialFunction& h, const GridConfig& cfg) {
  const std::vector<double> radii = scan_radii(cfg);
  std::size_t best_i = 0;
  double best_v = -kInfinity;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    double v = h(radii[i]);
    if (v > best_v) {
      best_v = v;
      best_i = i;
    }
  }
  double lo = best_i > 0 ? radii[best_i - 1] : radii[0];
  double hi = best_i + 1 < radii.size() ? radii[best_i + 1] : radii[best_i];
  SupResult out{best_v, radii[best_i]};
  if (hi > lo) {
    auto [r, v] = detail::golden_maximize(h, lo, hi);
    if (v > out.value) out = {v, r};
  }
  return out;
}

TaylorCoefficients taylor_coefficients(const Expr& f, int count, double r, const GridConfig& cfg) {
  const int n = cfg.n_theta;
  if (count < 1 || count > n / 2) throw ParameterError("coefficient count must lie in [1, n_theta/2]");
  if (!(r > 0.0 && r <= cfg.r_max)) throw ParameterError("extraction radius must lie in (0, r_max]");
  const std::vector<Complex> roots = unit_roots(n);
  std::vector<Complex> samples(n);
  for (int j = 0; j < n; ++j) samples[j] = f(r * roots[j]);

  TaylorCoefficients out;
  out.coefficients.resize(count);
  out.ill_conditioned = std::pow(r, count) < 1e-12;
  for (int k = 0; k < count; ++k) {
    Complex sum = 0.0;
    for (int j = 0; j < n; ++j) sum += samples[j] * std::conj(roots[(static_cast<long>(j) * k) % n]);
    out.coefficients[k] = sum / (n * std::pow(r, k));
  }
  return out;
}

}  // namespace wcolab
