#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "wcolab/analytic.hpp"

namespace wcolab {

/// Closed-grid-disk radius used by every validation and sup-type check.
inline constexpr double kDefaultRMax = 1.0 - 1e-6;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct GridConfig {
  int n_theta = 512;   ///< angular nodes, power of two >= 64
  int n_radial = 64;   ///< Gauss-Legendre nodes in t = r^2
  double r_max = kDefaultRMax;
  std::vector<double> sup_radii = default_sup_radii(kDefaultRMax);

  /// r_k = 1 - 2^-k, k = 1..20, capped at r_max (duplicates dropped).
  static std::vector<double> default_sup_radii(double r_max);

  /// Throws ParameterError unless n_theta is a power of two >= 64, n_radial >= 2,
  /// 0 < r_max < 1 and sup_radii is strictly increasing inside (0, 1).
  void validate() const;

  /// Doubled angular and radial resolution, same radii.
  GridConfig refined() const;

  /// Scaled copy; the scale is applied to n_theta (rounded to a power of two,
  /// at least 64) and n_radial.
  GridConfig scaled(double factor) const;

  /// Replace r_max and recompute the default sup radii.
  GridConfig with_r_max(double r_max) const;
};

using PointFunction = std::function<double(Complex)>;
using RadialFunction = std::function<double(double)>;

/// Gauss-Legendre rule on [0, 1]. Cached per node count; thread-safe.
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const QuadRule& gauss_legendre_unit(int n);

/// Points and weights of the normalized area measure dA = r dr dtheta / pi:
/// Gauss-Legendre in t = r^2 on [0, 1] times the trapezoid rule in theta.
struct AreaGrid {
  std::vector<Complex> points;
  std::vector<double> weights;
};
AreaGrid area_grid(const GridConfig& cfg);

/// M_p(r, f): L^p mean of |f| over the circle of radius r (p = kInfinity gives
/// the maximum modulus on the sampled circle).
double integral_mean(const Expr& f, double p, double r, const GridConfig& cfg);

/// Mean of g over n equispaced points of the circle |z| = r.
double circle_mean(const PointFunction& g, double r, int n);

/// Integral of g against dA over the disk; area_integral(1) = 1.
double area_integral(const PointFunction& g, const GridConfig& cfg);

/// Gauss-Jacobi rule on [0, 1] for the probability weight (e + 1)(1 - t)^e,
/// e > -1; e = 0 returns the Gauss-Legendre rule. Cached; thread-safe.
const QuadRule& gauss_jacobi_unit(int n, double exponent);

/// (e + 1) * Integral_0^1 (1 - r^2)^e h(r) 2r dr with e = exponent > -1, by
/// Gauss-Jacobi in t = r^2. Exact when h(sqrt t) is a polynomial of degree
/// below 2 n_radial.
double weighted_radial_integral(const RadialFunction& h, double exponent, const GridConfig& cfg);

struct SupResult {
  double value = 0.0;
  Complex argmax{};
};

/// Refined grid maximum of g over |z| <= r_max. This is a lower bound for the
/// true supremum: the grid maximum, polished by local 2-D searches started at
/// the best grid local maxima.
SupResult sup_over_disk(const PointFunction& g, const GridConfig& cfg);

/// Same for a function of the radius only, on [0, r_max].
SupResult sup_over_radius(const RadialFunction& h, const GridConfig& cfg);

/// Radii scanned by the sup engines: sup_radii merged with a uniform grid.
std::vector<double> scan_radii(const GridConfig& cfg);

struct TaylorCoefficients {
  std::vector<Complex> coefficients;
  bool ill_conditioned = false;  ///< r^count < 1e-12
};

/// c_k = (2 pi r^k)^-1 * contour integral of f(r e^{it}) e^{-ikt} dt, by a
/// discrete Fourier transform on n_theta points.
TaylorCoefficients taylor_coefficients(const Expr& f, int count, double r, const GridConfig& cfg);

namespace detail {

/// Nelder-Mead maximization in the plane; points are clipped to |z| <= radius.
struct PlaneSearch {
  Complex argmax{};
  double value = 0.0;
};
PlaneSearch maximize_in_disk(const PointFunction& g, Complex start, double step, double radius,
                             int max_iterations = 400);

/// Golden-section maximization of h on [lo, hi].
std::pair<double, double> golden_maximize(const RadialFunction& h, double lo, double hi,
                                          int iterations = 80);

}  // namespace detail

}  // namespace wcolab
