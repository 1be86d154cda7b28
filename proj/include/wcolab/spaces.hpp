#pragma once

#include <string>
#include <string_view>

#include "wcolab/analytic.hpp"
#include "wcolab/quadrature.hpp"

namespace wcolab {

enum class Family { Hinf, Hardy, Bergman, MixedNorm, Growth, Bloch, LogBloch, BMOA, Besov, BesovMin };

/// One space family together with its real parameters. Unused parameters are
/// left at zero. MixedNorm accepts q = kInfinity (the sup variant) and
/// p = kInfinity.
struct SpaceSpec {
  Family family = Family::Hinf;
  double p = 0.0;
  double q = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  static SpaceSpec hinf() { return {Family::Hinf}; }
  static SpaceSpec hardy(double p) { return {Family::Hardy, p}; }
  static SpaceSpec bergman(double p, double alpha) { return {Family::Bergman, p, 0.0, alpha}; }
  static SpaceSpec mixed(double p, double q, double alpha) { return {Family::MixedNorm, p, q, alpha}; }
  static SpaceSpec growth(double gamma) { return {Family::Growth, 0, 0, 0, 0, gamma}; }
  static SpaceSpec bloch(double beta) { return {Family::Bloch, 0, 0, 0, beta}; }
  static SpaceSpec log_bloch(double gamma) { return {Family::LogBloch, 0, 0, 0, 0, gamma}; }
  static SpaceSpec bmoa() { return {Family::BMOA}; }
  static SpaceSpec besov(double p, double alpha) { return {Family::Besov, p, 0.0, alpha}; }
  static SpaceSpec besov_min() { return {Family::BesovMin}; }

  /// Throws ParameterError when a parameter is outside its range.
  void validate() const;

  /// True exactly for Bloch, LogBloch, BMOA, Besov and BesovMin.
  bool has_a6_form() const;

  /// True for the families with M(X) = H^inf (boundedness is the multiplier test).
  bool multipliers_are_hinf() const;

  /// CLI syntax: hinf, hardy:p, bergman:p,a, mixed:p,q,a, growth:g, bloch:b,
  /// logbloch:g, bmoa, besov:p,a, b1.
  std::string to_string() const;
  static SpaceSpec parse(std::string_view text);

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

/// total = point_part + seminorm_part when has_a6_form; otherwise point_part is
/// zero and seminorm_part carries the whole norm.
struct NormBreakdown {
  double total = 0.0;
  double point_part = 0.0;
  double seminorm_part = 0.0;
  bool has_a6_form = false;
};

NormBreakdown norm(const SpaceSpec& space, const Expr& f, const GridConfig& cfg);

/// Translation-invariant seminorm p with ||f|| = |f(0)| + p(f). For B^1 this
/// is |f'(0)| + Integral |f''| dA. Throws UnsupportedSpace without the A6 form.
double seminorm(const SpaceSpec& space, const Expr& f, const GridConfig& cfg);

/// B(r) such that |f(z)| <= (1 + B(|z|)) ||f|| for every f in the space.
///
/// For the |f(0)| + p(f) families B bounds the increment |f(z) - f(0)| / ||f||;
/// for the others it is the point-evaluation growth rate minus one.
double pointeval_bound(const SpaceSpec& space, double r);

/// Sup over the disk of (1 - |z|^2) log(2 / (1 - |z|^2)) |u'(z)|, the weighted
/// derivative quantity of the Bloch multiplier criterion.
SupResult bloch_multiplier_quantity(const Expr& u, const GridConfig& cfg);

/// Radial weights of the Bloch-type seminorms.
double bloch_weight(double beta, double r);
double log_bloch_weight(double gamma, double r);

}  // namespace wcolab
