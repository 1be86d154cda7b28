#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wcolab/analytic.hpp"
#include "wcolab/operators.hpp"
#include "wcolab/quadrature.hpp"
#include "wcolab/spaces.hpp"

namespace wcolab {

struct Tolerances {
  double automorphism = 1e-8;  ///< sup residual accepted for a Moebius fit
  double unimodular = 1e-9;    ///< | |F| - 1 | and p(F) for unimodular constants
  double rotation = 1e-9;      ///< |a| of a fitted automorphism that counts as a rotation
  double contour = 1e-9;       ///< min modulus on a zero-count contour
  double trend_slope = 0.05;   ///< relative boundary-trend slope that means divergence
  double empirical_bound = 1e3;
};

/// Argument-principle zero count of f inside |z| < r. Throws ContourZero when
/// min |f| on the circle is below `contour_tol`.
int count_zeros(const Expr& f, double r, const GridConfig& cfg, double contour_tol = 1e-9);

struct AutomorphismFit {
  bool found = false;
  std::optional<MoebiusMap> map;  ///< the candidate, set whenever one was built
  double residual = kInfinity;    ///< sup over the grid of |phi - map|
  int zero_count = 0;
};

AutomorphismFit detect_automorphism(const Expr& phi, const GridConfig& cfg, const Tolerances& tol = {});

enum class MultiplierStatus { YesExact, NoExact, YesEmpirical, Inconclusive };

struct MultiplierVerdict {
  MultiplierStatus status = MultiplierStatus::Inconclusive;
  double measured_constant = 0.0;
  std::string criterion;
};

MultiplierVerdict multiplier_test(const Expr& u, const SpaceSpec& space, const GridConfig& cfg,
                                  const Tolerances& tol = {});

/// G = 1 / (F o phi^-1), psi = phi^-1. Throws NonVanishingViolation when F
/// vanishes on the grid disk and ParameterError when the fit was not found.
std::pair<Expr, Expr> inverse_symbols(const WcoSymbols& w, const AutomorphismFit& fit, const GridConfig& cfg);

enum class Verdict { Invertible, NotInvertible, Inconclusive };

struct InvertibilityReport {
  AutomorphismFit automorphism;
  bool nonvanishing = false;
  double min_modulus = 0.0;  ///< min |F| over the grid disk
  int F_zero_count = 0;
  std::optional<MultiplierVerdict> reciprocal_multiplier;  ///< unset when F vanishes
  Verdict verdict = Verdict::Inconclusive;
  std::optional<std::pair<Expr, Expr>> inverse_symbols;  ///< (G, psi)
  std::optional<double> roundtrip_residual;
  std::vector<std::pair<int, double>> section_condition_numbers;  ///< evidence only
  std::string caveat;
};

InvertibilityReport check_invertible(const WcoSymbols& w, const SpaceSpec& space, const GridConfig& cfg,
                                     const Tolerances& tol = {});

struct IsometryReport {
  bool surjective_isometry = false;
  bool F_is_unimodular_const = false;
  bool phi_is_rotation = false;
  double measured_defect = 0.0;
  Complex phi_origin_value{};
};

/// Throws UnsupportedSpace for spaces without the |f(0)| + p(f) form.
IsometryReport check_isometry(const WcoSymbols& w, const SpaceSpec& space, const GridConfig& cfg,
                              const Tolerances& tol = {});

/// Sup over the grid disk (sup_radii x n_theta) of |W_{G,psi} W_{F,phi} f - f|
/// and |W_{F,phi} W_{G,psi} f - f| over the family.
double roundtrip_residual(const WcoSymbols& w, const WcoSymbols& inverse, const std::vector<Expr>& family,
                          const GridConfig& cfg);

/// Checks the node preconditions of e on the grid: reciprocals and powers of
/// non-vanishing functions (zero count 0 on |z| = r_max), powers off the
/// branch cut, compositions with grid self-maps. Throws the matching error.
void validate_expression(const Expr& e, const GridConfig& cfg);

std::string to_string(MultiplierStatus s);
std::string to_string(Verdict v);

}  // namespace wcolab
