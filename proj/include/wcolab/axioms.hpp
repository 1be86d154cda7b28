#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wcolab/analytic.hpp"
#include "wcolab/operators.hpp"
#include "wcolab/quadrature.hpp"
#include "wcolab/spaces.hpp"

namespace wcolab {

/// Outcome of one axiom check. passed == false always comes with witnesses.
struct AxiomReport {
  std::string axiom;  ///< "A1" .. "A6"
  SpaceSpec space;
  bool passed = false;
  bool unsupported = false;  ///< the axiom does not apply to this family (A6 only)
  std::vector<std::pair<std::string, double>> measured;
  std::vector<std::string> witnesses;

  std::optional<double> value(const std::string& key) const;
};

/// z^0..z^4, six random polynomials and four f_lambda probes.
std::vector<Expr> axiom_family(std::uint64_t seed = kDefaultSeed);

/// Point evaluation: max |f(z)| / ||f|| on each circle against 1.05 (1 + pointeval_bound).
AxiomReport check_a1(const SpaceSpec& space, const std::vector<Expr>& family, const std::vector<double>& radii,
                     const GridConfig& cfg);

/// ||1|| = 1 within 1e-9.
AxiomReport check_a2(const SpaceSpec& space, const GridConfig& cfg);

/// Shift: S = max ||chi f|| / ||f||, finite and stable under grid refinement.
AxiomReport check_a3(const SpaceSpec& space, const std::vector<Expr>& family, const GridConfig& cfg);

/// Power multipliers: ||f u^alpha|| against the explicit chain for the family.
AxiomReport check_a4(const SpaceSpec& space, const Expr& u, const Expr& f, double alpha, const GridConfig& cfg);

/// Automorphisms: C = max ||f o phi_a|| / ||f||, finite, stable and below the
/// known ceiling where one exists.
AxiomReport check_a5(const SpaceSpec& space, Complex a, const std::vector<Expr>& family, const GridConfig& cfg);

/// Translation invariance of p and the |f(0)| + p(f) decomposition. Throws
/// UnsupportedSpace without the A6 form.
AxiomReport check_a6(const SpaceSpec& space, const std::vector<Expr>& family, const std::vector<Complex>& constants,
                     const GridConfig& cfg);

/// A1..A6 with the default probes; A6 is reported as unsupported where it
/// does not apply.
std::vector<AxiomReport> run_all(const SpaceSpec& space, const GridConfig& cfg, std::uint64_t seed = kDefaultSeed);

/// Ceiling 1 + sqrt(K) for ||chi f|| / ||f|| in BMOA, where
/// K = Integral (1 + sqrt(2) atanh|z|)^2 dA.
double bmoa_shift_constant();

}  // namespace wcolab
