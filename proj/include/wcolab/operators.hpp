#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "wcolab/analytic.hpp"
#include "wcolab/quadrature.hpp"
#include "wcolab/spaces.hpp"

namespace wcolab {

/// Seed of the reproducible random test families.
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Symbols of W_{F,phi} f = F * (f o phi).
struct WcoSymbols {
  Expr F;
  Expr phi;
};

/// Builds symbols after checking that phi maps every grid point into the
/// disk, phi is not constant and F is not identically zero. Throws DomainError
/// or ParameterError.
WcoSymbols make_wco(Expr F, Expr phi, const GridConfig& cfg = {});

/// Mul(F, Compose(f, phi)).
Expr apply(const WcoSymbols& w, const Expr& f);

/// Symbols of outer * inner (apply inner first).
WcoSymbols compose_wco(const WcoSymbols& outer, const WcoSymbols& inner);

/// Leading N x N block of the coefficient matrix: entry (j, k) is the j-th
/// Taylor coefficient of W(z^k), extracted on the circle |z| = radius.
struct FiniteSection {
  int dimension = 0;
  double radius = 0.0;
  Eigen::MatrixXcd entries;
  bool ill_conditioned = false;
};

inline constexpr double kDefaultSectionRadius = 0.9;

FiniteSection finite_section(const WcoSymbols& w, int N, const GridConfig& cfg,
                             double radius = kDefaultSectionRadius);

/// max over the family of | ||W f|| / ||f|| - 1 |. Throws DegenerateInput if some
/// ||f|| < 1e-14.
double isometry_defect(const WcoSymbols& w, const SpaceSpec& space, const std::vector<Expr>& family,
                       const GridConfig& cfg);

/// Largest over smallest singular value. Throws SingularMatrix when the
/// smallest one is below 1e-300 and ParameterError for N < 2.
double condition_number(const FiniteSection& s);

/// Polynomials of degree 1..max_degree with coefficients uniform in the unit disk.
std::vector<Expr> random_polynomials(int count, std::uint64_t seed, int max_degree = 12);

/// f_lambda(z) = 1 + lambda z for `count` equispaced unimodular lambda.
std::vector<Expr> probe_family(int count = 8);

/// Monomials z^0..z^8, 30 random polynomials and the 8 probes f_lambda.
std::vector<Expr> default_defect_family(std::uint64_t seed = kDefaultSeed);

/// Section matrix as CSV: one row per line, "re,im" pairs separated by commas.
std::string section_csv(const FiniteSection& s);

}  // namespace wcolab
