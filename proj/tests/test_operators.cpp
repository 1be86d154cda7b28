#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "doctest.h"
#include "generators.hpp"
#include "wcolab/errors.hpp"
#include "wcolab/operators.hpp"

using namespace wcolab;

namespace {
const GridConfig cfg;
}

TEST_CASE("symbol checks") {
  CHECK_THROWS_AS(make_wco(Expr::constant(1.0), Expr::poly({0.0, 2.0}), cfg), DomainError);
  CHECK_THROWS_AS(make_wco(Expr::constant(1.0), Expr::constant(0.5), cfg), ParameterError);
  CHECK_THROWS_AS(make_wco(Expr::constant(0.0), Expr::identity(), cfg), ParameterError);
  CHECK_NOTHROW(make_wco(Expr::poly({2.0, 1.0}), Expr::moebius(MoebiusMap::involution(0.5)), cfg));
}

TEST_CASE("application and composition are pointwise") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    WcoSymbols w1 = make_wco(gen::random_poly(rng), Expr::moebius(gen::random_moebius(rng)), cfg);
    WcoSymbols w2 = make_wco(gen::random_poly(rng), Expr::mul(Expr::constant(0.5), Expr::moebius(gen::random_moebius(rng))), cfg);
    Expr f = gen::random_poly(rng, 10);
    Complex z = gen::in_disk(rng, 0.95);
    CHECK(std::abs(apply(w1, f)(z) - w1.F(z) * f(w1.phi(z))) < 1e-13);
    Complex both = apply(compose_wco(w1, w2), f)(z);
    CHECK(std::abs(both - apply(w1, apply(w2, f))(z)) < 1e-11 * std::max(1.0, std::abs(both)));
  }
}

TEST_CASE("finite sections of simple operators") {
  SUBCASE("identity") {
    FiniteSection s = finite_section(make_wco(Expr::constant(1.0), Expr::identity(), cfg), 8, cfg);
    CHECK((s.entries - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(std::abs(condition_number(s) - 1.0) < 1e-12);
  }
  SUBCASE("multiplication by 2 + z") {
    FiniteSection s = finite_section(make_wco(Expr::poly({2.0, 1.0}), Expr::identity(), cfg), 6, cfg);
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k) {
        Complex want = j == k ? 2.0 : (j == k + 1 ? 1.0 : 0.0);
        CHECK(std::abs(s.entries(j, k) - want) < 1e-13);
      }
  }
  SUBCASE("rotation and dilation are diagonal") {
    FiniteSection rot = finite_section(make_wco(Expr::constant(1.0), Expr::moebius(MoebiusMap::rotation(0.4)), cfg), 8, cfg);
    FiniteSection dil = finite_section(make_wco(Expr::constant(1.0), Expr::poly({0.0, 0.5}), cfg), 8, cfg);
    for (int k = 0; k < 8; ++k) {
      CHECK(std::abs(rot.entries(k, k) - std::polar(1.0, 0.4 * k)) < 1e-12);
      CHECK(std::abs(dil.entries(k, k) - std::pow(0.5, k)) < 1e-13);
    }
    CHECK(std::abs(condition_number(dil) - 128.0) < 1e-8);
  }
  CHECK_THROWS_AS(finite_section(make_wco(Expr::constant(1.0), Expr::identity(), cfg), 0, cfg), ParameterError);
}

TEST_CASE("condition number edge cases") {
  FiniteSection s;
  s.dimension = 3;
  s.entries = Eigen::MatrixXcd::Zero(3, 3);
  s.entries(0, 0) = 1.0;
  CHECK_THROWS_AS(condition_number(s), SingularMatrix);
  s.dimension = 1;
  s.entries = Eigen::MatrixXcd::Identity(1, 1);
  CHECK_THROWS_AS(condition_number(s), ParameterError);
}

TEST_CASE("isometry defect") {
  WcoSymbols rot = make_wco(Expr::constant(std::polar(1.0, 1.0)), Expr::moebius(MoebiusMap::rotation(0.9)), cfg);
  CHECK(isometry_defect(rot, SpaceSpec::bloch(1.0), default_defect_family(), cfg) < 1e-7);
  // f = 1 + l z under phi_a in Bloch(1): ||f o phi_a|| = |1 + l a| + 1 and ||f|| = 2
  WcoSymbols inv = make_wco(Expr::constant(1.0), Expr::moebius(MoebiusMap::involution(0.3)), cfg);
  double want = 0.0;
  for (int k = 0; k < 8; ++k) want = std::max(want, std::abs((std::abs(1.0 + 0.3 * std::polar(1.0, 2.0 * std::numbers::pi * k / 8)) + 1.0) / 2.0 - 1.0));
  CHECK(std::abs(want - 0.15) < 1e-15);
  CHECK(std::abs(isometry_defect(inv, SpaceSpec::bloch(1.0), probe_family(8), cfg) - want) < 1e-9);
  CHECK_THROWS_AS(isometry_defect(inv, SpaceSpec::bloch(1.0), {}, cfg), DegenerateInput);
  CHECK_THROWS_AS(isometry_defect(inv, SpaceSpec::bloch(1.0), {Expr::constant(0.0)}, cfg), DegenerateInput);
}

TEST_CASE("random families") {
  auto a = random_polynomials(30, kDefaultSeed), b = random_polynomials(30, kDefaultSeed);
  auto c = random_polynomials(30, kDefaultSeed + 1);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].to_string() == b[i].to_string());
    differs = differs || a[i].to_string() != c[i].to_string();
    auto coef = a[i].coefficients();
    CHECK(coef.size() >= 2);
    CHECK(coef.size() <= 13);
    for (Complex x : coef) CHECK(std::abs(x) <= 1.0);
  }
  CHECK(differs);
  CHECK(default_defect_family().size() == 47);
  auto probes = probe_family(8);
  CHECK(std::abs(probes[2](1.0) - Complex(1.0, 1.0)) < 1e-15);
}

TEST_CASE("section csv") {
  FiniteSection s = finite_section(make_wco(Expr::poly({2.0, 1.0}), Expr::identity(), cfg), 2, cfg);
  std::string csv = section_csv(s);
  std::istringstream in(csv);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 3);
  }
  CHECK(rows == 2);
  CHECK(std::abs(std::stod(csv.substr(0, csv.find(','))) - 2.0) < 1e-13);
}
