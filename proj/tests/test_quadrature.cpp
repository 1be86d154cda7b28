#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "wcolab/errors.hpp"
#include "wcolab/quadrature.hpp"

using namespace wcolab;

TEST_CASE("Gauss-Legendre on [0,1] is exact for low degree") {
  for (int n : {2, 5, 16, 64, 128}) {
    const QuadRule& q = gauss_legendre_unit(n);
    REQUIRE(q.nodes.size() == static_cast<std::size_t>(n));
    for (int k = 0; k < std::min(2 * n, 40); ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += q.weights[i] * std::pow(q.nodes[i], k);
      CHECK(std::abs(s - 1.0 / (k + 1)) < 1e-14);
    }
    for (double x : q.nodes) CHECK((x > 0.0 && x < 1.0));
  }
  CHECK(&gauss_legendre_unit(16) == &gauss_legendre_unit(16));
}

TEST_CASE("area integrals") {
  GridConfig cfg;
  CHECK(std::abs(area_integral([](Complex) { return 1.0; }, cfg) - 1.0) < 1e-14);
  for (int k = 0; k <= 10; ++k) {
    // Integral |z|^(2k) dA = 1/(k+1)
    double v = area_integral([k](Complex z) { return std::pow(std::norm(z), k); }, cfg);
    CHECK(std::abs(v - 1.0 / (k + 1)) < 1e-13);
  }
  AreaGrid g = area_grid(cfg);
  CHECK(g.points.size() == static_cast<std::size_t>(cfg.n_theta * cfg.n_radial));
}

TEST_CASE("Parseval on circles") {
  std::mt19937_64 rng(11);
  GridConfig cfg;
  for (int i = 0; i < 30; ++i) {
    Expr f = gen::random_poly(rng, 12);
    double r = std::uniform_real_distribution<double>(0.1, 0.999)(rng);
    double want = 0.0;
    auto c = f.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) want += std::norm(c[k]) * std::pow(r, 2.0 * k);
    double got = circle_mean([&](Complex z) { return std::norm(f(z)); }, r, cfg.n_theta);
    CHECK(std::abs(got - want) < 1e-10 * std::max(1.0, want));
    CHECK(std::abs(integral_mean(f, 2.0, r, cfg) - std::sqrt(want)) < 1e-10);
  }
}

TEST_CASE("integral means") {
  GridConfig cfg;
  Expr chi = Expr::identity();
  CHECK(std::abs(integral_mean(chi, kInfinity, 0.7, cfg) - 0.7) < 1e-15);
  CHECK(std::abs(integral_mean(chi, 1.0, 0.7, cfg) - 0.7) < 1e-14);
  // M_1(r, 1 + z) = (2/pi) E-type integral; check monotonicity instead
  Expr f = Expr::poly({1.0, 1.0});
  double prev = 0.0;
  for (double r : {0.1, 0.5, 0.9, 0.99}) {
    double m = integral_mean(f, 1.0, r, cfg);
    CHECK(m >= prev);
    prev = m;
  }
}

TEST_CASE("weighted radial integrals") {
  GridConfig cfg;
  for (double e : {-0.5, 0.0, 1.0, 3.5}) {
    CHECK(std::abs(weighted_radial_integral([](double) { return 1.0; }, e, cfg) - 1.0) < 1e-14);
    // (e+1) Integral_0^1 (1-t)^e t dt = 1/(e+2)
    double v = weighted_radial_integral([](double r) { return r * r; }, e, cfg);
    CHECK(std::abs(v - 1.0 / (e + 2.0)) < 1e-12);
  }
}

TEST_CASE("Gauss-Jacobi weights") {
  for (double e : {-0.5, 0.5, 1.0, 2.0, 3.5}) {
    const QuadRule& q = gauss_jacobi_unit(32, e);
    for (int k = 0; k < 30; ++k) {
      // (e + 1) Integral_0^1 (1 - t)^e t^k dt = (e + 1) B(k + 1, e + 1)
      double want = (e + 1.0) * std::exp(std::lgamma(k + 1.0) + std::lgamma(e + 1.0) - std::lgamma(k + e + 2.0));
      double got = 0.0;
      for (int i = 0; i < 32; ++i) got += q.weights[i] * std::pow(q.nodes[i], k);
      CHECK(std::abs(got - want) < 1e-13);
    }
  }
  CHECK(&gauss_jacobi_unit(16, 0.0) == &gauss_legendre_unit(16));
  CHECK_THROWS_AS(gauss_jacobi_unit(16, -1.0), ParameterError);
}

TEST_CASE("sup engines") {
  GridConfig cfg;
  SupResult s = sup_over_disk([](Complex z) { return std::abs(z); }, cfg);
  CHECK(std::abs(s.value - cfg.r_max) < 1e-15);
  // (1 - r^2) r peaks at r = 1/sqrt(3)
  SupResult t = sup_over_disk([](Complex z) { return (1.0 - std::norm(z)) * std::abs(z); }, cfg);
  CHECK(std::abs(t.value - 2.0 / (3.0 * std::sqrt(3.0))) < 1e-12);
  CHECK(std::abs(std::abs(t.argmax) - 1.0 / std::sqrt(3.0)) < 1e-5);
  // off-grid angle: |z - 0.5 e^{0.123i}| has its max on the boundary opposite
  Complex c = std::polar(0.5, 0.123);
  SupResult u = sup_over_disk([c](Complex z) { return 1.0 / (1e-3 + std::abs(z - c)); }, cfg);
  CHECK(u.value <= 1e3);
  CHECK(u.value > 1e3 * (1.0 - 1e-8));
  auto r = sup_over_radius([](double x) { return x * std::exp(-4.0 * x); }, cfg);
  CHECK(std::abs(r.value - 0.25 / std::exp(1.0)) < 1e-14);
  CHECK(scan_radii(cfg).back() == cfg.r_max);
}

TEST_CASE("Taylor coefficient round trip") {
  std::mt19937_64 rng(5);
  GridConfig cfg;
  for (int i = 0; i < 20; ++i) {
    Expr f = gen::random_poly(rng, 12);
    auto c = f.coefficients();
    TaylorCoefficients t = taylor_coefficients(f, 16, 0.9, cfg);
    CHECK_FALSE(t.ill_conditioned);
    for (std::size_t k = 0; k < 16; ++k) {
      Complex want = k < c.size() ? c[k] : Complex(0.0);
      CHECK(std::abs(t.coefficients[k] - want) < 1e-10);
    }
  }
  CHECK(taylor_coefficients(Expr::identity(), 256, 0.5, cfg).ill_conditioned);
  CHECK_THROWS_AS(taylor_coefficients(Expr::identity(), 257, 0.5, cfg), ParameterError);
  CHECK_THROWS_AS(taylor_coefficients(Expr::identity(), 4, 1.0, cfg), ParameterError);
}

TEST_CASE("grid configuration") {
  GridConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.sup_radii.size() == 20);
  CHECK(cfg.sup_radii.front() == 0.5);
  CHECK(cfg.sup_radii.back() == cfg.r_max);
  CHECK(cfg.refined().n_theta == 1024);
  CHECK(cfg.refined().n_radial == 128);
  CHECK(cfg.scaled(0.5).n_theta == 256);
  CHECK(cfg.scaled(0.5).n_radial == 32);
  CHECK(cfg.scaled(2.0).n_theta == 1024);
  CHECK(cfg.with_r_max(0.99).sup_radii.back() == 0.99);

  GridConfig bad = cfg;
  bad.n_theta = 100;
  CHECK_THROWS_AS(bad.validate(), ParameterError);
  bad = cfg;
  bad.n_radial = 1;
  CHECK_THROWS_AS(bad.validate(), ParameterError);
  bad = cfg;
  bad.sup_radii = {0.5, 0.4};
  CHECK_THROWS_AS(bad.validate(), ParameterError);
  CHECK_THROWS_AS(cfg.with_r_max(1.0), ParameterError);
}
