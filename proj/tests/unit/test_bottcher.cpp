#include "qrb/bottcher.hpp"

#include "qrb/error.hpp"
#include "qrb/log_coords.hpp"
#include "test_support.hpp"

using namespace qrb;
using qrb::test::Gen;

namespace {

// Classical Böttcher coordinate of z^2 + c as the infinite product
// z * prod_j (1 + c / f^j(z)^2)^{1/2^{j+1}}, truncated once the factors are 1.
cplx classical_bottcher(cplx c, cplx z) {
  cplx w = z;
  cplx log_psi = std::log(z);
  double weight = 0.5;
  for (int j = 0; j < 60; ++j) {
    log_psi += weight * std::log(1.0 + c / (w * w));
    w = w * w + c;
    weight *= 0.5;
    if (std::abs(w) > 1e150) break;
  }
  return std::exp(log_psi);
}

}  // namespace

TEST_CASE("solver defaults and validation") {
  const QAMap m(2, 0, 1.0);
  const auto cfg = SolverConfig::defaults_for(m);
  CHECK(cfg.sigma >= std::log(m.escape_radius()) + 1 - 1e-15);
  CHECK(std::abs(m.c()) * std::exp(-2 * cfg.sigma) < 1);
  CHECK_NOTHROW(cfg.validate(m));

  auto bad = cfg;
  bad.sigma = 0;
  CHECK_THROWS_AS(bad.validate(m), Error);
  bad = cfg;
  bad.tol = 0;
  CHECK_THROWS_AS(bad.validate(m), Error);
  bad = cfg;
  bad.alpha = 2.0;
  CHECK_THROWS_AS(bad.validate(m), Error);
  bad = cfg;
  bad.k_max = -1;
  CHECK_THROWS_AS(bad.validate(m), Error);
}

TEST_CASE("F_k is the identity when c = 0") {
  Gen g;
  for (int i = 0; i < 200; ++i) {
    const QAMap m(g.stretch(), 0.0);
    const auto cfg = SolverConfig::defaults_for(m);
    const cplx X{cfg.sigma + g.uniform(0, 3), g.uniform(-10, 10)};
    for (int k : {0, 1, 2, 7, 20}) CHECK(std::abs(F_k(m, cfg, X, k) - X) < 1e-13);
  }
  const QAMap id(1, 0, 0.0);
  CHECK(F_k(id, SolverConfig::defaults_for(id), {3.0, 1.0}, 5) == cplx(3.0, 1.0));
}

TEST_CASE("F_k rejects points left of sigma") {
  const QAMap m(2, 0.3, 1.0);
  const auto cfg = SolverConfig::defaults_for(m);
  CHECK_THROWS_AS(F_k(m, cfg, {cfg.sigma - 0.1, 0.0}, 1), Error);
  CHECK_NOTHROW(F_k(m, cfg, {cfg.sigma, 0.0}, 1));
}

TEST_CASE("F_1 matches the explicit one-step formula") {
  Gen g(2);
  for (int i = 0; i < 200; ++i) {
    const QAMap m(g.stretch(), g.box(3));
    const auto cfg = SolverConfig::defaults_for(m);
    const cplx X{cfg.sigma + g.uniform(0, 3), g.uniform(-5, 5)};
    const cplx Y = f_tilde(m, X) / 2.0;
    CHECK(std::abs(F_k(m, cfg, X, 1) - (Y + xi(m.stretch(), Y))) < 1e-13);
  }
}

TEST_CASE("probe grid") {
  SolverConfig cfg;
  cfg.sigma = 2.5;
  const auto grid = probe_grid(cfg);
  REQUIRE(grid.size() == 16);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    CHECK(grid[j].real() == 2.5);
    CHECK(grid[j].imag() == doctest::Approx(2 * kPi * j / 16));
  }
}

TEST_CASE("successive differences decay super-geometrically") {
  const QAMap m(2, kPi / 6, 1.0);
  const auto d = successive_differences(m, SolverConfig::defaults_for(m), 4);
  REQUIRE(d.size() == 4);
  CHECK(d[0] > d[1]);
  CHECK(d[1] > d[2]);
  CHECK(std::log(d[2]) < 1.8 * std::log(d[1]));
}

TEST_CASE("build examples") {
  CHECK(BottcherCoordinate::build(QAMap(1, 0, 0.0)).k_used() == 0);

  const QAMap m(2, 0, 1.0);
  SolverConfig cfg = SolverConfig::defaults_for(m);
  cfg.sigma = 3;
  cfg.tol = 1e-12;
  const auto b = BottcherCoordinate::build(m, cfg);
  CHECK(b.k_used() <= 8);
  CHECK(b.k_used() >= 1);
  CHECK(b.inner_radius() == doctest::Approx(std::exp(3.0)));

  const auto b2 = BottcherCoordinate::build(QAMap(4, 1.0, {2, 1}));
  for (int j = 0; j < 32; ++j) {
    const cplx z = std::polar(2 * b2.inner_radius(), 2 * kPi * j / 32);
    CHECK(b2.conjugacy_residual(z) / std::abs(b2.map().f(z)) < 1e-12);
  }
}

TEST_CASE("build reports an unreachable tolerance") {
  const QAMap m(2, kPi / 6, 1.0);
  SolverConfig cfg = SolverConfig::defaults_for(m);
  cfg.tol = 1e-30;
  try {
    BottcherCoordinate::build(m, cfg);
    FAIL("expected NoConvergence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoConvergence);
  }
  cfg.tol = 1e-12;
  cfg.k_max = 0;
  CHECK_THROWS_AS(BottcherCoordinate::build(m, cfg), Error);
}

TEST_CASE("psi examples") {
  const auto id = BottcherCoordinate::build(QAMap(3, 0.4, 0.0));
  CHECK(std::abs(id.psi({100, 5}) - cplx(100, 5)) < 1e-12);
  CHECK(id.conjugacy_residual({30, -7}) < 1e-10);
  CHECK_THROWS_AS(id.psi(0.5 * id.inner_radius()), Error);
  try {
    id.psi(id.inner_radius());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOutsideDomain);
  }
}

TEST_CASE("classical case agrees with the product formula") {
  for (cplx c : {cplx(-1, 0), cplx(0.3, 0.5), cplx(-2, 0), cplx(1, -1)}) {
    const auto b = BottcherCoordinate::build(QAMap(1, 0, c));
    for (int j = 0; j < 16; ++j) {
      const cplx z = std::polar(100.0, 2 * kPi * j / 16 + 0.1);
      CHECK(test::rel_err(b.psi(z), classical_bottcher(c, z)) < 1e-12);
    }
    CHECK(b.conjugacy_residual(50.0) < 1e-10 * 2500);
  }
  const auto b = BottcherCoordinate::build(QAMap(1, 0, -1.0));
  CHECK(b.conjugacy_residual(50.0) < 1e-10);
}

TEST_CASE("psi is odd and tangent to the identity") {
  Gen g(4);
  for (int i = 0; i < 20; ++i) {
    const auto b = BottcherCoordinate::build(QAMap(g.stretch(6), g.box(3)));
    double prev = HUGE_VAL;
    for (double r : {1e1, 1e2, 1e3, 1e4}) {
      const cplx z = std::polar(std::max(r, 2 * b.inner_radius()), g.uniform(-kPi, kPi));
      CHECK(std::abs(b.psi(-z) + b.psi(z)) < 1e-12 * std::abs(z));
      const double dev = std::abs(b.psi(z) / z - 1.0);
      CHECK(dev <= prev * 1.01 + 1e-15);
      prev = std::max(dev, 1e-300);
    }
  }
}

TEST_CASE("psi_inverse round trip") {
  const auto b = BottcherCoordinate::build(QAMap(2, kPi / 6, 1.0));
  for (int j = 0; j < 16; ++j) {
    const cplx z = std::polar(3 * b.inner_radius(), 2 * kPi * j / 16);
    CHECK(test::rel_err(b.psi(b.psi_inverse(z)), z) < 1e-12);
  }
}

TEST_CASE("dilatation estimate") {
  const auto id = BottcherCoordinate::build(QAMap(2, 0.2, 0.0));
  CHECK(std::abs(psi_dilatation_estimate(id, {40, 3}, 1e-3)) < 1e-8);

  const auto b = BottcherCoordinate::build(QAMap(2, kPi / 6, 1.0));
  const double m2 = std::abs(psi_dilatation_estimate(b, {100, 0}, 0.1));
  const double m3 = std::abs(psi_dilatation_estimate(b, {1000, 0}, 1.0));
  const double m4 = std::abs(psi_dilatation_estimate(b, {10000, 0}, 10.0));
  CHECK(m2 > m3);
  CHECK(m3 > m4);
}
