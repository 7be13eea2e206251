#include "qrb/qa_maps.hpp"

#include "qrb/error.hpp"
#include "test_support.hpp"

using namespace qrb;
using qrb::test::Gen;

TEST_CASE("eval_f and eval_H") {
  CHECK_CLOSE(QAMap(1, 0, {-1, 0}).f({2, 0}), cplx(3, 0), 0.0);
  CHECK_CLOSE(QAMap(2, 0, {0, 0}).f({1, 1}), cplx(3, 4), 1e-15);
  CHECK_CLOSE(QAMap(2, 0, {0, 1}).f({1, 1}), cplx(3, 5), 1e-15);
  CHECK_CLOSE(QAMap(1, 0, {5, 5}).H({1, 1}), cplx(0, 2), 1e-15);
  CHECK_CLOSE(QAMap(3, 0, {5, 5}).H({1, 0}), cplx(9, 0), 1e-15);

  Gen g;
  for (int i = 0; i < 1000; ++i) {
    const QAMap m(g.stretch(), g.box(3));
    const cplx z = g.disk(10);
    CHECK(m.H(-z) == m.H(z));
    CHECK(m.f(-z) == m.f(z));
    CHECK(m.H(z) == QAMap(m.stretch(), 0.0).f(z));
  }
}

TEST_CASE("escape radius") {
  CHECK(QAMap(1, 0, 0.0).escape_radius() == 2);
  CHECK(QAMap(1, 0, 3.0).escape_radius() == 3);

  Gen g(11);
  for (int i = 0; i < 500; ++i) {
    const QAMap m(g.stretch(), g.box(20));
    const double R = m.escape_radius();
    const cplx z = std::polar(R * (1 + g.uniform(1e-12, 10)), g.uniform(-kPi, kPi));
    CHECK(std::abs(m.f(z)) >= 2 * std::abs(z));
  }
}

TEST_CASE("orbit examples") {
  const QAMap square(1, 0, 0.0);
  auto r = orbit(square, 0.5, 100);
  CHECK(r.status == OrbitStatus::kBounded);

  r = orbit(square, 3.0, 100);
  CHECK(r.status == OrbitStatus::kEscaped);
  CHECK(r.steps == 1);
  CHECK(std::abs(r.final_point) > square.escape_radius());

  // Direct iteration oracle: 0 -> 10 -> ... for h = stretch by 2 along x.
  const QAMap big(2, 0, 10.0);
  cplx z = 0;
  int oracle = 0;
  for (int n = 1; n <= 5 && oracle == 0; ++n) {
    const cplx h{2 * z.real(), z.imag()};
    z = h * h + 10.0;
    if (std::abs(z) > big.escape_radius()) oracle = n;
  }
  REQUIRE(oracle > 0);
  r = orbit(big, 0.0, 100, true);
  CHECK(r.status == OrbitStatus::kEscaped);
  CHECK(r.steps == oracle);
  REQUIRE(r.trajectory.has_value());
  CHECK(r.trajectory->size() == static_cast<std::size_t>(oracle) + 1);

  CHECK_THROWS_AS(orbit(square, 0.1, 0), Error);
}

TEST_CASE("orbit detects attracting cycles and reports Undetermined honestly") {
  // c = -1: 0 -> -1 -> 0, period two.
  CHECK(orbit(QAMap(1, 0, -1.0), 0.0, 50).status == OrbitStatus::kBounded);
  // Slow parabolic approach at c = 1/4 cannot close within a short budget.
  CHECK(orbit(QAMap(1, 0, 0.25), 0.0, 200).status == OrbitStatus::kUndetermined);
}

TEST_CASE("non-finite iterates count as escaping") {
  const QAMap m(1, 0, 0.0);
  const auto r = orbit(m, cplx{1e200, 0}, 10);
  CHECK(r.status == OrbitStatus::kEscaped);
  CHECK(r.steps == 1);
}

TEST_CASE("escaped status is monotone in the budget") {
  Gen g(3);
  for (int i = 0; i < 300; ++i) {
    const QAMap m(g.stretch(4), g.box(1.5));
    const cplx z = g.box(2);
    const auto small = orbit(m, z, 20);
    const auto large = orbit(m, z, 400);
    if (small.status == OrbitStatus::kEscaped) {
      CHECK(large.status == OrbitStatus::kEscaped);
      CHECK(large.steps == small.steps);
    }
  }
}

TEST_CASE("geometric escape beyond R") {
  Gen g(5);
  for (int i = 0; i < 200; ++i) {
    const QAMap m(g.stretch(), g.box(5));
    cplx z = std::polar(m.escape_radius() * 1.01, g.uniform(-kPi, kPi));
    const double start = std::abs(z);
    for (int n = 1; n <= 6; ++n) {
      z = m.f(z);
      CHECK(std::abs(z) >= std::ldexp(start, n));
    }
  }
}

TEST_CASE("classify_N") {
  CHECK(classify_N(QAMap(1, 0, 0.0), 1000) == Connectivity::kConnected);
  CHECK(classify_N(QAMap(1, 0, -2.0), 1000) == Connectivity::kConnected);
  CHECK(classify_N(QAMap(2, 0, 10.0), 1000) == Connectivity::kInfinitelyManyComponents);
  CHECK(classify_N(QAMap(1, 0, 0.25), 100) == Connectivity::kUndetermined);
}
