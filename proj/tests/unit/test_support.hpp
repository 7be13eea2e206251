#pragma once

#include <doctest.h>

#include <complex>
#include <random>

#include "qrb/affine_maps.hpp"

namespace qrb::test {

/// Deterministic generator for hand-rolled property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed = 20240601) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  cplx disk(double radius) {
    return std::polar(radius * std::sqrt(uniform(0.0, 1.0)), uniform(-kPi, kPi));
  }
  cplx box(double half) { return {uniform(-half, half), uniform(-half, half)}; }
  StretchParams stretch(double K_max = 10.0) {
    return StretchParams(uniform(1.0, K_max), uniform(-kHalfPi + 1e-9, kHalfPi));
  }

 private:
  std::mt19937_64 rng_;
};

inline double rel_err(cplx got, cplx want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

#define CHECK_CLOSE(got, want, tol)                                                   \
  do {                                                                                \
    const auto qrb_got_ = (got);                                                      \
    const auto qrb_want_ = (want);                                                    \
    INFO("got " << qrb_got_ << ", want " << qrb_want_);                               \
    CHECK(std::abs(qrb_got_ - qrb_want_) <= (tol));                                   \
  } while (0)

}  // namespace qrb::test
