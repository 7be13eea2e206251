#pragma once

#include <optional>
#include <vector>

#include "qrb/affine_maps.hpp"

namespace qrb {

/// f(z) = h(z)^2 + c with h an affine stretch.
class QAMap {
 public:
  QAMap() = default;
  QAMap(StretchParams stretch, cplx c) : stretch_(stretch), c_(c) {}
  QAMap(double K, double theta, cplx c) : stretch_(K, theta), c_(c) {}

  const StretchParams& stretch() const { return stretch_; }
  cplx c() const { return c_; }

  cplx f(cplx z) const;
  /// H(z) = h(z)^2, the map without the additive constant.
  cplx H(cplx z) const;

  /// R = max(2, 1 + sqrt(1 + |c|)). Beyond R, |f(z)| >= 2|z|.
  double escape_radius() const;

 private:
  StretchParams stretch_;
  cplx c_{0.0, 0.0};
};

enum class OrbitStatus { kEscaped, kBounded, kUndetermined };

struct OrbitResult {
  OrbitStatus status = OrbitStatus::kUndetermined;
  int steps = 0;  // escape step when kEscaped, iterations performed otherwise
  cplx final_point{};
  std::optional<std::vector<cplx>> trajectory;
};

/// Relative tolerance used to declare that an orbit has closed up on a cycle.
inline constexpr double kCycleTolerance = 1e-12;

/// Iterates f from z. Escaped(n) reports the first n >= 1 with |f^n(z)| > R;
/// a non-finite iterate counts as escaping at that step. Bounded is reported
/// only when the orbit revisits a point within kCycleTolerance.
OrbitResult orbit(const QAMap& m, cplx z, int max_iter, bool keep_trajectory = false);

enum class Connectivity { kConnected, kInfinitelyManyComponents, kUndetermined };

/// N(f) is connected iff the branch point 0 has a bounded orbit.
Connectivity classify_N(const QAMap& m, int max_iter);

}  // namespace qrb
