#include "qrb/qa_maps.hpp"

#include <cmath>

#include "qrb/error.hpp"

namespace qrb {

cplx QAMap::H(cplx z) const {
  const cplx w = apply_stretch(stretch_, z);
  return w * w;
}

cplx QAMap::f(cplx z) const { return H(z) + c_; }

double QAMap::escape_radius() const {
  return std::max(2.0, 1.0 + std::sqrt(1.0 + std::abs(c_)));
}

OrbitResult orbit(const QAMap& m, cplx z, int max_iter, bool keep_trajectory) {
  if (max_iter < 1) {
    throw Error(ErrorCode::kInvalidParameter, "orbit needs max_iter >= 1");
  }
  const double radius = m.escape_radius();
  OrbitResult result;
  if (keep_trajectory) {
    result.trajectory.emplace();
    result.trajectory->push_back(z);
  }

  // Brent-style cycle detection: compare against a saved point that is
  // refreshed at every power of two, which catches any period once the saved
  // point sits on the limit cycle.
  cplx saved = z;
  int next_refresh = 1;
  for (int n = 1; n <= max_iter; ++n) {
    z = m.f(z);
    if (keep_trajectory) result.trajectory->push_back(z);
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) > radius) {
      result.status = OrbitStatus::kEscaped;
      result.steps = n;
      result.final_point = z;
      return result;
    }
    if (std::abs(z - saved) <= kCycleTolerance * std::max(1.0, std::abs(z))) {
      result.status = OrbitStatus::kBounded;
      result.steps = n;
      result.final_point = z;
      return result;
    }
    if (n == next_refresh) {
      saved = z;
      next_refresh *= 2;
    }
  }
  result.status = OrbitStatus::kUndetermined;
  result.steps = max_iter;
  result.final_point = z;
  return result;
}

Connectivity classify_N(const QAMap& m, int max_iter) {
  switch (orbit(m, cplx{0.0, 0.0}, max_iter).status) {
    case OrbitStatus::kBounded: return Connectivity::kConnected;
    case OrbitStatus::kEscaped: return Connectivity::kInfinitelyManyComponents;
    case OrbitStatus::kUndetermined: break;
  }
  return Connectivity::kUndetermined;
}

}  // namespace qrb
