#include "qrb/extension.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "format.hpp"
#include "qrb/error.hpp"

namespace qrb {

cplx extend_psi(const BottcherCoordinate& b, cplx z, int max_pullbacks) {
  if (std::abs(z) > b.inner_radius()) return b.psi(z);

  const QAMap& m = b.map();
  const double target = 2.0 * b.inner_radius();
  std::vector<cplx> orbit_points{z};
  while (!(std::abs(orbit_points.back()) > target)) {
    if (static_cast<int>(orbit_points.size()) > max_pullbacks) {
      throw Error(ErrorCode::kNotInEscapingSet,
                  "orbit did not reach |z| > 2e^sigma within " + std::to_string(max_pullbacks) +
                      " steps");
    }
    const cplx next = m.f(orbit_points.back());
    if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) {
      throw Error(ErrorCode::kNotInEscapingSet, "orbit overflowed before reaching the base domain");
    }
    orbit_points.push_back(next);
  }

  cplx w = b.psi(orbit_points.back());
  for (std::size_t j = orbit_points.size() - 1; j > 0; --j) {
    const cplx root = std::sqrt(w);
    const cplx first = inverse_stretch(m.stretch(), root);
    const cplx second = -first;
    if (std::abs(first - second) < kBranchSeparation) {
      throw Error(ErrorCode::kBranchAmbiguity,
                  "pullback passes within " + detail::num(kBranchSeparation) +
                      " of the branch point");
    }
    const cplx anchor = orbit_points[j - 1];
    const double d_first = std::abs(first - anchor);
    const double d_second = std::abs(second - anchor);
    if (std::abs(d_first - d_second) < kBranchSeparation * std::abs(first)) {
      throw Error(ErrorCode::kBranchAmbiguity, "both preimages are equally close to the orbit");
    }
    w = (d_first < d_second) ? first : second;
  }
  return w;
}

ExtensionDomain extension_domain_probe(const QAMap& m, int max_iter) {
  switch (classify_N(m, max_iter)) {
    case Connectivity::kConnected: return ExtensionDomain::kWholeEscapingSet;
    case Connectivity::kInfinitelyManyComponents: return ExtensionDomain::kStopsBeforeBranch;
    case Connectivity::kUndetermined: break;
  }
  throw Error(ErrorCode::kInconclusive,
              "orbit of 0 neither escaped nor closed up within " + std::to_string(max_iter) +
                  " steps");
}

}  // namespace qrb
