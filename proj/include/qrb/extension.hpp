#pragma once

#include "qrb/bottcher.hpp"

namespace qrb {

/// Candidates closer than this are treated as coincident (pullback through
/// the branch point).
inline constexpr double kBranchSeparation = 1e-9;

/// Extends psi into the escaping set by pulling back along the forward orbit.
///
/// Forward-iterates z until |f^n(z)| > 2 e^sigma, evaluates psi there and then
/// lifts n times through H, choosing at each level the preimage h^{-1}(+-sqrt(w))
/// nearest the matching orbit point. Points with |z| > e^sigma return psi(z).
///
/// Throws Error(kNotInEscapingSet) if n would exceed max_pullbacks and
/// Error(kBranchAmbiguity) when the two preimages coincide.
cplx extend_psi(const BottcherCoordinate& b, cplx z, int max_pullbacks);

enum class ExtensionDomain { kWholeEscapingSet, kStopsBeforeBranch };

/// Throws Error(kInconclusive) if the orbit of 0 cannot be classified.
ExtensionDomain extension_domain_probe(const QAMap& m, int max_iter = 10000);
inline ExtensionDomain extension_domain_probe(const BottcherCoordinate& b, int max_iter = 10000) {
  return extension_domain_probe(b.map(), max_iter);
}

}  // namespace qrb
