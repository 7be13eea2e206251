#pragma once

#include <vector>

#include "qrb/qa_maps.hpp"

namespace qrb {

/// z -> (a z + b) / (c z + d).
struct DiskMobius {
  cplx a{1.0, 0.0};
  cplx b{0.0, 0.0};
  cplx c{0.0, 0.0};
  cplx d{1.0, 0.0};

  cplx apply(cplx z) const { return (a * z + b) / (c * z + d); }
  cplx det() const { return a * d - b * c; }
  cplx trace() const { return a + d; }

  /// Divides by a square root of the determinant so that det == 1.
  DiskMobius normalized() const;
  /// (*this) o other.
  DiskMobius compose(const DiskMobius& other) const;
  /// n-fold self composition, renormalized every 128 products.
  DiskMobius power(int n) const;
};

struct FixedRay {
  double phi = 0.0;
};

/// Angle turned by the ray of angle varphi under h. Requires
/// |varphi - theta| < pi/2, otherwise Error(kDomain).
double angle_change(const StretchParams& p, double varphi);

/// Every fixed ray angle of H inside (theta - pi/2, theta + pi/2), ascending.
/// For theta == pi/2 the only fixed ray is phi = 0.
std::vector<double> fixed_rays(const StretchParams& p);

enum class RootPolicy {
  kNearestStretchAxis,  // smallest |phi - theta| among the fixed rays
  kRequireUnique,       // Error(kMultipleRoots) unless exactly one exists
};

FixedRay fixed_ray(const StretchParams& p, RootPolicy policy = RootPolicy::kNearestStretchAxis);

/// conj(H_z) / H_z = conj((K+1) h(z)) / ((K+1) h(z)). Error(kBranchPoint) at 0.
cplx H_deriv_ratio(const StretchParams& p, cplx z);
inline cplx H_deriv_ratio(const QAMap& m, cplx z) { return H_deriv_ratio(m.stretch(), z); }

/// Complex dilatation of H^n at z via the composition rule along the H-orbit.
cplx mu_iterate_general(const QAMap& m, cplx z, int n);

/// The disk automorphism advancing the fixed-ray dilatation sequence,
/// normalized to unit determinant.
DiskMobius mobius_A(const StretchParams& p, FixedRay ray);

/// tr(A)^2 = (K+1)^2 (1 + cos phi) / (2K).
double trace_sq(const StretchParams& p, FixedRay ray);

/// (-K^2 + 6K - 1) / (K+1)^2, a lower bound for cos of any fixed ray angle.
double cos_phi_lower_bound(double K);

/// mu_n on the fixed ray: mu_1 = nu and mu_n = A(mu_{n-1}).
cplx mu_fixed_ray(const StretchParams& p, FixedRay ray, int n);
inline cplx mu_fixed_ray(const StretchParams& p, int n) { return mu_fixed_ray(p, fixed_ray(p), n); }

/// Every mu_1 .. mu_n on the fixed ray.
std::vector<cplx> mu_fixed_ray_sequence(const StretchParams& p, FixedRay ray, int n);

/// (1 + |mu_n|) / (1 - |mu_n|) on the fixed ray; +inf once |mu_n| >= 1 - 1e-15.
double distortion_growth(const StretchParams& p, int n);
/// log((1 + |mu_k|) / (1 - |mu_k|)) for k = 1 .. n, free of the cancellation in
/// 1 - |mu_k| and therefore strictly increasing for K > 1 at every n.
std::vector<double> log_distortion_sequence(const StretchParams& p, FixedRay ray, int n);
double distortion_from_mu(cplx mu);

}  // namespace qrb
