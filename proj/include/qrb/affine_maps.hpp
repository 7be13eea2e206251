#pragma once

#include <complex>
#include <numbers>

namespace qrb {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2;

/// Reduces an angle modulo pi into (-pi/2, pi/2]; -pi/2 maps to +pi/2.
double reduce_half_turn(double angle);

/// The affine stretch h_{K,theta}: factor K along e^{i theta}, identity on the
/// perpendicular line.
///
/// Invariants: K >= 1 and theta in (-pi/2, pi/2]. K == 1 is the identity and is
/// always stored with theta == 0, the unique representative of that map.
class StretchParams {
 public:
  StretchParams() = default;
  /// Throws Error(kInvalidParameter) if K < 1, theta outside (-pi/2, pi/2], or
  /// either value is not finite. Use normalize_omega() for raw parameters.
  StretchParams(double K, double theta);

  double K() const { return K_; }
  double theta() const { return theta_; }

  /// e^{2i theta}; with theta == pi/2 this is exactly -1.
  cplx rotation2() const { return rot2_; }

  friend bool operator==(const StretchParams&, const StretchParams&) = default;

 private:
  double K_ = 1.0;
  double theta_ = 0.0;
  cplx rot2_{1.0, 0.0};
};

struct PolarPoint {
  double r = 0.0;
  double phi = 0.0;
};

struct NormalizedStretch {
  StretchParams params;
  double scale = 1.0;  // h_{K_raw, theta_raw} = scale * h_{params}
};

cplx apply_stretch(const StretchParams& p, cplx z);

/// Real-coordinate form of the stretch; kept alongside the complex form for
/// cross-checking.
cplx apply_stretch_cartesian(const StretchParams& p, cplx z);

PolarPoint apply_stretch_polar(const StretchParams& p, double r, double phi);

cplx inverse_stretch(const StretchParams& p, cplx z);

/// Constant complex dilatation nu = e^{2i theta} (K-1)/(K+1).
cplx stretch_dilatation(const StretchParams& p);

/// Picks the canonical representative of a stretch with arbitrary K > 0 and
/// any direction. K < 1 becomes (1/K, theta + pi/2) with scale K.
NormalizedStretch normalize_omega(double K_raw, double theta_raw);

}  // namespace qrb
