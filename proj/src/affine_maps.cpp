#include "qrb/affine_maps.hpp"

#include <cmath>
#include <string>

#include "format.hpp"
#include "qrb/error.hpp"

namespace qrb {

double reduce_half_turn(double angle) {
  double r = std::remainder(angle, kPi);  // [-pi/2, pi/2]
  if (r <= -kHalfPi) r += kPi;
  return r;
}

StretchParams::StretchParams(double K, double theta) {
  if (!std::isfinite(K) || !std::isfinite(theta)) {
    throw Error(ErrorCode::kInvalidParameter, "stretch parameters must be finite");
  }
  if (K < 1.0) {
    throw Error(ErrorCode::kInvalidParameter,
                "stretch factor K=" + detail::num(K) + " is below 1");
  }
  if (!(theta > -kHalfPi && theta <= kHalfPi)) {
    throw Error(ErrorCode::kInvalidParameter,
                "theta=" + detail::num(theta) + " outside (-pi/2, pi/2]");
  }
  K_ = K;
  theta_ = (K == 1.0) ? 0.0 : theta;
  if (theta_ == 0.0) {
    rot2_ = {1.0, 0.0};
  } else if (theta_ == kHalfPi) {
    rot2_ = {-1.0, 0.0};
  } else {
    rot2_ = std::polar(1.0, 2.0 * theta_);
  }
}

cplx apply_stretch(const StretchParams& p, cplx z) {
  const double K = p.K();
  return 0.5 * (K + 1.0) * z + p.rotation2() * (0.5 * (K - 1.0)) * std::conj(z);
}

cplx apply_stretch_cartesian(const StretchParams& p, cplx z) {
  const double K = p.K();
  const double c = std::cos(p.theta());
  const double s = std::sin(p.theta());
  const double x = z.real();
  const double y = z.imag();
  return {x * (K * c * c + s * s) + y * (K - 1.0) * s * c,
          x * (K - 1.0) * c * s + y * (K * s * s + c * c)};
}

PolarPoint apply_stretch_polar(const StretchParams& p, double r, double phi) {
  const double K = p.K();
  const double theta = p.theta();
  // u = phi - theta - shift with u in [-pi/2, pi/2].
  const double u = std::remainder(phi - theta, kPi);
  const double shift = (phi - theta) - u;
  const double cu = std::cos(u);
  const double r_out = r * std::sqrt(1.0 + (K * K - 1.0) * cu * cu);
  if (std::abs(u) == kHalfPi) {
    return {r_out, phi};
  }
  return {r_out, theta + shift + std::atan(std::tan(u) / K)};
}

cplx inverse_stretch(const StretchParams& p, cplx z) {
  const double K = p.K();
  return ((K + 1.0) / (2.0 * K)) * z - p.rotation2() * ((K - 1.0) / (2.0 * K)) * std::conj(z);
}

cplx stretch_dilatation(const StretchParams& p) {
  const double K = p.K();
  return p.rotation2() * ((K - 1.0) / (K + 1.0));
}

NormalizedStretch normalize_omega(double K_raw, double theta_raw) {
  if (!std::isfinite(K_raw) || !std::isfinite(theta_raw) || K_raw <= 0.0) {
    throw Error(ErrorCode::kInvalidParameter,
                "stretch factor must be positive and finite, got " + detail::num(K_raw));
  }
  if (K_raw == 1.0) {
    return {StretchParams(1.0, 0.0), 1.0};
  }
  if (K_raw < 1.0) {
    return {StretchParams(1.0 / K_raw, reduce_half_turn(theta_raw + kHalfPi)), K_raw};
  }
  return {StretchParams(K_raw, reduce_half_turn(theta_raw)), 1.0};
}

}  // namespace qrb
