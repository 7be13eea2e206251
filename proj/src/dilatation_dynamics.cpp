#include "qrb/dilatation_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "format.hpp"
#include "qrb/error.hpp"

namespace qrb {

DiskMobius DiskMobius::normalized() const {
  const cplx s = std::sqrt(det());
  return {a / s, b / s, c / s, d / s};
}

DiskMobius DiskMobius::compose(const DiskMobius& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

DiskMobius DiskMobius::power(int n) const {
  if (n < 0) throw Error(ErrorCode::kInvalidParameter, "negative Möbius power");
  DiskMobius result;
  for (int i = 1; i <= n; ++i) {
    result = result.compose(*this);
    if (i % 128 == 0) result = result.normalized();
  }
  return result;
}

double angle_change(const StretchParams& p, double varphi) {
  const double u = varphi - p.theta();
  if (!(std::abs(u) < kHalfPi)) {
    throw Error(ErrorCode::kDomain, "ray angle must satisfy |varphi - theta| < pi/2");
  }
  return u - std::atan(std::tan(u) / p.K());
}

namespace {

constexpr int kScanIntervals = 1024;

// Zero exactly when the ray at theta + u is fixed by H.
double ray_residual(const StretchParams& p, double u) {
  return p.theta() + 2.0 * std::atan(std::tan(u) / p.K()) - u;
}

double bisect(const StretchParams& p, double lo, double hi) {
  double g_lo = ray_residual(p, lo);
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g_mid = ray_residual(p, mid);
    if (g_mid == 0.0) return mid;
    if ((g_mid < 0.0) == (g_lo < 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> fixed_rays(const StretchParams& p) {
  if (p.theta() == kHalfPi) return {0.0};

  // Nodes u_i = -pi/2 + i pi / N. The residual tends to theta -+ pi/2 at the
  // open ends, which is used in place of evaluating tan at its poles.
  std::vector<double> nodes(kScanIntervals + 1);
  std::vector<double> values(kScanIntervals + 1);
  for (int i = 0; i <= kScanIntervals; ++i) {
    nodes[i] = -kHalfPi + kPi * i / kScanIntervals;
  }
  values.front() = p.theta() - kHalfPi;
  values.back() = p.theta() + kHalfPi;
  for (int i = 1; i < kScanIntervals; ++i) values[i] = ray_residual(p, nodes[i]);

  std::vector<double> roots;
  for (int i = 0; i < kScanIntervals; ++i) {
    if (i > 0 && values[i] == 0.0) {
      roots.push_back(p.theta() + nodes[i]);
      continue;
    }
    if ((values[i] < 0.0 && values[i + 1] > 0.0) || (values[i] > 0.0 && values[i + 1] < 0.0)) {
      roots.push_back(p.theta() + bisect(p, nodes[i], nodes[i + 1]));
    }
  }
  return roots;
}

FixedRay fixed_ray(const StretchParams& p, RootPolicy policy) {
  const auto roots = fixed_rays(p);
  if (roots.empty()) {
    throw Error(ErrorCode::kNoConvergence, "no fixed ray found by the sign-change scan");
  }
  if (policy == RootPolicy::kRequireUnique && roots.size() > 1) {
    throw Error(ErrorCode::kMultipleRoots,
                std::to_string(roots.size()) + " fixed rays for K=" + detail::num(p.K()) +
                    ", theta=" + detail::num(p.theta()));
  }
  const double theta = p.theta();
  const auto best = std::min_element(roots.begin(), roots.end(), [theta](double x, double y) {
    return std::abs(x - theta) < std::abs(y - theta);
  });
  return {*best};
}

cplx H_deriv_ratio(const StretchParams& p, cplx z) {
  const cplx hz = apply_stretch(p, z);
  if (hz == cplx{0.0, 0.0}) {
    throw Error(ErrorCode::kBranchPoint, "H_z vanishes at the branch point 0");
  }
  const cplx u = hz / std::abs(hz);
  return std::conj(u) / u;
}

cplx mu_iterate_general(const QAMap& m, cplx z, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidParameter, "n must be at least 1");
  const StretchParams& p = m.stretch();
  const cplx mu1 = stretch_dilatation(p);

  // r_H only depends on arg h(z), and H(t z) = t^2 H(z) for t > 0, so the orbit
  // is carried on the unit circle.
  std::vector<cplx> ratios;
  ratios.reserve(static_cast<std::size_t>(n - 1));
  cplx w = z;
  for (int j = 0; j + 1 < n; ++j) {
    if (w == cplx{0.0, 0.0}) {
      throw Error(ErrorCode::kBranchPoint, "H-orbit reaches the branch point 0");
    }
    w /= std::abs(w);
    ratios.push_back(H_deriv_ratio(p, w));
    w = m.H(w);
  }

  cplx mu = mu1;
  for (auto r = ratios.rbegin(); r != ratios.rend(); ++r) {
    mu = (mu1 + *r * mu) / (1.0 + *r * std::conj(mu1) * mu);
  }
  return mu;
}

DiskMobius mobius_A(const StretchParams& p, FixedRay ray) {
  const cplx rot = std::polar(1.0, ray.phi);
  const cplx mu1 = stretch_dilatation(p);
  const DiskMobius raw{std::conj(rot), mu1, std::conj(rot * mu1), cplx{1.0, 0.0}};
  return raw.normalized();
}

double trace_sq(const StretchParams& p, FixedRay ray) {
  const double K = p.K();
  return (K + 1.0) * (K + 1.0) * (1.0 + std::cos(ray.phi)) / (2.0 * K);
}

double cos_phi_lower_bound(double K) {
  if (!(K >= 1.0)) throw Error(ErrorCode::kInvalidParameter, "K must be at least 1");
  return (-K * K + 6.0 * K - 1.0) / ((K + 1.0) * (K + 1.0));
}

std::vector<cplx> mu_fixed_ray_sequence(const StretchParams& p, FixedRay ray, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidParameter, "n must be at least 1");
  const cplx mu1 = stretch_dilatation(p);
  const cplx turn = std::polar(1.0, -ray.phi);
  std::vector<cplx> seq;
  seq.reserve(static_cast<std::size_t>(n));
  seq.push_back(mu1);
  for (int k = 2; k <= n; ++k) {
    const cplx prev = seq.back();
    seq.push_back((mu1 + turn * prev) / (1.0 + turn * std::conj(mu1) * prev));
  }
  return seq;
}

cplx mu_fixed_ray(const StretchParams& p, FixedRay ray, int n) {
  return mu_fixed_ray_sequence(p, ray, n).back();
}

double distortion_from_mu(cplx mu) {
  const double a = std::abs(mu);
  if (a >= 1.0 - 1e-15) return HUGE_VAL;
  return (1.0 + a) / (1.0 - a);
}

std::vector<double> log_distortion_sequence(const StretchParams& p, FixedRay ray, int n) {
  const auto mu = mu_fixed_ray_sequence(p, ray, n);
  const cplx mu1 = mu.front();
  const cplx turn = std::polar(1.0, -ray.phi);
  // s_n = 1 - |mu_n|^2 obeys s_n = s_1 s_{n-1} / |1 + turn conj(mu_1) mu_{n-1}|^2,
  // which stays accurate long after |mu_n| rounds to 1.
  const double log_s1 = std::log1p(-std::norm(mu1));
  double log_s = log_s1;
  std::vector<double> out;
  out.reserve(mu.size());
  for (std::size_t k = 0; k < mu.size(); ++k) {
    if (k > 0) log_s += log_s1 - 2.0 * std::log(std::abs(1.0 + turn * std::conj(mu1) * mu[k - 1]));
    out.push_back(2.0 * std::log1p(std::abs(mu[k])) - log_s);
  }
  return out;
}

double distortion_growth(const StretchParams& p, int n) {
  const double log_d = log_distortion_sequence(p, fixed_ray(p), n).back();
  // 1 - |mu| = (1 + |mu|) / D with 1 + |mu| at most 2.
  const double one_minus = std::exp(std::log(1.0 + std::abs(mu_fixed_ray(p, n))) - log_d);
  if (one_minus <= 1e-15) return HUGE_VAL;
  return std::exp(log_d);
}

}  // namespace qrb
