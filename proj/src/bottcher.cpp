#include "qrb/bottcher.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "format.hpp"
#include "qrb/error.hpp"
#include "qrb/log_coords.hpp"

namespace qrb {

namespace {

constexpr int kProbePoints = 16;

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// xi(W + e) - xi(W), without cancellation for small e.
cplx xi_shift(const StretchParams& p, cplx W, cplx e) {
  if (e.imag() == 0.0) return 0.0;
  const cplx nu_b = stretch_dilatation(p) * std::polar(1.0, -2.0 * W.imag());
  const double t = -2.0 * e.imag();
  const double s = std::sin(0.5 * t);
  const cplx expm1_it{-2.0 * s * s, std::sin(t)};
  return log1p(-nu_b * expm1_it / (1.0 - nu_b));
}

// Forward orbit of f~ in the split form X_{j+1} = 2 W_j + r_j with
// W_j = X_j + phi(X_j) and r_j = rho(W_j). Stops early once r_j vanishes, as
// every deeper level then contributes nothing.
struct LiftedOrbit {
  std::vector<cplx> W;
  std::vector<cplx> r;
  cplx tip;
  int depth = 0;

  explicit LiftedOrbit(cplx X) : tip(X) {}

  void extend(const QAMap& m, const SolverConfig& cfg, int k) {
    while (depth < k && (r.empty() || r.back() != 0.0)) {
      const cplx w = tip + phi(m.stretch(), tip);
      const cplx rj = rho(m.c(), w);
      const cplx next = 2.0 * w + rj;
      if (!finite(next) || next.real() < cfg.sigma) {
        throw Error(ErrorCode::kDomain,
                    "forward orbit left the half-plane Re X >= " + detail::num(cfg.sigma) +
                        "; increase sigma");
      }
      W.push_back(w);
      r.push_back(rj);
      tip = next;
      ++depth;
    }
  }

  // F_k(X) - X. Carries Y_j - X_j backwards so that the large forward values
  // never enter a subtraction.
  cplx deviation(const StretchParams& p, int k) const {
    cplx D = 0.0;
    for (int j = std::min(k, depth) - 1; j >= 0; --j) {
      const cplx e = 0.5 * (r[j] + D);
      D = e + xi_shift(p, W[j], e);
    }
    return D;
  }
};

void require_half_plane(const SolverConfig& cfg, cplx X) {
  if (!(X.real() >= cfg.sigma)) {
    throw Error(ErrorCode::kDomain, "Re X = " + detail::num(X.real()) +
                                        " below sigma = " + detail::num(cfg.sigma));
  }
}

}  // namespace

SolverConfig SolverConfig::defaults_for(const QAMap& m) {
  SolverConfig cfg;
  const double c_abs = std::abs(m.c());
  cfg.sigma = std::max(std::log(m.escape_radius()) + 1.0, std::log(2.0 * c_abs + 1.0) + 1.0);
  return cfg;
}

void SolverConfig::validate(const QAMap& m) const {
  if (!std::isfinite(sigma)) {
    throw Error(ErrorCode::kInvalidParameter, "sigma must be finite");
  }
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidParameter, "tol must be positive");
  }
  if (k_max < 0) {
    throw Error(ErrorCode::kInvalidParameter, "k_max must be non-negative");
  }
  if (!(alpha > 1.0 && alpha < 2.0)) {
    throw Error(ErrorCode::kInvalidParameter, "alpha must lie in (1, 2)");
  }
  // Re(X + phi(X)) >= Re X, so |c| e^{-2 sigma} < 1 makes rho defined on the
  // whole half-plane.
  if (!(std::abs(m.c()) * std::exp(-2.0 * sigma) < 1.0)) {
    throw Error(ErrorCode::kInvalidParameter,
                "sigma = " + detail::num(sigma) + " too small for |c| = " +
                    detail::num(std::abs(m.c())));
  }
}

cplx F_k(const QAMap& m, const SolverConfig& cfg, cplx X, int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidParameter, "k must be non-negative");
  require_half_plane(cfg, X);
  LiftedOrbit orbit(X);
  orbit.extend(m, cfg, k);
  return X + orbit.deviation(m.stretch(), k);
}

std::vector<cplx> probe_grid(const SolverConfig& cfg) {
  std::vector<cplx> grid;
  grid.reserve(kProbePoints);
  for (int j = 0; j < kProbePoints; ++j) {
    grid.emplace_back(cfg.sigma, 2.0 * kPi * j / kProbePoints);
  }
  return grid;
}

namespace {

// Walks F_0, F_1, ... on the probe grid, reusing the forward orbits.
class ProbeSweep {
 public:
  ProbeSweep(const QAMap& m, const SolverConfig& cfg) : m_(m), cfg_(cfg) {
    for (const cplx X : probe_grid(cfg)) {
      require_half_plane(cfg, X);
      orbits_.emplace_back(X);
      points_.push_back(X);
      current_.push_back(X);
    }
  }

  // Advances to F_{k+1} and returns sup |F_{k+1} - F_k|.
  double step() {
    ++k_;
    double sup = 0.0;
    for (std::size_t i = 0; i < orbits_.size(); ++i) {
      orbits_[i].extend(m_, cfg_, k_);
      const cplx Y = points_[i] + orbits_[i].deviation(m_.stretch(), k_);
      sup = std::max(sup, std::abs(Y - current_[i]));
      current_[i] = Y;
    }
    return sup;
  }

  // Spacing of doubles near the current values of F_k.
  double resolution() const {
    double r = 0.0;
    for (const cplx Y : current_) r = std::max(r, std::abs(Y));
    return std::numeric_limits<double>::epsilon() * r;
  }

 private:
  const QAMap& m_;
  const SolverConfig& cfg_;
  std::vector<LiftedOrbit> orbits_;
  std::vector<cplx> points_;
  std::vector<cplx> current_;
  int k_ = 0;
};

}  // namespace

std::vector<double> successive_differences(const QAMap& m, const SolverConfig& cfg, int count) {
  cfg.validate(m);
  ProbeSweep sweep(m, cfg);
  std::vector<double> diffs;
  diffs.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int k = 0; k < count; ++k) diffs.push_back(sweep.step());
  return diffs;
}

BottcherCoordinate BottcherCoordinate::build(const QAMap& m, const SolverConfig& cfg) {
  cfg.validate(m);
  ProbeSweep sweep(m, cfg);
  double last = 0.0;
  for (int k = 0; k < cfg.k_max; ++k) {
    last = sweep.step();
    if (last < cfg.tol && cfg.tol >= sweep.resolution()) return BottcherCoordinate(m, cfg, k);
  }
  std::string msg = "sup |F_{k+1} - F_k| = " + detail::num(last) + " after k_max = " +
                    std::to_string(cfg.k_max) + " (tol " + detail::num(cfg.tol) + ")";
  if (cfg.tol < sweep.resolution()) {
    msg += "; tol is below the double precision resolution " + detail::num(sweep.resolution());
  } else {
    msg += "; try doubling e^sigma";
  }
  throw Error(ErrorCode::kNoConvergence, msg);
}

double BottcherCoordinate::inner_radius() const { return std::exp(config_.sigma); }

cplx BottcherCoordinate::psi(cplx z) const {
  if (!(std::abs(z) > inner_radius())) {
    throw Error(ErrorCode::kOutsideDomain,
                "|z| = " + detail::num(std::abs(z)) + " is not above e^sigma = " +
                    detail::num(inner_radius()));
  }
  return std::exp(F_k(map_, config_, std::log(z), k_used_));
}

cplx BottcherCoordinate::psi_inverse(cplx z) const {
  constexpr int kMaxSteps = 200;
  cplx w = z;
  double err = std::abs(psi(w) - z);
  double damping = 1.0;
  for (int i = 0; i < kMaxSteps; ++i) {
    if (err <= 4e-16 * std::abs(z)) return w;
    const cplx candidate = w + damping * (z - psi(w));
    const double candidate_err = std::abs(psi(candidate) - z);
    if (candidate_err < err) {
      w = candidate;
      err = candidate_err;
      damping = std::min(1.0, 2.0 * damping);
    } else {
      if (damping < 1e-6) return w;  // round-off limited
      damping *= 0.5;
    }
  }
  throw Error(ErrorCode::kNoConvergence, "psi inverse did not converge");
}

double BottcherCoordinate::conjugacy_residual(cplx z) const {
  return std::abs(map_.H(psi(z)) - psi(map_.f(z)));
}

cplx psi_dilatation_estimate(const BottcherCoordinate& b, cplx z, double step) {
  if (!(step > 0.0)) throw Error(ErrorCode::kInvalidParameter, "step must be positive");
  if (!(std::abs(z) - step > b.inner_radius())) {
    throw Error(ErrorCode::kOutsideDomain, "finite-difference stencil leaves |z| > e^sigma");
  }
  const cplx ih{0.0, step};
  const cplx dx = (b.psi(z + step) - b.psi(z - step)) / (4.0 * step);
  const cplx dy = (b.psi(z + ih) - b.psi(z - ih)) / (4.0 * ih);
  const cplx psi_z = dx + dy;
  const cplx psi_zbar = dx - dy;
  if (std::abs(psi_z) < 1e-8) {
    throw Error(ErrorCode::kDegenerateDerivative, "|psi_z| < 1e-8");
  }
  return psi_zbar / psi_z;
}

}  // namespace qrb
