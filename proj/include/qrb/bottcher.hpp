#pragma once

#include <vector>

#include "qrb/qa_maps.hpp"

namespace qrb {

struct SolverConfig {
  double sigma = 0.0;  // half-plane Re X > sigma, i.e. |z| > e^sigma
  double tol = 1e-12;
  int k_max = 64;
  double alpha = 1.5;  // decay exponent, diagnostics only

  /// sigma = max(log R + 1, log(2|c| + 1) + 1).
  static SolverConfig defaults_for(const QAMap& m);

  /// Throws Error(kInvalidParameter) on a configuration that cannot be used
  /// with this map (rho must be defined on the whole half-plane).
  void validate(const QAMap& m) const;
};

/// F_k evaluated by unrolling the recursion: k forward steps of f_tilde, then
/// k backward steps Y -> Y/2 + xi(Y/2). Requires Re X >= sigma.
cplx F_k(const QAMap& m, const SolverConfig& cfg, cplx X, int k);

/// sup over the probe grid of |F_{k+1} - F_k|, for k = 0 .. count-1.
std::vector<double> successive_differences(const QAMap& m, const SolverConfig& cfg, int count);

/// Probe grid: 16 points Re X = sigma, Im X = 2 pi j / 16.
std::vector<cplx> probe_grid(const SolverConfig& cfg);

/// Böttcher-type coordinate psi with h(psi(z))^2 = psi(f(z)) near infinity.
class BottcherCoordinate {
 public:
  /// Finds the smallest k with sup |F_{k+1} - F_k| < tol on the probe grid.
  /// Throws Error(kNoConvergence) if k_max is reached.
  static BottcherCoordinate build(const QAMap& m, const SolverConfig& cfg);
  static BottcherCoordinate build(const QAMap& m) {
    return build(m, SolverConfig::defaults_for(m));
  }

  const QAMap& map() const { return map_; }
  const SolverConfig& config() const { return config_; }
  int k_used() const { return k_used_; }
  /// e^sigma; psi is defined for |z| above this.
  double inner_radius() const;

  /// exp(F_{k_used}(log z)). Throws Error(kOutsideDomain) for |z| <= e^sigma.
  cplx psi(cplx z) const;

  /// Solves psi(w) = z by the iteration w <- z - (psi(w) - w) from w = z.
  cplx psi_inverse(cplx z) const;

  /// |H(psi(z)) - psi(f(z))|.
  double conjugacy_residual(cplx z) const;

 private:
  BottcherCoordinate(QAMap m, SolverConfig cfg, int k) : map_(m), config_(cfg), k_used_(k) {}

  QAMap map_;
  SolverConfig config_;
  int k_used_ = 0;
};

/// Complex dilatation psi_zbar / psi_z from centred differences with step h.
/// Throws Error(kDegenerateDerivative) when |psi_z| < 1e-8.
cplx psi_dilatation_estimate(const BottcherCoordinate& b, cplx z, double step);

}  // namespace qrb
