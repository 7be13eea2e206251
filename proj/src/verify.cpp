#include "qrb/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>
#include <string>

#include "qrb/dilatation_dynamics.hpp"
#include "qrb/error.hpp"
#include "qrb/extension.hpp"
#include "qrb/log_coords.hpp"

namespace qrb {

bool VerifyReport::all_passed() const {
  for (const auto& s : suites) {
    if (!s.passed) return false;
  }
  return true;
}

namespace {

constexpr std::uint64_t kSeed = 0x5eed'b077'c4e2ULL;

SuiteResult at_most(std::string name, double measured, double limit, std::string detail = {}) {
  return {std::move(name), measured <= limit, measured, limit, std::move(detail)};
}

SuiteResult at_least(std::string name, double measured, double limit, std::string detail = {}) {
  return {std::move(name), measured >= limit, measured, limit, std::move(detail)};
}

double rel_err(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

class Sampler {
 public:
  Sampler() : rng_(kSeed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  cplx disk(double radius) {
    return std::polar(radius * std::sqrt(uniform(0.0, 1.0)), uniform(-kPi, kPi));
  }

 private:
  std::mt19937_64 rng_;
};

void affine_suites(const QAMap& m, std::vector<SuiteResult>& out) {
  const StretchParams& p = m.stretch();
  Sampler s;
  double forms = 0.0, roundtrip = 0.0, shape = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const cplx z = s.disk(10.0);
    const cplx hz = apply_stretch(p, z);
    forms = std::max(forms, rel_err(hz, apply_stretch_cartesian(p, z)));
    roundtrip = std::max(roundtrip, rel_err(apply_stretch(p, inverse_stretch(p, z)), z));
    const double r = std::abs(hz) / std::abs(z);
    shape = std::max({shape, 1.0 - r, r - p.K(), std::abs(apply_stretch(p, -z) + hz) / std::abs(hz)});
  }
  out.push_back(at_most("affine.forms_agree", forms, 1e-14));
  out.push_back(at_most("affine.inverse_roundtrip", roundtrip, 1e-13));
  out.push_back(at_most("affine.odd_and_bounded", shape, 1e-14));
}

void qa_suites(const QAMap& m, std::vector<SuiteResult>& out) {
  Sampler s;
  double even = 0.0;
  double ratio = HUGE_VAL;
  const double R = m.escape_radius();
  for (int i = 0; i < 500; ++i) {
    const cplx z = s.disk(3.0 * R);
    even = std::max(even, std::abs(m.f(-z) - m.f(z)));
    const cplx far = std::polar(R * (1.0 + s.uniform(1e-9, 4.0)), s.uniform(-kPi, kPi));
    ratio = std::min(ratio, std::abs(m.f(far)) / (2.0 * std::abs(far)));
  }
  out.push_back(at_most("qa.even", even, 0.0));
  out.push_back(at_least("qa.geometric_escape", ratio, 1.0, "min |f(z)|/(2|z|) beyond R"));
}

void log_suites(const QAMap& m, double sigma, std::vector<SuiteResult>& out) {
  const StretchParams& p = m.stretch();
  Sampler s;
  double ident = 0.0, chain = 0.0, period = 0.0;
  const cplx two_pi_i{0.0, 2.0 * kPi};
  for (int i = 0; i < 1000; ++i) {
    const cplx X{sigma + s.uniform(0.0, 5.0), s.uniform(-20.0, 20.0)};
    const cplx ph = phi(p, X);
    const cplx x = xi(p, X);
    ident = std::max({ident, std::abs(ph + xi(p, X + ph)), std::abs(x + phi(p, X + x))});

    const Wirtinger dp = phi_partials(p, X);
    const Wirtinger dx = xi_partials(p, X + ph);
    chain = std::max({chain,
                      std::abs(dp.dX + dx.dX * (1.0 + dp.dX) + dx.dXbar * std::conj(dp.dXbar)),
                      std::abs(dp.dXbar + dx.dX * dp.dXbar + dx.dXbar * std::conj(1.0 + dp.dX))});
    period = std::max(period, std::abs(f_tilde(m, X + two_pi_i) - f_tilde(m, X) - 2.0 * two_pi_i));
  }
  out.push_back(at_most("log.inverse_identities", ident, 1e-13));
  out.push_back(at_most("log.chain_rule", chain, 1e-12));
  out.push_back(at_most("log.f_tilde_period", period, 1e-12));
}

void bottcher_suites(const QAMap& m, const SolverConfig& cfg, int samples,
                     std::vector<SuiteResult>& out) {
  std::optional<BottcherCoordinate> coord;
  try {
    coord = BottcherCoordinate::build(m, cfg);
  } catch (const Error& e) {
    out.push_back({"bottcher.convergence", false, static_cast<double>(cfg.k_max),
                   static_cast<double>(cfg.k_max), e.what()});
    for (const char* name : {"bottcher.conjugacy", "bottcher.odd", "bottcher.asymptotic_conformality",
                             "extension.semiconjugacy"}) {
      out.push_back({name, false, 0.0, 0.0, "skipped: no Böttcher coordinate"});
    }
    return;
  }
  const BottcherCoordinate& b = *coord;
  out.push_back(at_most("bottcher.convergence", b.k_used(), cfg.k_max,
                        "k_used = " + std::to_string(b.k_used())));

  double residual = 0.0, odd = 0.0;
  const double radius = 2.0 * b.inner_radius();
  for (int j = 0; j < samples; ++j) {
    const cplx z = std::polar(radius, 2.0 * kPi * (j + 0.5) / samples);
    const cplx target = b.psi(m.f(z));
    residual = std::max(residual, b.conjugacy_residual(z) / std::abs(target));
    odd = std::max(odd, std::abs(b.psi(-z) + b.psi(z)));
  }
  out.push_back(at_most("bottcher.conjugacy", residual, 10.0 * cfg.tol,
                        "relative residual on |z| = 2e^sigma"));
  out.push_back(at_most("bottcher.odd", odd, 1e-10));

  double prev = HUGE_VAL;
  bool decreasing = true;
  std::string detail;
  for (const double r : {1e2, 1e3, 1e4}) {
    const cplx z = std::polar(r, 0.7);
    if (r <= b.inner_radius() * 2.0) continue;
    const double mu = std::abs(psi_dilatation_estimate(b, z, 1e-3 * r));
    char buf[64];
    std::snprintf(buf, sizeof buf, " |mu|(%g)=%.3e", r, mu);
    detail += buf;
    decreasing = decreasing && mu < prev;
    prev = mu;
  }
  out.push_back({"bottcher.asymptotic_conformality", decreasing, prev, 0.0, detail});

  // Escaping points near the base domain, pulled back into the escaping set.
  double semi = 0.0, equi = 0.0;
  int used = 0;
  const double inner = b.inner_radius();
  for (int j = 0; j < 4096 && used < samples; ++j) {
    const cplx z = std::polar(inner * (0.25 + 0.75 * ((j * 37) % 101) / 101.0), 2.0 * kPi * j / 4096.0);
    const OrbitResult r = orbit(m, z, 64);
    if (r.status != OrbitStatus::kEscaped || std::abs(z) > inner) continue;
    try {
      const cplx e = extend_psi(b, z, 64);
      semi = std::max(semi, std::abs(m.H(e) - extend_psi(b, m.f(z), 64)));
      equi = std::max(equi, std::abs(extend_psi(b, -z, 64) + e));
      ++used;
    } catch (const Error&) {
    }
  }
  out.push_back(at_most("extension.semiconjugacy", semi, 1e-6,
                        std::to_string(used) + " escaping points"));
  out.push_back(at_most("extension.equivariance", equi, 1e-8));
}

void dilatation_suites(const QAMap& m, std::vector<SuiteResult>& out) {
  double trace_margin = HUGE_VAL, trace_match = 0.0, cos_margin = HUGE_VAL;
  bool in_half_plane = true;
  for (int a = 0; a < 100; ++a) {
    const double K = 1.0 + 9.0 * a / 99.0;
    for (int t = 0; t < 60; ++t) {
      const double theta = -1.5 + 3.0 * t / 59.0;
      const StretchParams p(K, theta);
      const FixedRay ray = fixed_ray(p);
      const double closed = trace_sq(p, ray);
      const cplx tr = mobius_A(p, ray).trace();
      trace_margin = std::min(trace_margin, closed - 4.0);
      trace_match = std::max(trace_match, std::abs(tr * tr - closed));
      cos_margin = std::min(cos_margin, std::cos(ray.phi) - cos_phi_lower_bound(K));
      in_half_plane = in_half_plane && std::abs(ray.phi - p.theta()) < kHalfPi;
    }
  }
  out.push_back(at_least("dilatation.trace_bound", trace_margin, -1e-9, "min tr(A)^2 - 4"));
  out.push_back(at_most("dilatation.trace_closed_form", trace_match, 1e-10));
  out.push_back(at_least("dilatation.cos_bound", cos_margin, -1e-12));
  out.push_back({"dilatation.ray_half_plane", in_half_plane, 0.0, 0.0, ""});

  // On the real axis (theta = 0) the fixed ray is exactly representable.
  const StretchParams axis(m.stretch().K(), 0.0);
  const QAMap axis_map(axis, m.c());
  const auto seq = mu_fixed_ray_sequence(axis, FixedRay{0.0}, 50);
  double rec = 0.0;
  for (int n = 1; n <= 50; ++n) {
    rec = std::max(rec, std::abs(mu_iterate_general(axis_map, cplx{1.0, 0.0}, n) - seq[n - 1]));
  }
  out.push_back(at_most("dilatation.orbit_recurrence", rec, 1e-12));

  const StretchParams& p = m.stretch();
  if (p.K() > 1.0) {
    const auto logs = log_distortion_sequence(p, fixed_ray(p), 10000);
    bool increasing = true;
    for (std::size_t k = 1; k < logs.size(); ++k) increasing = increasing && logs[k] > logs[k - 1];
    const double peak = std::exp(std::min(logs.back(), 700.0));
    out.push_back({"dilatation.distortion_growth", increasing && peak > 100.0, peak, 100.0,
                   increasing ? "log D strictly increasing for n <= 10000" : "not monotone"});
  }

  double trig = 0.0;
  for (int i = 0; i <= 990; ++i) {
    const double K = 1.0 + 0.1 * i;
    const double a = std::acos(1.0 / std::sqrt(K + 1.0));
    const double b = std::atan(1.0 / std::sqrt(K));
    trig = std::max({trig, std::abs(std::cos(2 * a) - (1 - K) / (1 + K)),
                     std::abs(std::cos(2 * b) - (K - 1) / (K + 1)),
                     std::abs(std::sin(2 * a) - 2 * std::sqrt(K) / (K + 1)),
                     std::abs(std::sin(2 * b) - 2 * std::sqrt(K) / (K + 1))});
  }
  out.push_back(at_most("dilatation.trig_identities", trig, 1e-12));
}

}  // namespace

VerifyReport run_verify_suites(const RunConfig& cfg) {
  const QAMap m = cfg.map();
  const SolverConfig solver = cfg.solver(m);
  VerifyReport report;
  affine_suites(m, report.suites);
  qa_suites(m, report.suites);
  log_suites(m, solver.sigma, report.suites);
  bottcher_suites(m, solver, std::max(cfg.samples, 1), report.suites);
  dilatation_suites(m, report.suites);
  return report;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyReport report;
  try {
    report = run_verify_suites(cfg);
  } catch (const Error& e) {
    out << "configuration error: " << e.what() << '\n';
    return e.code() == ErrorCode::kConfig || e.code() == ErrorCode::kInvalidParameter ? 2 : 1;
  }
  for (const auto& s : report.suites) {
    char line[160];
    std::snprintf(line, sizeof line, "[%s] %-36s measured=%-12.4g limit=%-10.3g ",
                  s.passed ? "PASS" : "FAIL", s.name.c_str(), s.measured, s.threshold);
    out << line << s.detail << '\n';
  }
  out << (report.all_passed() ? "all suites passed" : "some suites FAILED") << '\n';
  return report.all_passed() ? 0 : 1;
}

int run_verify(const std::optional<std::filesystem::path>& config_path, std::ostream& out) {
  RunConfig cfg;
  if (config_path) {
    try {
      cfg.apply(load_key_values(*config_path));
    } catch (const Error& e) {
      out << "configuration error: " << e.what() << '\n';
      return 2;
    }
  }
  return run_verify(cfg, out);
}

}  // namespace qrb
