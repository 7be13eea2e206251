#include "qrb/log_coords.hpp"

#include <cmath>

#include "format.hpp"
#include "qrb/error.hpp"

namespace qrb {

namespace {

// e^{-2i Im X}
cplx unit_phase(cplx X) { return std::polar(1.0, -2.0 * X.imag()); }

}  // namespace

cplx log1p(cplx w) {
  const double x = w.real();
  const double y = w.imag();
  return {0.5 * std::log1p(2.0 * x + x * x + y * y), std::atan2(y, 1.0 + x)};
}

cplx phi(const StretchParams& p, cplx X) {
  const double K = p.K();
  return std::log(0.5 * (K + 1.0)) + log1p(stretch_dilatation(p) * unit_phase(X));
}

cplx xi(const StretchParams& p, cplx X) {
  const double K = p.K();
  return std::log((K + 1.0) / (2.0 * K)) + log1p(-stretch_dilatation(p) * unit_phase(X));
}

cplx rho(cplx c, cplx X) {
  if (c == cplx{0.0, 0.0}) return {0.0, 0.0};
  const cplx w = c * std::exp(-2.0 * X);
  const double size = std::abs(w);
  if (!(size < 1.0)) {
    throw Error(ErrorCode::kDomain, "|c e^{-2X}| >= 1 at Re X = " + detail::num(X.real()));
  }
  return log1p(w);
}

cplx f_tilde(const QAMap& m, cplx X) {
  const cplx ph = phi(m.stretch(), X);
  return 2.0 * X + 2.0 * ph + rho(m.c(), X + ph);
}

Wirtinger phi_partials(const StretchParams& p, cplx X) {
  const cplx t = stretch_dilatation(p) * unit_phase(X);
  const cplx q = t / (1.0 + t);
  return {-q, q};
}

Wirtinger xi_partials(const StretchParams& p, cplx X) {
  const cplx t = stretch_dilatation(p) * unit_phase(X);
  const cplx q = t / (1.0 - t);
  return {q, -q};
}

}  // namespace qrb
