#pragma once

#include "qrb/qa_maps.hpp"

namespace qrb {

/// Coefficients of the real-linear derivative acting on (dX, dXbar).
struct Wirtinger {
  cplx dX;
  cplx dXbar;
};

/// log(1 + w) on the principal branch, accurate for small |w|.
cplx log1p(cplx w);

/// Logarithmic lift of h minus the identity. Period pi in Im X.
cplx phi(const StretchParams& p, cplx X);

/// Logarithmic lift of h^{-1} minus the identity. Period pi in Im X.
cplx xi(const StretchParams& p, cplx X);

/// log(1 + c e^{-2X}). Throws Error(kDomain) when |c e^{-2X}| >= 1.
cplx rho(cplx c, cplx X);

/// Logarithmic transform of f: 2X + 2 phi(X) + rho(X + phi(X)).
cplx f_tilde(const QAMap& m, cplx X);

Wirtinger phi_partials(const StretchParams& p, cplx X);
Wirtinger xi_partials(const StretchParams& p, cplx X);

}  // namespace qrb
