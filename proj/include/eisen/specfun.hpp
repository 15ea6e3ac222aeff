#pragma once

#include "eisen/symalg.hpp"

#include <complex>

namespace eisen {

using cplx = std::complex<double>;

struct ComplexValue {
  cplx value;
  double abs_err = 0;  // estimate, not a rigorous bound
};

// Lanczos (g = 7, 9 terms) with reflection
ComplexValue gamma(cplx z);
cplx log_gamma(cplx z);  // principal branch is not guaranteed; exp() of it is Gamma

// Borwein's alternating-series algorithm for eta, reflection for Re s < 1/2
ComplexValue zeta(cplx s);
// pi^{-w/2} Gamma(w/2) zeta(w)
ComplexValue zeta_star(cplx w);
// pi^{-s/2} Gamma(s/2)
ComplexValue gamma_R(cplx s);
// Gamma_R at the archimedean place, (1 - p^{-s})^{-1} at p
ComplexValue local_zeta(Place v, cplx s);
// zeta*(s) / zeta*(s+1)
ComplexValue c_factor(cplx s);

// K_nu(x) = int_0^inf e^{-x cosh t} cosh(nu t) dt, double-exponential quadrature
ComplexValue bessel_k(cplx nu, double x);

}  // namespace eisen
