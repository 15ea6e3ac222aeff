#pragma once

#include "eisen/roots.hpp"
#include "eisen/specfun.hpp"

#include <vector>

namespace eisen {

enum class WhittakerMethod { casselman_shalika, bessel_closed_form, quadrature };

struct WhittakerValue {
  ComplexValue value;
  WhittakerMethod method = WhittakerMethod::casselman_shalika;
};

// p-adic torus point prod_i varpi_i^vee(p^{k_i}); k is in the fundamental coweight basis,
// so <alpha_j, mu^vee> = k_j and dominance is k >= 0
struct TorusPoint {
  std::vector<int> k;
  bool dominant = true;

  static TorusPoint cocharacter(std::vector<int> k);
};

// prod over positive roots of zeta_v(<lam, alpha^vee> + 1)
ComplexValue normalization_factor(Place v, const NumericWeight& lam, const RootSystem& rs);

// Casselman-Shalika sum over W; 0 off the dominant cone
WhittakerValue whittaker_padic(std::int64_t p, const NumericWeight& lam, const TorusPoint& a, const RootSystem& rs,
                               std::uint64_t cap = default_weyl_cap);

// 2 sqrt(y) K_nu(2 pi y)
WhittakerValue whittaker_sl2_arch(cplx nu, double y);

// int_R (y / (x^2 + y^2))^{1/2 + nu} e^{-2 pi i x} dx, needs Re nu > 0
WhittakerValue jacquet_sl2_quadrature(cplx nu, double y);
// closed form of the same integral: 2 pi^{nu+1/2} sqrt(y) K_nu(2 pi y) / Gamma(nu + 1/2)
cplx jacquet_sl2_closed_form(cplx nu, double y);

// one term per Weyl element, same order as enumerate_weyl
std::vector<cplx> leading_terms(const NumericWeight& lam, const RootSystem& rs, const std::vector<double>& H, double t,
                                std::uint64_t cap = default_weyl_cap);
// sum_w e^{-t <w lam + rho, H>} prod_{alpha > 0} Gamma_R(-<w lam, alpha^vee>), H in the coweight basis.
// a model of the leading behaviour only
ComplexValue leading_asymptotics(const NumericWeight& lam, const RootSystem& rs, const std::vector<double>& H, double t,
                                 std::uint64_t cap = default_weyl_cap);

}  // namespace eisen
