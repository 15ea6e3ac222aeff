#include "eisen/whittaker.hpp"
#include "eisen/errors.hpp"

#include <boost/math/quadrature/ooura_fourier_integrals.hpp>

#include <cmath>
#include <limits>
#include <numbers>

namespace eisen {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();

std::string root_name(const Root& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.coords.size(); ++i) s += (i ? "," : "") + std::to_string(a.coords[i]);
  return s + ")";
}

void check_length(const NumericWeight& lam, const RootSystem& rs) {
  if (static_cast<int>(lam.size()) != rs.rank()) throw DimensionMismatch("weight has the wrong length");
}

// columns: simple-root coordinates of each fundamental weight
std::vector<std::vector<double>> weight_to_root(const RootSystem& rs) {
  const int r = rs.rank();
  std::vector<std::vector<double>> m(r, std::vector<double>(r));
  for (int j = 0; j < r; ++j) {
    auto c = rs.to_root_coords(fundamental_weight(rs, j));
    for (int i = 0; i < r; ++i) m[i][j] = c[i].to_double();
  }
  return m;
}

// <lam, mu^vee> with mu^vee = sum k_i varpi_i^vee, i.e. sum k_i (root coordinate i of lam)
cplx pair_coweight(const NumericWeight& lam, const std::vector<std::vector<double>>& m, const std::vector<double>& k) {
  cplx out = 0;
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = 0; j < lam.size(); ++j) out += k[i] * m[i][j] * lam[j];
  return out;
}

NumericWeight plus_rho(NumericWeight v, const RootSystem& rs) {
  for (int i = 0; i < rs.rank(); ++i) v[i] += rs.rho().coords[i].to_double();
  return v;
}

}  // namespace

TorusPoint TorusPoint::cocharacter(std::vector<int> k) {
  TorusPoint a{std::move(k), true};
  for (int x : a.k) a.dominant = a.dominant && x >= 0;
  return a;
}

ComplexValue normalization_factor(Place v, const NumericWeight& lam, const RootSystem& rs) {
  check_length(lam, rs);
  cplx prod = 1;
  double rel = 0;
  for (const auto& a : rs.positive_roots()) {
    ComplexValue f;
    try {
      f = local_zeta(v, pair(lam, a, rs) + 1.0);
    } catch (const PoleAt& e) {
      throw PoleAt(e.where, std::string(e.what()) + " at root " + root_name(a));
    }
    prod *= f.value;
    rel += f.abs_err / std::abs(f.value);
  }
  return {prod, std::abs(prod) * rel};
}

WhittakerValue whittaker_padic(std::int64_t p, const NumericWeight& lam, const TorusPoint& a, const RootSystem& rs,
                               std::uint64_t cap) {
  check_length(lam, rs);
  if (static_cast<int>(a.k.size()) != rs.rank()) throw DimensionMismatch("cocharacter has the wrong length");
  if (p < 2) throw UsageError("p must be a prime");
  if (!a.dominant) return {{0, 0}, WhittakerMethod::casselman_shalika};
  auto W = enumerate_weyl(rs, cap);
  auto m = weight_to_root(rs);
  std::vector<double> k(a.k.begin(), a.k.end());
  const double lp = std::log(double(p));
  cplx sum = 0;
  double mag = 0;
  for (const auto& w : W.elements()) {
    auto wl = apply(w, lam, rs);
    cplx term = std::exp(-pair_coweight(plus_rho(wl, rs), m, k) * lp);
    for (const auto& alpha : rs.positive_roots()) {
      cplx d = 1.0 - std::exp(pair(wl, alpha, rs) * lp);
      if (std::abs(d) < 1e-12)
        throw Singular("Casselman-Shalika denominator vanishes at root " + root_name(alpha) + "; perturb lambda");
      term /= d;
    }
    sum += term;
    mag += std::abs(term);
  }
  return {{sum, 64 * eps * mag * (1 + rs.positive_roots().size())}, WhittakerMethod::casselman_shalika};
}

WhittakerValue whittaker_sl2_arch(cplx nu, double y) {
  if (!(y > 0)) throw DomainError("y must be positive");
  auto k = bessel_k(nu, 2 * pi * y);
  double f = 2 * std::sqrt(y);
  return {{f * k.value, f * k.abs_err}, WhittakerMethod::bessel_closed_form};
}

cplx jacquet_sl2_closed_form(cplx nu, double y) {
  return 2.0 * std::exp((nu + 0.5) * std::log(pi)) * std::sqrt(y) * bessel_k(nu, 2 * pi * y).value /
         gamma(nu + 0.5).value;
}

WhittakerValue jacquet_sl2_quadrature(cplx nu, double y) {
  if (!(y > 0)) throw DomainError("y must be positive");
  if (!(nu.real() > 0)) throw DomainError("the Jacquet integral converges only for Re nu > 0");
  // the integrand is even in x, so the integral is twice a Fourier cosine transform
  boost::math::quadrature::ooura_fourier_cos<double> fc(1e-12, 8);
  const cplx e = nu + 0.5;
  auto f = [&](double x) { return std::exp(e * std::log(y / (x * x + y * y))); };
  auto [re, err_re] = fc.integrate([&](double x) { return f(x).real(); }, 2 * pi);
  auto [im, err_im] = nu.imag() == 0 ? std::pair<double, double>{0, 0}
                                     : fc.integrate([&](double x) { return f(x).imag(); }, 2 * pi);
  // ooura reports relative error estimates
  double err = 2 * (std::abs(re) * (err_re + eps) + std::abs(im) * (err_im + eps));
  if (!(err <= 1e-8)) throw ConvergenceFailure("Jacquet quadrature did not converge", err);
  return {{2.0 * cplx(re, im), err}, WhittakerMethod::quadrature};
}

std::vector<cplx> leading_terms(const NumericWeight& lam, const RootSystem& rs, const std::vector<double>& H, double t,
                                std::uint64_t cap) {
  check_length(lam, rs);
  if (static_cast<int>(H.size()) != rs.rank()) throw DimensionMismatch("H has the wrong length");
  auto W = enumerate_weyl(rs, cap);
  auto m = weight_to_root(rs);
  std::vector<cplx> out;
  for (const auto& w : W.elements()) {
    auto wl = apply(w, lam, rs);
    cplx term = std::exp(-t * pair_coweight(plus_rho(wl, rs), m, H));
    for (const auto& alpha : rs.positive_roots()) {
      cplx x = -pair(wl, alpha, rs);
      // Gamma_R(x) has poles at 0, -2, -4, ...
      if (std::abs(x.imag()) < 1e-12 && x.real() < 1e-12 && std::abs(x.real() / 2 - std::round(x.real() / 2)) < 1e-12)
        throw Singular("lambda lies on a wall: Gamma_R pole at root " + root_name(alpha));
      term *= gamma_R(x).value;
    }
    out.push_back(term);
  }
  return out;
}

ComplexValue leading_asymptotics(const NumericWeight& lam, const RootSystem& rs, const std::vector<double>& H, double t,
                                 std::uint64_t cap) {
  cplx sum = 0;
  double mag = 0;
  for (cplx x : leading_terms(lam, rs, H, t, cap)) {
    sum += x;
    mag += std::abs(x);
  }
  return {sum, 100 * eps * mag};
}

}  // namespace eisen
