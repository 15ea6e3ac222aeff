#include "eisen/specfun.hpp"
#include "eisen/errors.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace eisen {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();

constexpr double lanczos_g = 7;
constexpr double lanczos[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                              771.32342877765313,   -176.61502916214059,   12.507343278686905,
                              -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool near_int(double x, double tol = 1e-14) { return std::abs(x - std::round(x)) <= tol * std::max(1.0, std::abs(x)); }

bool nonpositive_int(cplx z) { return z.imag() == 0 && z.real() <= 0 && near_int(z.real()); }

// log Gamma for Re z >= 1/2
cplx lanczos_log(cplx z) {
  z -= 1.0;
  cplx x = lanczos[0];
  for (int i = 1; i < 9; ++i) x += lanczos[i] / (z + double(i));
  cplx t = z + lanczos_g + 0.5;
  return 0.5 * std::log(2 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// rough relative error of exp(log Gamma): rounding in the log grows with its size
double gamma_rel_err(cplx z) { return 20 * eps * (1 + std::abs(z) * std::max(1.0, std::log(std::abs(z) + 1))); }

// Borwein's algorithm 2 for eta(s), n chosen from |Im s|
cplx eta_borwein(cplx s) {
  double t = std::abs(s.imag());
  int n = static_cast<int>(std::ceil((pi * t + std::log1p(2 * t) + 38) / std::log(3 + std::sqrt(8.0))));
  n = std::max(n, 20);
  // d_k = sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), in log space then normalized
  std::vector<double> la(n + 1);
  double top = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n; ++i) {
    la[i] = std::lgamma(n + i) + i * std::log(4.0) - std::lgamma(n - i + 1) - std::lgamma(2 * i + 1);
    top = std::max(top, la[i]);
  }
  std::vector<double> d(n + 1);
  double acc = 0;
  for (int i = 0; i <= n; ++i) d[i] = acc += std::exp(la[i] - top);
  cplx sum = 0;
  for (int k = 0; k < n; ++k) {
    double e = (d[k] - d[n]) / d[n];
    cplx term = e * std::exp(-s * std::log(double(k + 1)));
    sum += (k % 2 == 0) ? term : -term;
  }
  return -sum;
}

}  // namespace

cplx log_gamma(cplx z) {
  if (nonpositive_int(z)) throw PoleAt(z, "Gamma has a pole at a nonpositive integer");
  if (z.real() >= 0.5) return lanczos_log(z);
  // reflection, Gamma(z) Gamma(1-z) = pi / sin(pi z)
  return std::log(pi) - std::log(std::sin(pi * z)) - lanczos_log(1.0 - z);
}

ComplexValue gamma(cplx z) {
  if (nonpositive_int(z)) throw PoleAt(z, "Gamma has a pole at a nonpositive integer");
  cplx v;
  if (z.real() >= 0.5) {
    v = std::exp(lanczos_log(z));
  } else {
    v = pi / (std::sin(pi * z) * std::exp(lanczos_log(1.0 - z)));
  }
  return {v, std::abs(v) * gamma_rel_err(z)};
}

ComplexValue zeta(cplx s) {
  if (s == cplx(1)) throw PoleAt(s, "zeta has a pole at 1");
  if (s == cplx(0)) return {-0.5, 0};
  if (s.real() < 0.5) {
    // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    if (s.imag() == 0 && s.real() < 0 && near_int(s.real() / 2)) return {0, 0};  // trivial zeros
    auto z1 = zeta(1.0 - s);
    cplx lg = log_gamma(1.0 - s);
    cplx f = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(pi) + lg) * std::sin(pi * s / 2.0);
    cplx v = f * z1.value;
    return {v, std::abs(f) * z1.abs_err + std::abs(v) * gamma_rel_err(1.0 - s)};
  }
  cplx denom = 1.0 - std::exp((1.0 - s) * std::log(2.0));
  if (std::abs(denom) < 1e-300) throw PoleAt(s, "eta/zeta conversion breaks down on Re s = 1");
  cplx v = eta_borwein(s) / denom;
  double n_terms = 40 + std::abs(s.imag()) * 2;
  return {v, (std::abs(v) + 1) * n_terms * eps / std::abs(denom)};
}

ComplexValue gamma_R(cplx s) {
  if (nonpositive_int(s / 2.0)) throw PoleAt(s, "Gamma_R has a pole at a nonpositive even integer");
  auto g = gamma(s / 2.0);
  cplx f = std::exp(-s / 2.0 * std::log(pi));
  return {f * g.value, std::abs(f) * g.abs_err};
}

ComplexValue zeta_star(cplx w) {
  if (w == cplx(0) || w == cplx(1)) throw PoleAt(w, "zeta* has poles at 0 and 1");
  // Gamma(w/2) has a pole exactly where zeta has a trivial zero: use the functional equation there
  if (nonpositive_int(w / 2.0)) return zeta_star(1.0 - w);
  auto g = gamma_R(w);
  auto z = zeta(w);
  cplx v = g.value * z.value;
  return {v, std::abs(g.value) * z.abs_err + std::abs(z.value) * g.abs_err};
}

ComplexValue local_zeta(Place v, cplx s) {
  if (v.p == 0) return gamma_R(s);
  cplx d = 1.0 - std::exp(-s * std::log(double(v.p)));
  if (std::abs(d) < 1e-14) throw PoleAt(s, "local zeta factor has a pole");
  cplx val = 1.0 / d;
  return {val, std::abs(val) * 4 * eps};
}

ComplexValue c_factor(cplx s) {
  auto a = zeta_star(s);
  auto b = zeta_star(s + 1.0);
  if (std::abs(b.value) == 0) throw PoleAt(s, "c(s) denominator vanishes");
  cplx v = a.value / b.value;
  return {v, std::abs(v) * (a.abs_err / std::max(std::abs(a.value), 1e-300) + b.abs_err / std::abs(b.value))};
}

ComplexValue bessel_k(cplx nu, double x) {
  if (!(x > 0)) throw DomainError("K-Bessel needs x > 0");
  // K_nu(x) = e^{-x} int_0^inf e^{-x (cosh t - 1)} cosh(nu t) dt; cosh(nu t) split into real and imaginary parts
  const double a = nu.real(), b = nu.imag();
  boost::math::quadrature::exp_sinh<double> integrator(12);
  auto base = [x](double t) {
    // cosh t - 1 = 2 sinh^2(t/2) avoids cancellation near 0
    double h = std::sinh(t / 2);
    return std::exp(-2 * x * h * h);
  };
  auto re = [&](double t) {
    double w = base(t);
    return w == 0 ? 0.0 : w * std::cosh(a * t) * std::cos(b * t);
  };
  auto im = [&](double t) {
    double w = base(t);
    return w == 0 ? 0.0 : w * std::sinh(a * t) * std::sin(b * t);
  };
  double err_re = 0, err_im = 0, l1_re = 0, l1_im = 0;
  double vr = integrator.integrate(re, 1e-14, &err_re, &l1_re);
  double vi = b == 0 || a == 0 ? 0.0 : integrator.integrate(im, 1e-14, &err_im, &l1_im);
  double scale = std::exp(-x);
  double err = (err_re + err_im + 50 * eps * (l1_re + l1_im)) * scale;
  return {cplx(vr, vi) * scale, err};
}

}  // namespace eisen
