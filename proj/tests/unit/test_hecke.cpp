#include <doctest.h>

#include "eisen/errors.hpp"
#include "eisen/hecke.hpp"
#include "eisen/whittaker.hpp"

#include <cmath>
#include <numeric>
#include <random>

using namespace eisen;
using cplx = std::complex<double>;

namespace {

std::vector<cplx> random_alpha(int n, std::mt19937& gen) {
  std::uniform_real_distribution<double> re(-0.2, 0.2), im(-2, 2);
  std::vector<cplx> a(n);
  cplx sum = 0;
  for (int j = 0; j + 1 < n; ++j) sum += a[j] = cplx(re(gen), im(gen));
  a[n - 1] = -sum;
  return a;
}

// naive recursion over every d from 1 to m
cplx brute(const std::vector<cplx>& alpha, std::size_t from, std::int64_t m) {
  if (from + 1 == alpha.size()) return std::pow(double(m), alpha[from]);
  cplx out = 0;
  for (std::int64_t d = 1; d <= m; ++d)
    if (m % d == 0) out += std::pow(double(d), alpha[from]) * brute(alpha, from + 1, m / d);
  return out;
}

bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("factorize") {
  CHECK(factorize(1).empty());
  CHECK(factorize(360) == Factorization{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(9973) == Factorization{{9973, 1}});
  for (std::int64_t m = 1; m <= 5000; ++m) {
    std::int64_t prod = 1;
    for (auto [p, e] : factorize(m))
      for (int i = 0; i < e; ++i) prod *= p;
    CHECK(prod == m);
  }
  CHECK_THROWS_AS(factorize(0), UsageError);
}

TEST_CASE("Borel eigenvalue examples") {
  std::mt19937 gen(1);
  for (int n = 2; n <= 5; ++n) CHECK(borel_eigenvalue(n, random_alpha(n, gen), 1) == cplx(1));
  auto a = random_alpha(2, gen);
  for (std::int64_t p : {2, 3, 5, 101})
    CHECK(close(borel_eigenvalue(2, a, p), std::pow(double(p), a[0]) + std::pow(double(p), a[1]), 1e-13));
  auto b = random_alpha(3, gen);
  CHECK(close(borel_eigenvalue(3, b, 6), borel_eigenvalue(3, b, 2) * borel_eigenvalue(3, b, 3), 1e-10));
  CHECK_THROWS_AS(borel_eigenvalue(2, {0.1, 0.2}, 5), UsageError);
  CHECK_THROWS_AS(borel_eigenvalue(3, {0.1, -0.1}, 5), DimensionMismatch);
  CHECK_THROWS_AS(borel_eigenvalue(20, std::vector<cplx>(20, 0), std::int64_t(1) << 40), OverflowGuard);
}

TEST_CASE("Borel eigenvalue against brute-force divisor loops") {
  std::mt19937 gen(7);
  for (int n = 2; n <= 4; ++n) {
    auto a = random_alpha(n, gen);
    std::int64_t top = n == 2 ? 3000 : n == 3 ? 600 : 150;
    for (std::int64_t m = 1; m <= top; ++m) CHECK(close(borel_eigenvalue(n, a, m), brute(a, 0, m), 1e-10));
  }
}

TEST_CASE("multiplicativity up to 10^4") {
  std::mt19937 gen(13);
  const std::int64_t N = 10000;
  for (int n : {2, 3, 4}) {
    auto a = random_alpha(n, gen);
    std::vector<cplx> lam(N + 1);
    for (std::int64_t m = 1; m <= N; ++m) lam[m] = borel_eigenvalue(n, a, m);
    std::size_t pairs = 0;
    bool ok = true;
    for (std::int64_t x = 2; x <= N; ++x)
      for (std::int64_t y = x + 1; x * y <= N; ++y)
        if (std::gcd(x, y) == 1) {
          ++pairs;
          ok = ok && close(lam[x * y], lam[x] * lam[y], 1e-10);
        }
    CHECK(ok);
    CHECK(pairs > 10000);
  }
}

TEST_CASE("GL(2) eigenvalue matches the p-adic Whittaker function") {
  auto a1 = RootSystem::build({Family::A, 1});
  std::mt19937 gen(3);
  for (std::int64_t p : {2, 3, 5, 7, 11})
    for (int trial = 0; trial < 5; ++trial) {
      auto a = random_alpha(2, gen);
      // alpha = (nu, -nu) is the weight nu alpha, fundamental coordinate 2 nu
      cplx nu = a[0];
      std::int64_t pk = 1;
      for (int k = 0; k <= 6; ++k, pk *= p) {
        cplx w = whittaker_padic(p, {2.0 * nu}, TorusPoint::cocharacter({k}), a1).value.value;
        CHECK(close(borel_eigenvalue(2, a, pk), std::pow(double(p), k / 2.0) * w, 1e-10));
      }
    }
}

TEST_CASE("parabolic eigenvalue") {
  std::mt19937 gen(5);
  // trivial blocks: sum over c1 c2 = m of (c1 / c2)^z
  for (std::int64_t m : {1, 2, 12, 97}) {
    cplx want = 0;
    for (std::int64_t c = 1; c <= m; ++c)
      if (m % c == 0) want += std::pow(double(c) / double(m / c), cplx(0.3));
    CHECK(close(parabolic_eigenvalue({2, 2}, {0.3, -0.3}, m, {}), want, 1e-12));
  }
  CHECK(parabolic_eigenvalue({2, 1}, {0.2, -0.4}, 1, {}) == cplx(1));

  // (2,2), m = p: lambda_1(p) p^{z} + lambda_2(p) p^{-z}
  cplx z(0.15, 1.1);
  // any Hecke eigenvalue has lambda(1) = 1
  auto l1 = [](std::int64_t c) { return c == 1 ? cplx(1) : cplx(std::log(double(c)) + 1, 0.5); };
  auto l2 = [](std::int64_t c) { return c == 1 ? cplx(1) : cplx(0.25, -double(c)); };
  for (std::int64_t p : {2, 3, 13})
    CHECK(close(parabolic_eigenvalue({2, 2}, {z, -z}, p, {l1, l2}),
                l1(p) * std::pow(double(p), z) + l2(p) * std::pow(double(p), -z), 1e-12));

  // Levi blocks carrying Borel-series eigenvalues refine to the full Borel eigenvalue
  for (GLPartition parts : {GLPartition{2, 1}, GLPartition{2, 2}, GLPartition{3, 1}, GLPartition{2, 1, 1},
                            GLPartition{1, 3}, GLPartition{2, 3}, GLPartition{1, 1, 1}}) {
    const std::size_t r = parts.size();
    std::uniform_real_distribution<double> d(-0.3, 0.3);
    std::vector<cplx> zz(r);
    int n = 0;
    cplx acc = 0;
    for (std::size_t i = 0; i + 1 < r; ++i) {
      zz[i] = cplx(d(gen), 4 * d(gen));
      acc += double(parts[i]) * zz[i];
    }
    zz[r - 1] = -acc / double(parts[r - 1]);
    std::vector<LeviEigenvalue> levi;
    std::vector<cplx> full;
    for (std::size_t i = 0; i < r; ++i) {
      auto beta = random_alpha(parts[i], gen);
      if (parts[i] == 1) beta = {0};
      n += parts[i];
      for (cplx b : beta) full.push_back(b + zz[i]);
      if (parts[i] == 1) {
        levi.emplace_back();
      } else {
        int k = parts[i];
        levi.emplace_back([k, beta](std::int64_t c) { return borel_eigenvalue(k, beta, c); });
      }
    }
    for (std::int64_t m = 1; m <= 200; ++m)
      CHECK(close(parabolic_eigenvalue(parts, zz, m, levi), borel_eigenvalue(n, full, m), 1e-10));
  }
  CHECK_THROWS_AS(parabolic_eigenvalue({2, 1}, {0.1, 0.1}, 5, {}), UsageError);
  CHECK_THROWS_AS(parabolic_eigenvalue({2, 1}, {0.1}, 5, {}), DimensionMismatch);
}
