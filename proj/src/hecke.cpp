#include "eisen/hecke.hpp"
#include "eisen/errors.hpp"

#include <cmath>
#include <numeric>

namespace eisen {

namespace {

using cplx = std::complex<double>;

// number of weak compositions of e into k parts, saturating at the guard
std::uint64_t compositions(int e, int k) {
  // C(e + k - 1, k - 1)
  double c = 1;
  for (int i = 1; i < k; ++i) c = c * (e + i) / i;
  return c > 1e18 ? std::uint64_t(1e18) : static_cast<std::uint64_t>(std::llround(c));
}

// calls visit(c) for every ordered factorization c_1 ... c_k = m
template <class F>
void ordered_factorizations(std::int64_t m, int k, F&& visit) {
  auto f = factorize(m);
  double total = 1;
  for (const auto& [p, e] : f) total *= double(compositions(e, k));
  if (total > double(max_divisor_terms))
    throw OverflowGuard("divisor sum has " + std::to_string(total) + " terms, limit " + std::to_string(max_divisor_terms));

  std::vector<std::int64_t> c(k, 1);
  // recursion over primes, then over how the exponent of that prime is spread across the k slots
  std::function<void(std::size_t)> over_primes;
  std::function<void(std::size_t, int, int)> spread = [&](std::size_t pi, int slot, int left) {
    if (slot == k - 1) {
      std::int64_t save = c[slot];
      for (int i = 0; i < left; ++i) c[slot] *= f[pi].first;
      over_primes(pi + 1);
      c[slot] = save;
      return;
    }
    std::int64_t save = c[slot];
    for (int take = 0; take <= left; ++take) {
      spread(pi, slot + 1, left - take);
      c[slot] *= f[pi].first;
    }
    c[slot] = save;
  };
  over_primes = [&](std::size_t pi) {
    if (pi == f.size()) {
      visit(c);
      return;
    }
    spread(pi, 0, f[pi].second);
  };
  over_primes(0);
}

cplx power(std::int64_t c, cplx a) { return c == 1 ? cplx(1) : std::exp(a * std::log(double(c))); }

}  // namespace

Factorization factorize(std::int64_t m) {
  if (m < 1) throw UsageError("m must be a positive integer");
  Factorization out;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

cplx borel_eigenvalue(int n, const std::vector<cplx>& alpha, std::int64_t m) {
  if (n < 1 || static_cast<int>(alpha.size()) != n) throw DimensionMismatch("alpha must have n entries");
  cplx sum = std::accumulate(alpha.begin(), alpha.end(), cplx(0));
  if (std::abs(sum) > 1e-12) throw UsageError("alpha must sum to zero");
  cplx out = 0;
  ordered_factorizations(m, n, [&](const std::vector<std::int64_t>& c) {
    cplx t = 1;
    for (int j = 0; j < n; ++j) t *= power(c[j], alpha[j]);
    out += t;
  });
  return out;
}

cplx parabolic_eigenvalue(const GLPartition& parts, const std::vector<cplx>& z, std::int64_t m,
                          const std::vector<LeviEigenvalue>& levi) {
  const std::size_t r = parts.size();
  if (r == 0 || z.size() != r) throw DimensionMismatch("need one z per block");
  if (!levi.empty() && levi.size() != r) throw DimensionMismatch("need one Levi eigenvalue per block");
  cplx weighted = 0;
  for (std::size_t i = 0; i < r; ++i) weighted += double(parts[i]) * z[i];
  if (std::abs(weighted) > 1e-12) throw UsageError("z must satisfy n_1 z_1 + ... + n_r z_r = 0");
  cplx out = 0;
  ordered_factorizations(m, static_cast<int>(r), [&](const std::vector<std::int64_t>& c) {
    cplx t = 1;
    for (std::size_t i = 0; i < r; ++i) {
      if (!levi.empty() && levi[i]) t *= levi[i](c[i]);
      t *= power(c[i], z[i]);
    }
    out += t;
  });
  return out;
}

}  // namespace eisen
