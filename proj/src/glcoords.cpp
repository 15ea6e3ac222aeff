#include "eisen/glcoords.hpp"
#include "eisen/errors.hpp"

#include <numeric>

namespace eisen {

std::int64_t b_coeff(int n, int i, int j) {
  if (i + j <= n) return std::int64_t(i) * j;
  return std::int64_t(n - i) * (n - j);
}

GLParameters alpha_from_s(int n, const std::vector<LinearForm>& s) {
  if (n < 2) throw UsageError("GL(n) needs n >= 2");
  if (static_cast<int>(s.size()) != n - 1)
    throw DimensionMismatch("expected " + std::to_string(n - 1) + " s-variables, got " + std::to_string(s.size()));
  // B_j(s), j = 1..n-1
  std::vector<LinearForm> B(n);
  for (int j = 1; j < n; ++j)
    for (int i = 1; i < n; ++i) B[j] += (s[i - 1] - Rational(1, n)) * Rational(b_coeff(n, i, j));
  GLParameters out{n, std::vector<LinearForm>(n)};
  out.alpha[0] = B[n - 1];
  for (int i = 2; i < n; ++i) out.alpha[i - 1] = B[n - i] - B[n - i + 1];
  out.alpha[n - 1] = -B[1];
  return out;
}

std::vector<LinearForm> s_from_alpha(const GLParameters& a) {
  std::vector<LinearForm> s;
  for (int i = 0; i + 1 < a.n; ++i) s.push_back((a.alpha[i] - a.alpha[i + 1] + 1) * Rational(1, a.n));
  return s;
}

std::vector<Rational> rho_P(const GLPartition& parts) {
  for (int k : parts)
    if (k < 1) throw UsageError("partition parts must be positive");
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<Rational> rho;
  int before = 0;
  for (int nj : parts) {
    rho.push_back(Rational(n - nj, 2) - before);
    before += nj;
  }
  return rho;
}

GLParameters eisenstein_parameters(const GLPartition& parts, const std::vector<LinearForm>& s,
                                   const std::vector<GLParameters>& levi_alphas) {
  if (s.size() != parts.size() || levi_alphas.size() != parts.size())
    throw DimensionMismatch("one s-variable and one Levi parameter block per part");
  auto rho = rho_P(parts);
  LinearForm weighted;
  GLParameters out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (static_cast<int>(levi_alphas[i].alpha.size()) != parts[i])
      throw DimensionMismatch("Levi block " + std::to_string(i + 1) + " has the wrong length");
    weighted += s[i] * Rational(parts[i]);
    for (const auto& a : levi_alphas[i].alpha) out.alpha.push_back(a + s[i] - rho[i]);
  }
  if (!weighted.is_zero()) throw UsageError("s must satisfy n1 s1 + ... + nr sr = 0");
  out.n = static_cast<int>(out.alpha.size());
  return out;
}

std::vector<LinearForm> power_function_exponents(const GLParameters& a) {
  int n = a.n;
  std::vector<LinearForm> out;
  for (int i = 1; i < n; ++i) {
    LinearForm e;
    for (int k = 1; k <= n - i; ++k) e += a.alpha[k - 1] + (Rational(n + 1, 2) - k);
    out.push_back(e);
  }
  return out;
}

SymbolicWeight gl_to_weight(const std::vector<LinearForm>& alpha) {
  SymbolicWeight m;
  for (std::size_t j = 0; j + 1 < alpha.size(); ++j) m.push_back(alpha[j] - alpha[j + 1]);
  return m;
}

}  // namespace eisen
