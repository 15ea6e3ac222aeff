#pragma once

#include "eisen/glcoords.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace eisen {

using Factorization = std::vector<std::pair<std::int64_t, int>>;  // (prime, exponent), increasing primes

Factorization factorize(std::int64_t m);

constexpr std::uint64_t max_divisor_terms = 10000000;

// sum over ordered factorizations c_1 ... c_n = m of c_1^{alpha_1} ... c_n^{alpha_n}; needs sum alpha = 0
std::complex<double> borel_eigenvalue(int n, const std::vector<std::complex<double>>& alpha, std::int64_t m);

// Hecke eigenvalue of a cusp form on a Levi block; an empty function means the trivial block (always 1)
using LeviEigenvalue = std::function<std::complex<double>(std::int64_t)>;

// sum over c_1 ... c_r = m of prod_i lambda_i(c_i) c_i^{z_i}, with z_i = s_i - rho_P(i) and sum n_i z_i = 0
std::complex<double> parabolic_eigenvalue(const GLPartition& parts, const std::vector<std::complex<double>>& z,
                                          std::int64_t m, const std::vector<LeviEigenvalue>& levi);

}  // namespace eisen
