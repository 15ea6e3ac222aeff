#pragma once

#include "eisen/roots.hpp"
#include "eisen/symalg.hpp"

#include <vector>

namespace eisen {

struct GLParameters {
  int n = 0;
  std::vector<LinearForm> alpha;  // sums to zero
};

using GLPartition = std::vector<int>;

// b_{i,j} for GL(n), 1-based
std::int64_t b_coeff(int n, int i, int j);

GLParameters alpha_from_s(int n, const std::vector<LinearForm>& s);
// s_i = (alpha_i - alpha_{i+1} + 1)/n
std::vector<LinearForm> s_from_alpha(const GLParameters& a);

std::vector<Rational> rho_P(const GLPartition& parts);

// blocks alpha_{i,k} + s_i - rho_P(i)
GLParameters eisenstein_parameters(const GLPartition& parts, const std::vector<LinearForm>& s,
                                   const std::vector<GLParameters>& levi_alphas);

// exponent of y_i in I(xy, alpha), i = 1..n-1
std::vector<LinearForm> power_function_exponents(const GLParameters& a);

// fundamental-weight coordinates of the A_{n-1} weight: m_j = alpha_j - alpha_{j+1}
SymbolicWeight gl_to_weight(const std::vector<LinearForm>& alpha);

}  // namespace eisen
