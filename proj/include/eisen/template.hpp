#pragma once

#include "eisen/glcoords.hpp"
#include "eisen/parabolic.hpp"
#include "eisen/symalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace eisen {

struct SatakeAssignment {
  ParabolicData parabolic;
  std::map<int, Symbol> s_symbols;  // label -> s-variable (root coordinates only)
  // per Levi component: coefficients of mu(pi) on the component's nodes, simple-root basis
  std::vector<std::vector<LinearForm>> levi_spectral;
  std::vector<std::string> component_names;  // "π", "π'", ...
  SymbolicWeight mu;                          // full Satake parameter, fundamental-weight basis
  SymbolicWeight mu_pi;                       // Levi part only
  std::vector<LinearForm> relations;          // each = 0
};

// mu = sum s_a varpi_a + mu(pi); spectral symbols t, t', ... per component
SatakeAssignment root_assignment(const ParabolicData& p);
// GL(n) partition in z / v coordinates: s_i = z_i + rho_P(i), last z eliminated
SatakeAssignment classical_assignment(const GLPartition& parts);
// GL(n) Borel with Langlands parameters alpha1..alphan
SatakeAssignment alpha_assignment(int n);

// rename symbols everywhere (mu, relations, s-symbols); throws SymbolCollision
SatakeAssignment rename_symbols(const SatakeAssignment& a, const std::map<std::string, std::string>& names);
FormulaExpression rename_symbols(const FormulaExpression& f, const std::map<std::string, std::string>& names);

// <mu, alpha^vee> for each alpha in Delta_U, reduced by the relations
std::vector<std::pair<Root, LinearForm>> unipotent_pairings(const SatakeAssignment& a);

enum class CoeffMode { flat, grouped };
enum class Normalization { hecke, petersson };

struct GroupedFactor {
  Factor factor;
  std::vector<LinearForm> atoms;  // flat zeta* arguments it stands for
  std::size_t orbit_size = 0;
};

std::vector<GroupedFactor> grouped_factors(const SatakeAssignment& a);

FormulaExpression first_coefficient(const SatakeAssignment& a, CoeffMode mode = CoeffMode::grouped,
                                    Normalization norm = Normalization::hecke);

// label for an orbit touching the given components
std::string orbit_label(const ParabolicData& p, const Orbit& o, const std::vector<std::string>& names);

struct ConstantTermExpansion {
  struct Term {
    WeylElement w;
    FormulaExpression coefficient;  // product of c(x) atoms
    SymbolicWeight exponent;        // w lambda
  };
  std::vector<Term> terms;
};

ConstantTermExpansion constant_term(const RootSystem& rs, const SymbolicWeight& lam,
                                    std::uint64_t cap = default_weyl_cap);
// c(x) -> zeta*(x) zeta*(x+1)^-1
FormulaExpression expand_c(const FormulaExpression& f);

// N^L(mu(pi)) / N(mu) against prod over Delta_U of zeta_v(<mu,alpha^vee>+1)^-1, as factor multisets
bool minimal_hecke_ratio_check(const SatakeAssignment& a, Place v = Place{0});

}  // namespace eisen
