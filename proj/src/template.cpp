#include "eisen/template.hpp"
#include "eisen/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace eisen {

namespace {

std::string primes(std::size_t k) { return std::string(k, '\''); }

// names for c components: one gets no prime, several get ', '', ...
std::string decorated(const std::string& base, std::size_t c, std::size_t count) {
  return count == 1 ? base : base + primes(c + 1);
}

bool is_spectral(const Symbol& s) {
  return s.kind == SymbolKind::spectral || s.kind == SymbolKind::classical_v;
}

// mu(pi) weight coordinates from simple-root coefficients on the Levi nodes
SymbolicWeight levi_weight(const ParabolicData& p, const std::vector<std::vector<LinearForm>>& coefs) {
  const auto& c = p.rs.cartan();
  SymbolicWeight m(p.rs.rank());
  for (std::size_t k = 0; k < p.levi_components.size(); ++k) {
    const auto& nodes = p.levi_components[k].nodes;
    for (std::size_t j = 0; j < nodes.size(); ++j)
      for (int col = 0; col < p.rs.rank(); ++col)
        if (c[nodes[j] - 1][col] != 0) m[col] += coefs[k][j] * Rational(c[nodes[j] - 1][col]);
  }
  return m;
}

void collect(const LinearForm& f, std::set<Symbol>& out) {
  for (const auto& [s, c] : f.terms()) out.insert(s);
}

void check_renaming(const std::set<Symbol>& present, const std::map<std::string, std::string>& names) {
  std::map<std::pair<std::string, bool>, std::string> seen;
  for (const auto& s : present) {
    auto it = names.find(s.name);
    std::string target = it == names.end() ? s.name : it->second;
    auto [pos, fresh] = seen.emplace(std::make_pair(target, s.imaginary), s.name);
    if (!fresh && pos->second != s.name)
      throw SymbolCollision("renaming makes '" + s.name + "' and '" + pos->second + "' the same symbol '" +
                            target + "'");
  }
}

// label pieces hardcoded for the exceptional examples
struct Alias {
  const char* group;
  const char* levi;
  std::size_t size;
  const char* label;
};
constexpr Alias alias_table[] = {
    {"E8", "E7", 56, "56"},
    {"E8", "D7", 64, "Spin"},
    {"E8", "D7", 14, "Stan"},
};

}  // namespace

SatakeAssignment root_assignment(const ParabolicData& p) {
  SatakeAssignment a;
  a.parabolic = p;
  std::size_t count = p.levi_components.size();
  for (int label : p.sigma_L_complement)
    a.s_symbols.emplace(label, Symbol::s(p.is_maximal() ? "s" : "s" + std::to_string(label)));

  for (std::size_t k = 0; k < count; ++k) {
    const auto& comp = p.levi_components[k];
    a.component_names.push_back(decorated("π", k, count));
    std::string tail = count == 1 ? "" : primes(k + 1);
    std::vector<LinearForm> coefs;
    if (comp.type.family == Family::A && comp.type.rank == 1) {
      coefs.push_back(LinearForm::of(Symbol::t("t" + tail)));
    } else if (comp.type.family == Family::A) {
      // GL(k+1) coordinates (it_1, ..., it_{k+1}), t_{k+1} = -(t_1 + ... + t_k)
      LinearForm prefix, total;
      for (int j = 1; j <= comp.type.rank + 1; ++j) {
        auto t = LinearForm::of(Symbol::t("t" + std::to_string(j) + tail));
        total += t;
        if (j <= comp.type.rank) {
          prefix += t;
          coefs.push_back(prefix);
        }
      }
      a.relations.push_back(total);
    } else {
      for (std::size_t j = 0; j < comp.nodes.size(); ++j)
        coefs.push_back(LinearForm::of(Symbol::t("t" + std::to_string(j + 1) + tail)));
    }
    a.levi_spectral.push_back(std::move(coefs));
  }
  a.mu_pi = levi_weight(p, a.levi_spectral);
  a.mu = a.mu_pi;
  for (const auto& [label, sym] : a.s_symbols) a.mu[label - 1] += LinearForm::of(sym);
  return a;
}

SatakeAssignment classical_assignment(const GLPartition& parts) {
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  if (n < 2) throw UsageError("GL(n) needs n >= 2");
  auto rs = RootSystem::build({Family::A, n - 1});
  auto p = build_parabolic(rs, levi_from_partition(parts));
  const std::size_t r = parts.size();

  // z_r is fixed by n_1 z_1 + ... + n_r z_r = 0
  std::vector<LinearForm> z(r);
  for (std::size_t i = 0; i + 1 < r; ++i) {
    z[i] = LinearForm::of(Symbol::s("z" + std::to_string(i + 1)));
    z[r - 1] -= z[i] * Rational(parts[i], parts[r - 1]);
  }
  auto rho = rho_P(parts);
  std::vector<LinearForm> s(r);
  for (std::size_t i = 0; i < r; ++i) s[i] = z[i] + rho[i];

  std::size_t blocks = std::count_if(parts.begin(), parts.end(), [](int k) { return k > 1; });
  std::vector<GLParameters> levi;
  std::vector<LinearForm> flat_levi;
  SatakeAssignment a;
  std::size_t seen = 0;
  for (int k : parts) {
    GLParameters g{k, std::vector<LinearForm>(k)};
    if (k == 2) {
      std::string tail = blocks == 1 ? "" : primes(seen + 1);
      g = alpha_from_s(2, {LinearForm::of(Symbol::v("v" + tail)) + Rational(1, 2)});
    } else if (k > 2) {
      std::string tail = blocks == 1 ? "" : primes(seen + 1);
      std::vector<LinearForm> sv;
      for (int j = 1; j < k; ++j) sv.push_back(LinearForm::of(Symbol::v("v" + std::to_string(j) + tail)) + Rational(1, k));
      g = alpha_from_s(k, sv);
    }
    if (k > 1) {
      a.component_names.push_back(decorated("π", seen, blocks));
      std::vector<LinearForm> coefs;
      LinearForm prefix;
      for (int j = 0; j + 1 < k; ++j) coefs.push_back(prefix += g.alpha[j]);
      a.levi_spectral.push_back(std::move(coefs));
      ++seen;
    }
    flat_levi.insert(flat_levi.end(), g.alpha.begin(), g.alpha.end());
    levi.push_back(std::move(g));
  }
  auto A = eisenstein_parameters(parts, s, levi);
  a.parabolic = p;
  a.mu = gl_to_weight(A.alpha);
  a.mu_pi = gl_to_weight(flat_levi);
  // zero the Levi part at the cut nodes: only pairings with Levi coroots matter there
  for (int label : p.sigma_L_complement) a.mu_pi[label - 1] = LinearForm();
  return a;
}

SatakeAssignment alpha_assignment(int n) {
  if (n < 2) throw UsageError("GL(n) needs n >= 2");
  auto rs = RootSystem::build({Family::A, n - 1});
  SatakeAssignment a;
  a.parabolic = build_parabolic(rs, {});
  std::vector<LinearForm> alpha;
  for (int i = 1; i <= n; ++i) alpha.push_back(LinearForm::of(Symbol::s("alpha" + std::to_string(i))));
  a.mu = gl_to_weight(alpha);
  a.mu_pi = SymbolicWeight(n - 1);
  return a;
}

FormulaExpression rename_symbols(const FormulaExpression& f, const std::map<std::string, std::string>& names) {
  std::set<Symbol> present;
  for (const auto& x : f.factors) collect(x.argument, present);
  check_renaming(present, names);
  FormulaExpression out = f;
  for (auto& x : out.factors) x.argument = x.argument.rename(names);
  return canonicalize(out);
}

SatakeAssignment rename_symbols(const SatakeAssignment& a, const std::map<std::string, std::string>& names) {
  std::set<Symbol> present;
  for (const auto& m : a.mu) collect(m, present);
  for (const auto& r : a.relations) collect(r, present);
  check_renaming(present, names);
  SatakeAssignment out = a;
  for (auto& m : out.mu) m = m.rename(names);
  for (auto& m : out.mu_pi) m = m.rename(names);
  for (auto& r : out.relations) r = r.rename(names);
  for (auto& comp : out.levi_spectral)
    for (auto& c : comp) c = c.rename(names);
  for (auto& [label, sym] : out.s_symbols)
    if (auto it = names.find(sym.name); it != names.end()) sym.name = it->second;
  return out;
}

std::vector<std::pair<Root, LinearForm>> unipotent_pairings(const SatakeAssignment& a) {
  RelationSystem rel(a.relations);
  std::vector<std::pair<Root, LinearForm>> out;
  for (const auto& beta : a.parabolic.delta_U) out.emplace_back(beta, rel.reduce(pair(a.mu, beta, a.parabolic.rs)));
  return out;
}

std::string orbit_label(const ParabolicData& p, const Orbit& o, const std::vector<std::string>& names) {
  std::string label;
  for (auto c : o.touches) {
    if (!label.empty()) label += "×";
    label += names.at(c);
  }
  if (p.rs.type().family == Family::A) return label;
  std::string group = p.rs.type().name();
  if (o.touches.size() == 1) {
    std::string levi = p.levi_components[*o.touches.begin()].type.name();
    for (const auto& al : alias_table)
      if (group == al.group && levi == al.levi && o.roots.size() == al.size) return label + "," + al.label;
  }
  return label + ",dim" + std::to_string(o.roots.size());
}

std::vector<GroupedFactor> grouped_factors(const SatakeAssignment& a) {
  RelationSystem rel(a.relations);
  const auto& p = a.parabolic;
  std::vector<GroupedFactor> out;
  for (const auto& o : wl_orbits(p).orbits) {
    GroupedFactor g;
    g.orbit_size = o.roots.size();
    for (const auto& beta : o.roots) g.atoms.push_back(rel.reduce(pair(a.mu, beta, p.rs) + 1));
    if (o.touches.empty()) {
      g.factor = Factor::zeta_star(g.atoms.front());
    } else {
      g.factor = Factor::L_star(g.atoms.front().drop(is_spectral), orbit_label(p, o, a.component_names));
    }
    out.push_back(std::move(g));
  }
  return out;
}

FormulaExpression first_coefficient(const SatakeAssignment& a, CoeffMode mode, Normalization norm) {
  FormulaExpression f;
  if (mode == CoeffMode::flat) {
    for (const auto& [beta, x] : unipotent_pairings(a)) f.factors.push_back(Factor::zeta_star(x + 1));
  } else {
    for (auto& g : grouped_factors(a)) f.factors.push_back(std::move(g.factor));
  }
  if (norm == Normalization::petersson) {
    for (const auto& name : a.component_names) f.factors.push_back(Factor::norm_symbol("Ad " + name));
    f.scalar = ScalarFlag::up_to_nonzero_constant;
  }
  return canonicalize(std::move(f));
}

ConstantTermExpansion constant_term(const RootSystem& rs, const SymbolicWeight& lam, std::uint64_t cap) {
  if (static_cast<int>(lam.size()) != rs.rank()) throw DimensionMismatch("lambda has the wrong length");
  auto W = enumerate_weyl(rs, cap);
  ConstantTermExpansion out;
  for (const auto& w : W.elements()) {
    ConstantTermExpansion::Term term{w, {}, apply(w, lam, rs)};
    auto perm = root_permutation(w, rs);
    for (std::size_t k = 0; k < perm.size(); ++k)
      if (perm[k].second < 0) term.coefficient.factors.push_back(Factor::c(pair(lam, rs.positive_roots()[k], rs)));
    term.coefficient = canonicalize(std::move(term.coefficient));
    out.terms.push_back(std::move(term));
  }
  return out;
}

FormulaExpression expand_c(const FormulaExpression& f) {
  FormulaExpression out{{}, f.scalar};
  for (const auto& x : f.factors) {
    if (x.kind != FactorKind::c_factor) {
      out.factors.push_back(x);
      continue;
    }
    out.factors.push_back(Factor::zeta_star(x.argument, x.exponent));
    out.factors.push_back(Factor::zeta_star(x.argument + 1, -x.exponent));
  }
  return canonicalize(std::move(out));
}

bool minimal_hecke_ratio_check(const SatakeAssignment& a, Place v) {
  RelationSystem rel(a.relations);
  const auto& p = a.parabolic;
  FormulaExpression N, NL, expected;
  for (const auto& beta : p.rs.positive_roots())
    N.factors.push_back(Factor::local_zeta(v, rel.reduce(pair(a.mu, beta, p.rs) + 1)));
  for (const auto& beta : p.delta_L)
    NL.factors.push_back(Factor::local_zeta(v, rel.reduce(pair(a.mu_pi, beta, p.rs) + 1)));
  for (const auto& beta : p.delta_U)
    expected.factors.push_back(Factor::local_zeta(v, rel.reduce(pair(a.mu, beta, p.rs) + 1), -1));
  return canonicalize(multiply(NL, inverse(N))) == canonicalize(expected);
}

}  // namespace eisen
