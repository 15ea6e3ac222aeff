#include "eisen/parabolic.hpp"
#include "eisen/errors.hpp"

#include <algorithm>
#include <deque>

namespace eisen {

namespace {

// chain order for a path-shaped component: start at the smallest end node
std::vector<int> chain_order(std::vector<int> nodes, const IntMatrix& c) {
  auto adjacent = [&](int a, int b) { return a != b && c[a - 1][b - 1] != 0; };
  auto degree = [&](int a) {
    return std::count_if(nodes.begin(), nodes.end(), [&](int b) { return adjacent(a, b); });
  };
  int start = nodes.front();
  for (int a : nodes)
    if (degree(a) <= 1) {
      start = a;
      break;
    }
  std::vector<int> out{start};
  while (out.size() < nodes.size()) {
    int next = -1;
    for (int b : nodes)
      if (adjacent(out.back(), b) && std::find(out.begin(), out.end(), b) == out.end()) next = b;
    if (next < 0) return nodes;
    out.push_back(next);
  }
  return out;
}

}  // namespace

IntMatrix ParabolicData::component_cartan(std::size_t c) const {
  const auto& nodes = levi_components.at(c).nodes;
  IntMatrix m(nodes.size(), std::vector<int>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j) m[i][j] = rs.cartan()[nodes[i] - 1][nodes[j] - 1];
  return m;
}

ParabolicData build_parabolic(const RootSystem& rs, const NodeSet& levi_simples) {
  for (int a : levi_simples)
    if (a < 1 || a > rs.rank()) throw UsageError("Levi node " + std::to_string(a) + " out of range");
  ParabolicData p{rs, levi_simples, {}, {}, {}, {}, {}};
  for (int a = 1; a <= rs.rank(); ++a)
    if (!levi_simples.count(a)) p.sigma_L_complement.push_back(a);

  Weight twice_rho_L{std::vector<Rational>(rs.rank(), Rational(0))};
  for (const auto& alpha : rs.positive_roots()) {
    bool inside = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (alpha.coords[i] != 0 && !levi_simples.count(i + 1)) inside = false;
    if (inside) {
      p.delta_L.push_back(alpha);
      auto w = rs.to_weight(alpha);
      for (int i = 0; i < rs.rank(); ++i) twice_rho_L.coords[i] += w.coords[i];
    } else {
      p.delta_U.push_back(alpha);
    }
  }
  p.rho_L = twice_rho_L;
  for (auto& x : p.rho_L.coords) x /= 2;

  // connected components of S in the Dynkin diagram
  NodeSet left = levi_simples;
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (auto it = left.begin(); it != left.end();) {
        if (rs.cartan()[comp[k] - 1][*it - 1] != 0) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    std::sort(comp.begin(), comp.end());
    IntMatrix m(comp.size(), std::vector<int>(comp.size()));
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp.size(); ++j) m[i][j] = rs.cartan()[comp[i] - 1][comp[j] - 1];
    CartanType t = identify_cartan_type(m);
    if (t.family == Family::A) comp = chain_order(comp, rs.cartan());
    p.levi_components.push_back({comp, t});
  }
  return p;
}

OrbitPartition wl_orbits(const ParabolicData& p) {
  const auto& rs = p.rs;
  std::vector<bool> done(p.delta_U.size(), false);
  std::map<std::vector<int>, std::size_t> where;
  for (std::size_t k = 0; k < p.delta_U.size(); ++k) where[p.delta_U[k].coords] = k;

  OrbitPartition out;
  for (std::size_t k = 0; k < p.delta_U.size(); ++k) {
    if (done[k]) continue;
    std::vector<std::size_t> members{k};
    done[k] = true;
    for (std::size_t m = 0; m < members.size(); ++m)
      for (int a : p.levi_simples) {
        Root b = reflect_simple(p.delta_U[members[m]], a - 1, rs);
        std::size_t j = where.at(b.coords);
        if (!done[j]) {
          done[j] = true;
          members.push_back(j);
        }
      }
    std::sort(members.begin(), members.end());
    Orbit o;
    for (auto m : members) o.roots.push_back(p.delta_U[m]);
    for (std::size_t c = 0; c < p.levi_components.size(); ++c)
      for (const auto& r : o.roots)
        for (int a : p.levi_components[c].nodes)
          if (rs.pair_simple(r, a - 1) != 0) o.touches.insert(c);
    out.orbits.push_back(std::move(o));
  }
  return out;
}

std::map<int, std::vector<Root>> unipotent_grading(const ParabolicData& p) {
  if (!p.is_maximal()) throw NotMaximal();
  int node = p.sigma_L_complement.front() - 1;
  std::map<int, std::vector<Root>> levels;
  for (const auto& a : p.delta_U) levels[p.rs.coroot(a)[node]].push_back(a);
  return levels;
}

NodeSet levi_from_partition(const std::vector<int>& parts) {
  int n = 0;
  NodeSet cut;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw UsageError("partition parts must be positive");
    n += parts[i];
    if (i + 1 < parts.size()) cut.insert(n);
  }
  NodeSet levi;
  for (int a = 1; a < n; ++a)
    if (!cut.count(a)) levi.insert(a);
  return levi;
}

}  // namespace eisen
