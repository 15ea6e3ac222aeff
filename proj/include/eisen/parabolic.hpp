#pragma once

#include "eisen/roots.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace eisen {

// Node labels are 1-based (Bourbaki numbering).
using NodeSet = std::set<int>;

struct LeviComponent {
  std::vector<int> nodes;  // labels; for type A in chain order
  CartanType type;
};

struct ParabolicData {
  RootSystem rs;
  NodeSet levi_simples;                // S
  std::vector<int> sigma_L_complement;  // labels not in S
  std::vector<Root> delta_L;            // positive roots of L
  std::vector<Root> delta_U;
  Weight rho_L;
  std::vector<LeviComponent> levi_components;

  bool is_borel() const { return levi_simples.empty(); }
  bool is_maximal() const { return sigma_L_complement.size() == 1; }
  // Cartan matrix of one component, rows/cols in component node order
  IntMatrix component_cartan(std::size_t c) const;
};

ParabolicData build_parabolic(const RootSystem& rs, const NodeSet& levi_simples);

struct Orbit {
  std::vector<Root> roots;
  std::set<std::size_t> touches;  // indices into levi_components
};

struct OrbitPartition {
  std::vector<Orbit> orbits;
};

OrbitPartition wl_orbits(const ParabolicData& p);

// level j -> roots with coroot coefficient j at the removed node
std::map<int, std::vector<Root>> unipotent_grading(const ParabolicData& p);

// Levi for a GL(n) partition n1+...+nr: all nodes except the partial sums
NodeSet levi_from_partition(const std::vector<int>& parts);

}  // namespace eisen
