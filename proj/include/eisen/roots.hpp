#pragma once

#include "eisen/symalg.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eisen {

enum class Family { A, B, C, D, E, F, G };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  // "A2", "E8", ...
  static CartanType parse(std::string_view name);
  std::string name() const;
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

using IntMatrix = std::vector<std::vector<int>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

IntMatrix cartan_matrix(CartanType t);
// identifies a connected Dynkin diagram from C[i][j] = <alpha_i, alpha_j^vee>
CartanType identify_cartan_type(const IntMatrix& c);
std::uint64_t weyl_order(CartanType t);
std::size_t positive_root_count(CartanType t);

struct Root {
  std::vector<int> coords;  // simple-root basis

  int height() const;
  bool positive() const;
  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator*(int k, const Root& a);
  friend auto operator<=>(const Root&, const Root&) = default;
};

struct Weight {
  std::vector<Rational> coords;  // fundamental-weight basis
  friend bool operator==(const Weight&, const Weight&) = default;
};

// weight whose fundamental-weight coordinates are linear forms
using SymbolicWeight = std::vector<LinearForm>;
using NumericWeight = std::vector<std::complex<double>>;

// word[0] is applied last: w = s_{word[0]} s_{word[1]} ...
struct WeylElement {
  std::vector<int> word;  // 0-based simple reflection indices
  int sign() const { return word.size() % 2 ? -1 : 1; }
  std::size_t length() const { return word.size(); }
};

class RootSystem {
 public:
  static RootSystem build(CartanType t);
  // for Levi subsystems: an arbitrary connected Cartan matrix
  static RootSystem from_cartan(const IntMatrix& c);

  CartanType type() const { return type_; }
  int rank() const { return static_cast<int>(cartan_.size()); }
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  // c_i(alpha^vee) for the k-th positive root
  const std::vector<int>& coroot_coeffs(std::size_t k) const { return coroots_[k]; }
  std::vector<int> coroot(const Root& a) const;  // any root, positive or negative
  const Weight& rho() const { return rho_; }
  // (alpha_i, alpha_i)/2, long roots normalised to 1
  const std::vector<Rational>& half_lengths() const { return d_; }

  std::optional<std::size_t> index_of(const Root& a) const;
  bool is_root(const Root& a) const;
  Root simple_root(int i) const;

  // <beta, alpha_i^vee>
  int pair_simple(const Root& beta, int i) const;
  Weight to_weight(const Root& r) const;
  std::vector<Rational> to_root_coords(const Weight& w) const;
  // (mu, nu) with long roots of length 2
  Rational inner(const Weight& a, const Weight& b) const;

 private:
  void finish();

  CartanType type_;
  IntMatrix cartan_;
  std::vector<Root> positive_;
  std::vector<std::vector<int>> coroots_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<Rational> d_;
  RationalMatrix inv_cartan_t_;  // (C^T)^{-1}
  Weight rho_;
};

inline RootSystem build_root_system(CartanType t) { return RootSystem::build(t); }

LinearForm pair(const SymbolicWeight& lam, const Root& alpha, const RootSystem& rs);
Rational pair(const Weight& lam, const Root& alpha, const RootSystem& rs);
std::complex<double> pair(const NumericWeight& lam, const Root& alpha, const RootSystem& rs);

Weight fundamental_weight(const RootSystem& rs, int i);

Root reflect(const Root& alpha, const Root& beta, const RootSystem& rs);
Root reflect_simple(const Root& alpha, int i, const RootSystem& rs);

Root apply(const WeylElement& w, const Root& r, const RootSystem& rs);
Weight apply(const WeylElement& w, const Weight& v, const RootSystem& rs);
SymbolicWeight apply(const WeylElement& w, const SymbolicWeight& v, const RootSystem& rs);
NumericWeight apply(const WeylElement& w, const NumericWeight& v, const RootSystem& rs);

// signed permutation of the positive roots: w(alpha_k) = sign * alpha_{index}
std::vector<std::pair<std::size_t, int>> root_permutation(const WeylElement& w, const RootSystem& rs);

class WeylGroup {
 public:
  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const WeylElement& longest() const { return elements_[longest_]; }
  std::size_t longest_index() const { return longest_; }
  // index of the element w with w(rho) = image
  std::optional<std::size_t> find(const std::vector<int>& rho_image) const;
  std::size_t multiply(std::size_t a, std::size_t b, const RootSystem& rs) const;

  friend WeylGroup enumerate_weyl(const RootSystem& rs, std::uint64_t cap);

 private:
  std::vector<WeylElement> elements_;
  std::map<std::vector<int>, std::size_t> by_rho_;
  std::size_t longest_ = 0;
};

constexpr std::uint64_t default_weyl_cap = 1000000;

// throws CapExceeded before doing any work if |W| > cap
WeylGroup enumerate_weyl(const RootSystem& rs, std::uint64_t cap = default_weyl_cap);

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

std::pair<HighPrecision, HighPrecision> weyl_denominator_check(const RootSystem& rs_L, const Rational& epsilon,
                                                               std::uint64_t cap = default_weyl_cap);

}  // namespace eisen
