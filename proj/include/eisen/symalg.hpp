#pragma once

#include "eisen/rational.hpp"

#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eisen {

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

enum class SymbolKind { s_variable, spectral, classical_v };

// Identity is (name, imaginary); kind is descriptive only.
struct Symbol {
  std::string name;
  SymbolKind kind = SymbolKind::s_variable;
  bool imaginary = false;

  static Symbol s(std::string name) { return {std::move(name), SymbolKind::s_variable, false}; }
  static Symbol t(std::string name) { return {std::move(name), SymbolKind::spectral, true}; }
  static Symbol v(std::string name) { return {std::move(name), SymbolKind::classical_v, false}; }
};

// natural order: "alpha2" < "alpha10", then real before imaginary
std::strong_ordering compare_symbols(const Symbol& a, const Symbol& b);
inline bool operator==(const Symbol& a, const Symbol& b) {
  return a.name == b.name && a.imaginary == b.imaginary;
}
inline bool operator<(const Symbol& a, const Symbol& b) { return compare_symbols(a, b) < 0; }

SymbolKind infer_kind(std::string_view name, bool imaginary);

class LinearForm {
 public:
  using Terms = std::map<Symbol, Rational>;

  LinearForm() = default;
  LinearForm(Rational c) : constant_(c) {}  // NOLINT: implicit on purpose
  LinearForm(std::int64_t c) : constant_(c) {}  // NOLINT
  LinearForm(int c) : constant_(c) {}  // NOLINT
  static LinearForm of(const Symbol& sym, Rational coef = 1);

  const Rational& constant() const { return constant_; }
  const Terms& terms() const { return terms_; }
  Rational coef(const Symbol& sym) const;
  bool is_constant() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty() && constant_ == 0; }

  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  LinearForm& operator*=(const Rational& k);

  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const Rational& k) { return a *= k; }
  friend LinearForm operator*(const Rational& k, LinearForm a) { return a *= k; }
  friend LinearForm operator-(LinearForm a) { return a *= Rational(-1); }
  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.constant_ == b.constant_ && a.terms_ == b.terms_;
  }

  LinearForm substitute(const Symbol& sym, const LinearForm& value) const;
  LinearForm rename(const std::map<std::string, std::string>& names) const;
  // drops every term whose symbol satisfies pred
  LinearForm drop(const std::function<bool(const Symbol&)>& pred) const;
  LinearForm constant_part() const { return LinearForm(constant_); }

  // imaginary symbols contribute i*value
  std::complex<double> evaluate(const std::map<std::string, std::complex<double>>& values) const;

  std::size_t hash() const;

 private:
  Rational constant_{0};
  Terms terms_;
};

LinearForm lf_add(const LinearForm& a, const LinearForm& b);
LinearForm lf_sub(const LinearForm& a, const LinearForm& b);
LinearForm lf_scale(const LinearForm& a, const Rational& k);

// canonical order on arguments; see symalg.cpp for the rule
std::strong_ordering compare_arguments(const LinearForm& a, const LinearForm& b);

// Reduce a list of forms modulo relations r = 0, eliminating the highest symbol of each.
class RelationSystem {
 public:
  RelationSystem() = default;
  explicit RelationSystem(const std::vector<LinearForm>& relations);
  LinearForm reduce(const LinearForm& f) const;
  const std::vector<std::pair<Symbol, LinearForm>>& eliminations() const { return elim_; }

 private:
  std::vector<std::pair<Symbol, LinearForm>> elim_;
};

// place of a local factor: p == 0 means the archimedean place
struct Place {
  std::int64_t p = 0;
  bool infinite() const { return p == 0; }
  friend auto operator<=>(const Place&, const Place&) = default;
};

enum class FactorKind { L_star, c_factor, local_zeta, norm_symbol, zeta_star };

struct Factor {
  FactorKind kind = FactorKind::zeta_star;
  LinearForm argument;
  std::string rep;  // empty when absent
  std::optional<Place> place;
  Rational exponent{1};

  static Factor zeta_star(LinearForm arg, Rational e = -1) {
    return {FactorKind::zeta_star, std::move(arg), {}, std::nullopt, e};
  }
  static Factor L_star(LinearForm arg, std::string rep, Rational e = -1) {
    return {FactorKind::L_star, std::move(arg), std::move(rep), std::nullopt, e};
  }
  static Factor local_zeta(Place v, LinearForm arg, Rational e = 1) {
    return {FactorKind::local_zeta, std::move(arg), {}, v, e};
  }
  static Factor norm_symbol(std::string rep, Rational e = Rational(-1, 2)) {
    return {FactorKind::norm_symbol, LinearForm(1), std::move(rep), std::nullopt, e};
  }
  static Factor c(LinearForm arg, Rational e = 1) {
    return {FactorKind::c_factor, std::move(arg), {}, std::nullopt, e};
  }
};

// ignores the exponent
std::strong_ordering compare_factor_keys(const Factor& a, const Factor& b);
bool operator==(const Factor& a, const Factor& b);

enum class ScalarFlag { exact, up_to_nonzero_constant };

struct FormulaExpression {
  std::vector<Factor> factors;
  ScalarFlag scalar = ScalarFlag::exact;
  friend bool operator==(const FormulaExpression&, const FormulaExpression&) = default;
};

FormulaExpression canonicalize(FormulaExpression f);
FormulaExpression multiply(const FormulaExpression& a, const FormulaExpression& b);
FormulaExpression inverse(FormulaExpression f);

enum class Format { text, latex, json };

std::string render(const LinearForm& f, Format fmt);
std::string render(const FormulaExpression& f, Format fmt);
std::string render_symbol(const Symbol& s, Format fmt);
FormulaExpression parse_json(std::string_view json);

const char* kind_name(FactorKind k);

}  // namespace eisen

template <>
struct std::hash<eisen::LinearForm> {
  std::size_t operator()(const eisen::LinearForm& f) const { return f.hash(); }
};
