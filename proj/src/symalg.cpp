#include "eisen/symalg.hpp"
#include "eisen/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace eisen {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return UsageError("cannot parse rational '" + std::string(text) + "'"); };
  auto as_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty()) throw bad();
    return v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto den = as_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(as_int(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string digits(text.substr(0, dot));
    auto frac = text.substr(dot + 1);
    if (frac.size() > 15) throw bad();
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    bool neg = !digits.empty() && digits[0] == '-';
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    if (digits[0] == '+') digits.erase(0, 1);
    std::int64_t whole = as_int(digits);
    std::int64_t f = frac.empty() ? 0 : as_int(frac);
    Rational r(std::abs(whole) * den + f, den);
    return neg ? -r : r;
  }
  if (!text.empty() && text[0] == '+') text.remove_prefix(1);
  return Rational(as_int(text));
}

namespace {

// "alpha12" -> ("alpha", 12); no trailing digits -> index -1
std::pair<std::string_view, long> split_index(std::string_view name) {
  std::size_t k = name.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(name[k - 1]))) --k;
  if (k == name.size() || name.size() - k > 9) return {name, -1};
  long idx = 0;
  std::from_chars(name.data() + k, name.data() + name.size(), idx);
  return {name.substr(0, k), idx};
}

}  // namespace

std::strong_ordering compare_symbols(const Symbol& a, const Symbol& b) {
  auto [pa, ia] = split_index(a.name);
  auto [pb, ib] = split_index(b.name);
  if (auto c = pa.compare(pb); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (ia != ib) return ia <=> ib;
  if (auto c = a.name.compare(b.name); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.imaginary <=> b.imaginary;
}

SymbolKind infer_kind(std::string_view name, bool imaginary) {
  if (imaginary || (!name.empty() && name[0] == 't')) return SymbolKind::spectral;
  if (!name.empty() && name[0] == 'v') return SymbolKind::classical_v;
  return SymbolKind::s_variable;
}

// --- LinearForm

LinearForm LinearForm::of(const Symbol& sym, Rational coef) {
  LinearForm f;
  if (coef != 0) f.terms_[sym] = coef;
  return f;
}

Rational LinearForm::coef(const Symbol& sym) const {
  auto it = terms_.find(sym);
  return it == terms_.end() ? Rational(0) : it->second;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  constant_ += o.constant_;
  for (const auto& [s, c] : o.terms_) {
    auto [it, fresh] = terms_.try_emplace(s, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) { return *this += o * Rational(-1); }

LinearForm& LinearForm::operator*=(const Rational& k) {
  if (k == 0) {
    terms_.clear();
    constant_ = 0;
    return *this;
  }
  constant_ *= k;
  for (auto& [s, c] : terms_) c *= k;
  return *this;
}

LinearForm LinearForm::substitute(const Symbol& sym, const LinearForm& value) const {
  auto it = terms_.find(sym);
  if (it == terms_.end()) return *this;
  LinearForm out = *this;
  Rational c = it->second;
  out.terms_.erase(sym);
  out += value * c;
  return out;
}

LinearForm LinearForm::rename(const std::map<std::string, std::string>& names) const {
  LinearForm out(constant_);
  for (const auto& [s, c] : terms_) {
    Symbol t = s;
    if (auto it = names.find(s.name); it != names.end()) t.name = it->second;
    out += LinearForm::of(t, c);
  }
  return out;
}

LinearForm LinearForm::drop(const std::function<bool(const Symbol&)>& pred) const {
  LinearForm out(constant_);
  for (const auto& [s, c] : terms_)
    if (!pred(s)) out.terms_.emplace(s, c);
  return out;
}

std::complex<double> LinearForm::evaluate(const std::map<std::string, std::complex<double>>& values) const {
  std::complex<double> z = constant_.to_double();
  for (const auto& [s, c] : terms_) {
    auto it = values.find(s.name);
    if (it == values.end()) throw UsageError("no value for symbol " + s.name);
    std::complex<double> v = it->second;
    if (s.imaginary) v *= std::complex<double>(0, 1);
    z += c.to_double() * v;
  }
  return z;
}

std::size_t LinearForm::hash() const {
  auto mix = [](std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); };
  std::size_t h = mix(std::hash<std::int64_t>{}(constant_.numerator()), std::hash<std::int64_t>{}(constant_.denominator()));
  for (const auto& [s, c] : terms_) {
    h = mix(h, std::hash<std::string>{}(s.name));
    h = mix(h, s.imaginary);
    h = mix(h, std::hash<std::int64_t>{}(c.numerator()));
    h = mix(h, std::hash<std::int64_t>{}(c.denominator()));
  }
  return h;
}

LinearForm lf_add(const LinearForm& a, const LinearForm& b) { return a + b; }
LinearForm lf_sub(const LinearForm& a, const LinearForm& b) { return a - b; }
LinearForm lf_scale(const LinearForm& a, const Rational& k) { return a * k; }

// --- argument order
//
// Real terms first, then imaginary terms, then the constant. Within one part:
// fewer terms first, then smaller top symbol, then larger bottom symbol, then
// coefficients read upward. For the GL(3) Borel this gives 12, 23, 13.

namespace {

std::strong_ordering to_strong(int c) {
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::strong_ordering compare_rat(const Rational& a, const Rational& b) {
  return a < b ? std::strong_ordering::less : b < a ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::strong_ordering compare_part(const LinearForm::Terms& a, const LinearForm::Terms& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  if (a.empty()) return std::strong_ordering::equal;
  if (auto c = compare_symbols(a.rbegin()->first, b.rbegin()->first); c != 0) return c;
  if (auto c = compare_symbols(b.begin()->first, a.begin()->first); c != 0) return c;
  std::vector<Symbol> all;
  for (const auto& kv : a) all.push_back(kv.first);
  for (const auto& kv : b) all.push_back(kv.first);
  std::sort(all.begin(), all.end());
  for (const auto& s : all) {
    auto ia = a.find(s);
    auto ib = b.find(s);
    Rational ca = ia == a.end() ? Rational(0) : ia->second;
    Rational cb = ib == b.end() ? Rational(0) : ib->second;
    if (auto c = compare_rat(ca, cb); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void split_terms(const LinearForm& f, LinearForm::Terms& re, LinearForm::Terms& im) {
  for (const auto& [s, c] : f.terms()) (s.imaginary ? im : re).emplace(s, c);
}

}  // namespace

std::strong_ordering compare_arguments(const LinearForm& a, const LinearForm& b) {
  LinearForm::Terms ra, ia, rb, ib;
  split_terms(a, ra, ia);
  split_terms(b, rb, ib);
  if (auto c = compare_part(ra, rb); c != 0) return c;
  if (auto c = compare_part(ia, ib); c != 0) return c;
  return compare_rat(a.constant(), b.constant());
}

// --- relations

RelationSystem::RelationSystem(const std::vector<LinearForm>& relations) {
  for (const auto& r0 : relations) {
    LinearForm r = reduce(r0);
    if (r.is_zero()) continue;
    if (r.is_constant()) throw InconsistentRelations("relation reduces to " + to_string(r.constant()) + " = 0");
    auto top = r.terms().rbegin();
    Symbol h = top->first;
    Rational c = top->second;
    LinearForm rest = r;
    rest -= LinearForm::of(h, c);
    LinearForm value = rest * (Rational(-1) / c);
    for (auto& [s, v] : elim_) v = v.substitute(h, value);
    elim_.emplace_back(h, value);
  }
}

LinearForm RelationSystem::reduce(const LinearForm& f) const {
  LinearForm out = f;
  for (const auto& [s, v] : elim_) out = out.substitute(s, v);
  return out;
}

// --- factors

const char* kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::zeta_star: return "zeta_star";
    case FactorKind::L_star: return "L_star";
    case FactorKind::local_zeta: return "local_zeta";
    case FactorKind::norm_symbol: return "norm_symbol";
    case FactorKind::c_factor: return "c_factor";
  }
  return "?";
}

std::strong_ordering compare_factor_keys(const Factor& a, const Factor& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
  if (a.place != b.place) return a.place <=> b.place;
  if (auto c = a.rep.compare(b.rep); c != 0) return to_strong(c);
  return compare_arguments(a.argument, b.argument);
}

bool operator==(const Factor& a, const Factor& b) {
  return compare_factor_keys(a, b) == 0 && a.exponent == b.exponent;
}

FormulaExpression canonicalize(FormulaExpression f) {
  auto less = [](const Factor& a, const Factor& b) { return compare_factor_keys(a, b) < 0; };
  std::stable_sort(f.factors.begin(), f.factors.end(), less);
  std::vector<Factor> merged;
  for (auto& x : f.factors) {
    if (!merged.empty() && compare_factor_keys(merged.back(), x) == 0)
      merged.back().exponent += x.exponent;
    else
      merged.push_back(std::move(x));
    if (merged.back().exponent == 0) merged.pop_back();
  }
  f.factors = std::move(merged);
  return f;
}

FormulaExpression multiply(const FormulaExpression& a, const FormulaExpression& b) {
  FormulaExpression out = a;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  if (b.scalar == ScalarFlag::up_to_nonzero_constant) out.scalar = b.scalar;
  return canonicalize(std::move(out));
}

FormulaExpression inverse(FormulaExpression f) {
  for (auto& x : f.factors) x.exponent = -x.exponent;
  return f;
}

}  // namespace eisen
