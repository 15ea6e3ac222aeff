#include "eisen/errors.hpp"
#include "eisen/symalg.hpp"

#include <json.hpp>

#include <array>
#include <cctype>

namespace eisen {

namespace {

using ojson = nlohmann::ordered_json;

struct Greek {
  std::string_view ascii, text, latex;
};
constexpr std::array<Greek, 6> greek{{
    {"alpha", "α", "\\alpha"},
    {"beta", "β", "\\beta"},
    {"lambda", "λ", "\\lambda"},
    {"mu", "μ", "\\mu"},
    {"nu", "ν", "\\nu"},
    {"rho", "ρ", "\\rho"},
}};

std::string rat_latex(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  std::string s = q < 0 ? "-" : "";
  return s + "\\tfrac{" + std::to_string(std::abs(q.numerator())) + "}{" + std::to_string(q.denominator()) + "}";
}

std::string rat_text_coef(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return "(" + to_string(q) + ")";
}

void append_term(std::string& out, const Rational& c, const std::string& sym, Format fmt) {
  Rational a = c < 0 ? -c : c;
  if (c < 0)
    out += "-";
  else if (!out.empty())
    out += "+";
  if (a != 1) out += fmt == Format::latex ? rat_latex(a) : rat_text_coef(a);
  out += sym;
}

std::string rep_latex(const std::string& rep) {
  std::string out;
  for (std::size_t i = 0; i < rep.size();) {
    if (rep.compare(i, 3, "Ad ") == 0) {
      out += "\\mathrm{Ad}\\,";
      i += 3;
    } else if (rep.compare(i, 2, "π") == 0) {
      out += "\\pi";
      i += 2;
    } else if (rep.compare(i, 2, "φ") == 0) {
      out += "\\phi";
      i += 2;
    } else if (rep.compare(i, 2, "×") == 0) {
      out += "\\times ";
      i += 2;
    } else {
      out += rep[i++];
    }
  }
  return out;
}

std::string exponent_suffix(const Rational& e, Format fmt) {
  if (e == 1) return "";
  if (fmt == Format::latex) return "^{" + to_string(e) + "}";
  return "^" + to_string(e);
}

std::string factor_head(const Factor& f, Format fmt) {
  std::string arg = render(f.argument, fmt);
  bool tex = fmt == Format::latex;
  auto rep = [&] { return tex ? rep_latex(f.rep) : f.rep; };
  switch (f.kind) {
    case FactorKind::zeta_star:
      return (tex ? "\\zeta^*(" : "ζ*(") + arg + ")";
    case FactorKind::L_star:
    case FactorKind::norm_symbol:
      return (tex ? "L^*(" : "L*(") + arg + (f.rep.empty() ? "" : "," + rep()) + ")";
    case FactorKind::c_factor:
      return "c(" + arg + ")";
    case FactorKind::local_zeta: {
      std::string v;
      if (!f.place || f.place->infinite())
        v = tex ? "\\infty" : "∞";
      else
        v = std::to_string(f.place->p);
      return (tex ? "\\zeta_{" + v + "}(" : "ζ_" + v + "(") + arg + ")";
    }
  }
  return arg;
}

ojson rat_json(const Rational& q) { return ojson{{"num", q.numerator()}, {"den", q.denominator()}}; }

Rational rat_from(const ojson& j) {
  return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

ojson to_json(const FormulaExpression& f) {
  ojson out;
  out["scalar"] = f.scalar == ScalarFlag::exact ? "exact" : "up_to_nonzero_constant";
  ojson factors = ojson::array();
  for (const auto& x : f.factors) {
    ojson j;
    j["kind"] = kind_name(x.kind);
    if (!x.place)
      j["place"] = nullptr;
    else if (x.place->infinite())
      j["place"] = "infty";
    else
      j["place"] = x.place->p;
    j["rep"] = x.rep.empty() ? ojson(nullptr) : ojson(x.rep);
    j["exponent"] = rat_json(x.exponent);
    ojson terms = ojson::array();
    for (const auto& [s, c] : x.argument.terms())
      terms.push_back(ojson{{"sym", s.name}, {"imag", s.imaginary}, {"coef", rat_json(c)}});
    j["argument"] = ojson{{"const", rat_json(x.argument.constant())}, {"terms", terms}};
    factors.push_back(std::move(j));
  }
  out["factors"] = std::move(factors);
  return out;
}

}  // namespace

std::string render_symbol(const Symbol& s, Format fmt) {
  std::string_view name = s.name;
  std::string head;
  for (const auto& g : greek) {
    if (name.substr(0, g.ascii.size()) == g.ascii) {
      head = fmt == Format::latex ? g.latex : g.text;
      name.remove_prefix(g.ascii.size());
      break;
    }
  }
  std::size_t k = name.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(name[k - 1]))) --k;
  head += name.substr(0, k);
  std::string digits(name.substr(k));
  std::string out = s.imaginary ? "i" : "";
  out += head;
  if (!digits.empty()) {
    if (fmt == Format::latex)
      out += digits.size() == 1 ? "_" + digits : "_{" + digits + "}";
    else
      out += digits;
  }
  return out;
}

std::string render(const LinearForm& f, Format fmt) {
  std::string out;
  const Rational& c = f.constant();
  if (fmt == Format::latex && c != 0) out = rat_latex(c);
  for (const auto& [s, k] : f.terms()) append_term(out, k, render_symbol(s, fmt), fmt);
  if (fmt != Format::latex && c != 0) {
    if (c > 0 && !out.empty()) out += "+";
    out += to_string(c);
  }
  return out.empty() ? "0" : out;
}

std::string render(const FormulaExpression& f, Format fmt) {
  if (fmt == Format::json) return to_json(f).dump(2);
  bool tex = fmt == Format::latex;
  std::string body;
  if (tex) {
    bool common = f.factors.size() > 1;
    for (const auto& x : f.factors) common = common && x.exponent == f.factors.front().exponent;
    if (common && f.factors.front().exponent != 1) {
      for (const auto& x : f.factors) body += factor_head(x, fmt);
      body = "\\left(" + body + "\\right)" + exponent_suffix(f.factors.front().exponent, fmt);
    } else {
      for (const auto& x : f.factors) body += factor_head(x, fmt) + exponent_suffix(x.exponent, fmt);
    }
  } else {
    for (const auto& x : f.factors) {
      if (!body.empty()) body += " · ";
      body += factor_head(x, fmt) + exponent_suffix(x.exponent, fmt);
    }
  }
  if (f.scalar == ScalarFlag::up_to_nonzero_constant) {
    if (tex) return body.empty() ? "c_0" : "c_0\\," + body;
    return body.empty() ? "c0" : "c0 · " + body;
  }
  return body.empty() ? "1" : body;
}

FormulaExpression parse_json(std::string_view text) {
  FormulaExpression f;
  try {
    auto j = ojson::parse(text);
    auto scalar = j.at("scalar").get<std::string>();
    if (scalar == "exact")
      f.scalar = ScalarFlag::exact;
    else if (scalar == "up_to_nonzero_constant")
      f.scalar = ScalarFlag::up_to_nonzero_constant;
    else
      throw UsageError("unknown scalar flag " + scalar);
    for (const auto& jf : j.at("factors")) {
      Factor x;
      auto kind = jf.at("kind").get<std::string>();
      bool known = false;
      for (auto k : {FactorKind::L_star, FactorKind::c_factor, FactorKind::local_zeta, FactorKind::norm_symbol,
                     FactorKind::zeta_star})
        if (kind == kind_name(k)) x.kind = k, known = true;
      if (!known) throw UsageError("unknown factor kind " + kind);
      const auto& place = jf.at("place");
      if (place.is_string())
        x.place = Place{0};
      else if (place.is_number_integer())
        x.place = Place{place.get<std::int64_t>()};
      if (!jf.at("rep").is_null()) x.rep = jf.at("rep").get<std::string>();
      x.exponent = rat_from(jf.at("exponent"));
      const auto& arg = jf.at("argument");
      x.argument = LinearForm(rat_from(arg.at("const")));
      for (const auto& t : arg.at("terms")) {
        auto name = t.at("sym").get<std::string>();
        bool imag = t.at("imag").get<bool>();
        x.argument += LinearForm::of(Symbol{name, infer_kind(name, imag), imag}, rat_from(t.at("coef")));
      }
      f.factors.push_back(std::move(x));
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed formula json: ") + e.what());
  }
  return f;
}

}  // namespace eisen
