#include "cli.hpp"

#include "eisen/errors.hpp"
#include "eisen/glcoords.hpp"
#include "eisen/hecke.hpp"
#include "eisen/template.hpp"
#include "eisen/whittaker.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <optional>
#include <regex>
#include <sstream>

namespace eisen::cli {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::complex<double> parse_complex(const std::string& raw) {
  static const std::regex number(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
  std::string s;
  for (char ch : raw)
    if (ch != ' ') s += ch;
  auto bad = [&] { return UsageError("cannot parse complex number '" + raw + "'"); };
  if (s.empty()) throw bad();
  auto real = [&](const std::string& x) {
    if (!std::regex_match(x, number)) throw bad();
    return std::stod(x);
  };
  if (s.back() != 'i') return real(s);
  s.pop_back();
  // split before the last sign that is not part of an exponent
  std::size_t cut = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      cut = k;
      break;
    }
  std::string re = cut == std::string::npos ? "" : s.substr(0, cut);
  std::string im = cut == std::string::npos ? s : s.substr(cut);
  double b = im.empty() || im == "+" ? 1 : im == "-" ? -1 : real(im);
  return {re.empty() ? 0 : real(re), b};
}

std::string format_complex(std::complex<double> z) {
  char buf[64];
  double re = z.real(), im = z.imag();
  if (std::abs(im) <= 1e-15 * std::max(1.0, std::abs(re))) {
    std::snprintf(buf, sizeof buf, "%.15g", re == 0 ? 0.0 : re);
  } else {
    std::snprintf(buf, sizeof buf, "%.15g%+.15gi", re, im);
  }
  return buf;
}

}  // namespace eisen::cli

using namespace eisen;
using namespace eisen::cli;
using nlohmann::ordered_json;

namespace {

struct Options {
  std::string type, levi, levi_nodes, mode = "grouped", normalization = "hecke", format = "text", coords = "auto";
  std::string symbols, nu, y, cochar, alpha, s, lambda, suite = "paper", method = "closed", function = "zeta";
  int gln = 0;
  std::int64_t p = 0, m = 0;
  std::uint64_t cap = default_weyl_cap;
  bool levi_given = false, pairings = false, expand = false;
};

Format parse_format(const std::string& f) {
  if (f == "text") return Format::text;
  if (f == "latex") return Format::latex;
  if (f == "json") return Format::json;
  throw UsageError("unknown format '" + f + "'");
}

CartanType group_type(const Options& o) {
  if (!o.type.empty() && o.gln) throw UsageError("give either --type or --gln, not both");
  if (o.gln) {
    if (o.gln < 2) throw UsageError("--gln needs n >= 2");
    return {Family::A, o.gln - 1};
  }
  if (o.type.empty()) throw UsageError("--type or --gln is required");
  return CartanType::parse(o.type);
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& x : split(s)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(x, &used));
      if (used != x.size()) throw std::invalid_argument(x);
    } catch (const std::logic_error&) {
      throw UsageError("expected a list of integers, got '" + s + "'");
    }
  }
  return out;
}

Rational parse_rational(const std::string& s) {
  static const std::regex q(R"(([+-]?\d+)(/(\d+))?)");
  std::smatch m;
  if (!std::regex_match(s, m, q)) throw UsageError("expected a rational number, got '" + s + "'");
  std::int64_t num = std::stoll(m[1]), den = m[3].matched ? std::stoll(m[3]) : 1;
  if (den == 0) throw UsageError("zero denominator in '" + s + "'");
  return Rational(num, den);
}

std::vector<std::complex<double>> complex_list(const std::string& s) {
  std::vector<std::complex<double>> out;
  for (const auto& x : split(s)) out.push_back(parse_complex(x));
  return out;
}

// Levi nodes from --levi (type A partition) or --levi-nodes; nothing given means Borel
NodeSet levi_nodes(const Options& o, CartanType t, std::optional<GLPartition>* parts = nullptr) {
  if (o.levi_given && !o.levi_nodes.empty()) throw UsageError("give either --levi or --levi-nodes, not both");
  if (o.levi_given) {
    if (t.family != Family::A) throw UsageError("--levi partitions are for type A; use --levi-nodes");
    GLPartition pp;
    if (o.levi.empty()) {
      pp.assign(t.rank + 1, 1);
    } else {
      pp = int_list(o.levi);
    }
    for (int k : pp)
      if (k < 1) throw UsageError("partition parts must be positive");
    if (std::accumulate(pp.begin(), pp.end(), 0) != t.rank + 1)
      throw UsageError("partition of " + std::to_string(t.rank + 1) + " expected");
    if (parts) *parts = pp;
    return levi_from_partition(pp);
  }
  NodeSet s;
  for (int a : int_list(o.levi_nodes)) {
    if (a < 1 || a > t.rank) throw UsageError("Levi node " + std::to_string(a) + " out of range");
    s.insert(a);
  }
  if (parts && t.family == Family::A) {
    GLPartition pp;
    int run = 1;
    for (int a = 1; a <= t.rank; ++a) {
      if (s.count(a)) {
        ++run;
      } else {
        pp.push_back(run);
        run = 1;
      }
    }
    pp.push_back(run);
    *parts = pp;
  }
  return s;
}

std::map<std::string, std::string> symbol_map(const std::string& s) {
  std::map<std::string, std::string> out;
  for (const auto& kv : split(s)) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == kv.size())
      throw UsageError("--symbols expects old=new pairs, got '" + kv + "'");
    out[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return out;
}

void print_value(const Options& o, const ComplexValue& v, const char* method) {
  if (o.format == "json") {
    ordered_json j{{"re", v.value.real()}, {"im", v.value.imag()}, {"abs_err", v.abs_err}};
    if (method) j["method"] = method;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << format_complex(v.value) << "\n";
  }
}

const char* method_name(WhittakerMethod m) {
  switch (m) {
    case WhittakerMethod::casselman_shalika: return "casselman_shalika";
    case WhittakerMethod::bessel_closed_form: return "bessel_closed_form";
    case WhittakerMethod::quadrature: return "quadrature";
  }
  return "";
}

int first_coeff(const Options& o) {
  auto t = group_type(o);
  auto fmt = parse_format(o.format);
  std::optional<GLPartition> parts;
  auto nodes = levi_nodes(o, t, &parts);
  bool borel = nodes.empty();

  std::string coords = o.coords;
  if (coords == "auto") coords = t.family == Family::A && borel ? "alpha" : "root";
  SatakeAssignment a;
  if (coords == "alpha") {
    if (t.family != Family::A || !borel) throw UsageError("alpha coordinates need a type A Borel");
    a = alpha_assignment(t.rank + 1);
  } else if (coords == "classical") {
    if (!parts) throw UsageError("classical coordinates need type A");
    a = classical_assignment(*parts);
  } else if (coords == "root") {
    a = root_assignment(build_parabolic(RootSystem::build(t), nodes));
  } else {
    throw UsageError("unknown coordinates '" + coords + "'");
  }
  if (!o.symbols.empty()) a = rename_symbols(a, symbol_map(o.symbols));

  if (o.pairings) {
    for (const auto& [beta, x] : unipotent_pairings(a)) {
      std::string r;
      for (int c : beta.coords) r += std::to_string(c);
      std::cout << r << " " << render(x, fmt == Format::json ? Format::text : fmt) << "\n";
    }
    return 0;
  }

  CoeffMode mode;
  if (o.mode == "grouped") {
    mode = CoeffMode::grouped;
  } else if (o.mode == "flat") {
    mode = CoeffMode::flat;
  } else {
    throw UsageError("unknown mode '" + o.mode + "'");
  }
  Normalization norm;
  if (o.normalization == "hecke") {
    norm = Normalization::hecke;
  } else if (o.normalization == "petersson") {
    norm = Normalization::petersson;
  } else {
    throw UsageError("unknown normalization '" + o.normalization + "'");
  }
  auto f = first_coefficient(a, mode, norm);
  if (fmt == Format::json) {
    auto j = ordered_json::parse(render(f, Format::json));
    ordered_json meta{{"coords", coords}, {"mode", o.mode}};
    if (mode == CoeffMode::grouped) meta["grouping"] = "W_L-orbit heuristic";
    if (!a.relations.empty()) {
      ordered_json rel = ordered_json::array();
      for (const auto& r : a.relations) rel.push_back(render(r, Format::text) + "=0");
      meta["relations"] = rel;
    }
    j["meta"] = meta;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << render(f, fmt) << "\n";
  }
  return 0;
}

int constant_term_cmd(const Options& o) {
  auto t = group_type(o);
  auto fmt = parse_format(o.format);
  auto rs = RootSystem::build(t);
  SymbolicWeight lam;
  if (o.lambda.empty()) {
    for (int i = 1; i <= t.rank; ++i) lam.push_back(LinearForm::of(Symbol::s("lambda" + std::to_string(i))));
  } else {
    for (const auto& x : split(o.lambda)) lam.push_back(LinearForm(parse_rational(x)));
  }
  auto ct = constant_term(rs, lam, o.cap);
  ordered_json all = ordered_json::array();
  for (const auto& term : ct.terms) {
    auto coef = o.expand ? expand_c(term.coefficient) : term.coefficient;
    std::string w;
    for (int i : term.w.word) w += "s" + std::to_string(i + 1);
    if (w.empty()) w = "e";
    std::vector<std::string> expo;
    for (const auto& x : term.exponent) expo.push_back(render(x, fmt == Format::latex ? Format::latex : Format::text));
    if (fmt == Format::json) {
      ordered_json word = ordered_json::array();
      for (int i : term.w.word) word.push_back(i + 1);
      all.push_back({{"w", word}, {"coefficient", ordered_json::parse(render(coef, Format::json))}, {"exponent", expo}});
      continue;
    }
    std::string e;
    for (const auto& x : expo) e += (e.empty() ? "" : ", ") + x;
    std::cout << w << ": " << render(coef, fmt) << " ; w(lambda) = (" << e << ")\n";
  }
  if (fmt == Format::json) std::cout << all.dump(2) << "\n";
  return 0;
}

int params_cmd(const Options& o) {
  if (!o.gln && o.type.empty()) throw UsageError("--gln is required");
  auto t = group_type(o);
  if (t.family != Family::A) throw UsageError("params is for GL(n)");
  const int n = t.rank + 1;
  std::vector<LinearForm> s;
  if (o.s.empty()) {
    for (int i = 1; i < n; ++i) s.push_back(LinearForm::of(Symbol::s("s" + std::to_string(i))));
  } else {
    for (const auto& x : split(o.s)) s.push_back(LinearForm(parse_rational(x)));
  }
  auto a = alpha_from_s(n, s);
  auto fmt = parse_format(o.format);
  if (fmt == Format::json) {
    ordered_json j = ordered_json::array();
    for (const auto& x : a.alpha) j.push_back(render(x, Format::text));
    std::cout << ordered_json{{"alpha", j}}.dump() << "\n";
    return 0;
  }
  for (int i = 0; i < n; ++i) std::cout << "alpha" << i + 1 << " = " << render(a.alpha[i], fmt) << "\n";
  return 0;
}

int hecke_cmd(const Options& o) {
  auto t = group_type(o);
  if (t.family != Family::A) throw UsageError("Hecke eigenvalues are for GL(n)");
  if (o.m < 1) throw UsageError("--m must be a positive integer");
  auto alpha = complex_list(o.alpha);
  auto v = borel_eigenvalue(t.rank + 1, alpha, o.m);
  print_value(o, {v, 0}, nullptr);
  return 0;
}

int whittaker_p_cmd(const Options& o) {
  auto t = group_type(o);
  auto rs = RootSystem::build(t);
  if (o.p < 2) throw UsageError("--p must be a prime");
  if (factorize(o.p).size() != 1 || factorize(o.p)[0].second != 1) throw UsageError("--p must be a prime");
  NumericWeight lam;
  if (!o.nu.empty() && !o.lambda.empty()) throw UsageError("give either --nu or --lambda");
  if (!o.nu.empty()) {
    if (t.rank != 1) throw UsageError("--nu is for A1; use --lambda");
    lam = {2.0 * parse_complex(o.nu)};  // lambda = nu alpha
  } else {
    lam = complex_list(o.lambda);
  }
  std::vector<int> k = o.cochar.empty() ? std::vector<int>(t.rank, 0) : int_list(o.cochar);
  auto w = whittaker_padic(o.p, lam, TorusPoint::cocharacter(k), rs, o.cap);
  print_value(o, w.value, method_name(w.method));
  return 0;
}

int whittaker_sl2_cmd(const Options& o) {
  if (o.nu.empty() || o.y.empty()) throw UsageError("--nu and --y are required");
  auto nu = parse_complex(o.nu);
  auto y = parse_complex(o.y);
  if (y.imag() != 0) throw UsageError("--y must be real");
  WhittakerValue w;
  if (o.method == "closed") {
    w = whittaker_sl2_arch(nu, y.real());
  } else if (o.method == "quadrature") {
    // Jacquet integral scaled by Gamma_R(2 nu + 1), comparable with the closed form
    w = jacquet_sl2_quadrature(nu, y.real());
    auto g = gamma_R(2.0 * nu + 1.0);
    w.value = {w.value.value * g.value, w.value.abs_err * std::abs(g.value)};
  } else {
    throw UsageError("unknown method '" + o.method + "'");
  }
  print_value(o, w.value, method_name(w.method));
  return 0;
}

int zeta_cmd(const Options& o) {
  if (o.s.empty()) throw UsageError("--s is required");
  auto s = parse_complex(o.s);
  ComplexValue v;
  if (o.function == "zeta") {
    v = zeta(s);
  } else if (o.function == "zeta-star") {
    v = zeta_star(s);
  } else if (o.function == "gamma") {
    v = eisen::gamma(s);
  } else if (o.function == "gamma-r") {
    v = gamma_R(s);
  } else if (o.function == "c") {
    v = c_factor(s);
  } else if (o.function == "local") {
    v = local_zeta({o.p}, s);
  } else if (o.function == "bessel-k") {
    if (o.nu.empty()) throw UsageError("--nu is required for bessel-k");
    if (s.imag() != 0) throw UsageError("bessel-k needs real --s");
    v = bessel_k(parse_complex(o.nu), s.real());
  } else {
    throw UsageError("unknown function '" + o.function + "'");
  }
  print_value(o, v, nullptr);
  return 0;
}

int verify_cmd(const Options& o) {
  int failures;
  if (o.suite == "paper") {
    failures = run_paper_suite(std::cout);
  } else if (o.suite == "properties") {
    failures = run_property_suite(std::cout);
  } else {
    throw UsageError("unknown suite '" + o.suite + "'");
  }
  return failures ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier coefficients, constant terms and Whittaker functions of Eisenstein series"};
  app.require_subcommand(1);
  Options o;

  auto group = [&](CLI::App* c) {
    c->add_option("--type", o.type, "Cartan type such as A3 or E8");
    c->add_option("--gln", o.gln, "GL(n), same as type A(n-1)");
  };
  auto levi = [&](CLI::App* c) {
    c->add_option("--levi", o.levi, "type A partition n1,n2,...; empty string for the Borel");
    c->add_option("--levi-nodes", o.levi_nodes, "simple roots in the Levi, e.g. 1,3");
  };
  auto format = [&](CLI::App* c) { c->add_option("--format", o.format, "text, latex or json"); };

  auto* fc = app.add_subcommand("first-coeff", "first Fourier coefficient of an Eisenstein series");
  group(fc);
  levi(fc);
  format(fc);
  fc->add_option("--mode", o.mode, "grouped or flat");
  fc->add_option("--normalization", o.normalization, "hecke or petersson");
  fc->add_option("--coords", o.coords, "auto, alpha, root or classical");
  fc->add_option("--symbols", o.symbols, "renames, e.g. s2=u,s3=w");
  fc->add_flag("--pairings", o.pairings, "print <mu, beta^vee> for each root of the unipotent radical");

  auto* ct = app.add_subcommand("constant-term", "Gindikin-Karpelevich constant term");
  group(ct);
  format(ct);
  ct->add_option("--lambda", o.lambda, "rational fundamental-weight coordinates; symbolic if omitted");
  ct->add_option("--cap", o.cap, "largest Weyl group to enumerate");
  ct->add_flag("--expand", o.expand, "write c(x) as zeta*(x)/zeta*(x+1)");

  auto* pa = app.add_subcommand("params", "Langlands parameters alpha(s) for GL(n)");
  group(pa);
  format(pa);
  pa->add_option("--s", o.s, "rational s_1,...,s_{n-1}; symbolic if omitted");

  auto* he = app.add_subcommand("hecke", "m-th Hecke eigenvalue of the minimal parabolic Eisenstein series");
  group(he);
  format(he);
  he->add_option("--alpha", o.alpha, "Langlands parameters, summing to zero")->required();
  he->add_option("--m", o.m, "positive integer")->required();

  auto* wp = app.add_subcommand("whittaker-p", "canonical p-adic Whittaker function (Casselman-Shalika)");
  group(wp);
  format(wp);
  wp->add_option("--p", o.p, "prime")->required();
  wp->add_option("--nu", o.nu, "A1 only: lambda = nu alpha");
  wp->add_option("--lambda", o.lambda, "complex fundamental-weight coordinates");
  wp->add_option("--cochar", o.cochar, "fundamental coweight exponents k1,...");
  wp->add_option("--cap", o.cap, "largest Weyl group to enumerate");

  auto* ws = app.add_subcommand("whittaker-sl2", "canonical SL(2,R) Whittaker function 2 sqrt(y) K_nu(2 pi y)");
  format(ws);
  ws->add_option("--nu", o.nu, "spectral parameter");
  ws->add_option("--y", o.y, "y > 0");
  ws->add_option("--method", o.method, "closed or quadrature");

  auto* ze = app.add_subcommand("zeta", "special functions");
  format(ze);
  ze->add_option("--s", o.s, "complex argument");
  ze->add_option("--function", o.function, "zeta, zeta-star, gamma, gamma-r, c, local or bessel-k");
  ze->add_option("--p", o.p, "prime for --function local; 0 is the archimedean place");
  ze->add_option("--nu", o.nu, "order for bessel-k");

  auto* ve = app.add_subcommand("verify", "check the engines against the published examples");
  ve->add_option("--suite", o.suite, "paper or properties");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  o.levi_given = fc->get_option("--levi")->count() > 0;
  try {
    if (*fc) return first_coeff(o);
    if (*ct) return constant_term_cmd(o);
    if (*pa) return params_cmd(o);
    if (*he) return hecke_cmd(o);
    if (*wp) return whittaker_p_cmd(o);
    if (*ws) return whittaker_sl2_cmd(o);
    if (*ze) return zeta_cmd(o);
    if (*ve) return verify_cmd(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
