#include "eisen/roots.hpp"
#include "eisen/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace eisen {

// --- Cartan types

CartanType CartanType::parse(std::string_view name) {
  if (name.size() < 2) throw UnsupportedCartanType("bad Cartan type '" + std::string(name) + "'");
  CartanType t;
  switch (name[0]) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'C': t.family = Family::C; break;
    case 'D': t.family = Family::D; break;
    case 'E': t.family = Family::E; break;
    case 'F': t.family = Family::F; break;
    case 'G': t.family = Family::G; break;
    default: throw UnsupportedCartanType("bad Cartan family in '" + std::string(name) + "'");
  }
  int r = 0;
  for (char ch : name.substr(1)) {
    if (ch < '0' || ch > '9' || r > 100) throw UnsupportedCartanType("bad rank in '" + std::string(name) + "'");
    r = r * 10 + (ch - '0');
  }
  t.rank = r;
  cartan_matrix(t);  // validates
  return t;
}

std::string CartanType::name() const {
  static const char* letters = "ABCDEFG";
  return letters[static_cast<int>(family)] + std::to_string(rank);
}

IntMatrix cartan_matrix(CartanType t) {
  const int n = t.rank;
  auto reject = [&] { return UnsupportedCartanType("unsupported Cartan type " + t.name()); };
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = n >= 1 && n <= 20; break;
    case Family::B:
    case Family::C: ok = n >= 2 && n <= 20; break;
    case Family::D: ok = n >= 3 && n <= 20; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok) throw reject();

  IntMatrix c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };  // 1-based Bourbaki labels below
  auto L = [&](int i, int j) { link(i - 1, j - 1); };

  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) L(i, i + 1);
      break;
    case Family::B:  // alpha_n short
      for (int i = 1; i < n; ++i) L(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case Family::C:  // alpha_n long
      for (int i = 1; i < n; ++i) L(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) L(i, i + 1);
      L(n - 2, n);
      break;
    case Family::E:
      L(1, 3);
      L(2, 4);
      for (int i = 3; i < n; ++i) L(i, i + 1);
      break;
    case Family::F:
      L(1, 2);
      L(2, 3);
      L(3, 4);
      c[1][2] = -2;  // alpha_1, alpha_2 long
      break;
    case Family::G:  // alpha_1 short
      c[0][1] = -1;
      c[1][0] = -3;
      break;
  }
  return c;
}

CartanType identify_cartan_type(const IntMatrix& c) {
  const int n = static_cast<int>(c.size());
  auto fail = [] { return UnsupportedCartanType("Dynkin diagram not recognised"); };
  if (n == 1) return {Family::A, 1};
  std::vector<std::vector<int>> adj(n);
  int double_i = -1, double_j = -1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || c[i][j] == 0) continue;
      adj[i].push_back(j);
      int m = c[i][j] * c[j][i];
      if (m == 3) return {Family::G, 2};
      if (m == 2 && c[i][j] == -2) double_i = i, double_j = j;  // alpha_j short
    }
  int edges = 0;
  for (auto& a : adj) edges += static_cast<int>(a.size());
  if (edges / 2 != n - 1) throw fail();  // not a tree (or disconnected)

  if (double_i >= 0) {
    if (n == 2) return {Family::B, 2};
    bool i_end = adj[double_i].size() == 1, j_end = adj[double_j].size() == 1;
    if (!i_end && !j_end) {
      if (n == 4) return {Family::F, 4};
      throw fail();
    }
    // B: the end node is short; C: the end node is long
    return {j_end ? Family::B : Family::C, n};
  }

  int branch = -1;
  for (int i = 0; i < n; ++i) {
    if (adj[i].size() > 3) throw fail();
    if (adj[i].size() == 3) {
      if (branch >= 0) throw fail();
      branch = i;
    }
  }
  if (branch < 0) return {Family::A, n};
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int prev = branch, cur = start, len = 1;
    while (adj[cur].size() == 2) {
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Family::E, n};
  throw fail();
}

std::uint64_t weyl_order(CartanType t) {
  auto fact = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f = f > UINT64_MAX / i ? UINT64_MAX : f * i;
    return f;
  };
  auto times = [](std::uint64_t a, std::uint64_t b) { return a > UINT64_MAX / b ? UINT64_MAX : a * b; };
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return times(std::uint64_t(1) << n, fact(n));
    case Family::D: return times(std::uint64_t(1) << (n - 1), fact(n));
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

std::size_t positive_root_count(CartanType t) {
  const std::size_t n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

// --- roots

int Root::height() const {
  int h = 0;
  for (int x : coords) h += x;
  return h;
}

bool Root::positive() const {
  return std::any_of(coords.begin(), coords.end(), [](int x) { return x > 0; });
}

Root Root::operator-() const {
  Root r = *this;
  for (int& x : r.coords) x = -x;
  return r;
}

Root operator+(const Root& a, const Root& b) {
  Root r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Root operator*(int k, const Root& a) {
  Root r = a;
  for (int& x : r.coords) x *= k;
  return r;
}

namespace {

RationalMatrix invert(RationalMatrix a) {
  const std::size_t n = a.size();
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw UsageError("singular Cartan matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

RootSystem RootSystem::build(CartanType t) {
  RootSystem rs;
  rs.type_ = t;
  rs.cartan_ = cartan_matrix(t);
  rs.finish();
  return rs;
}

RootSystem RootSystem::from_cartan(const IntMatrix& c) {
  RootSystem rs;
  rs.type_ = identify_cartan_type(c);
  rs.cartan_ = c;
  rs.finish();
  return rs;
}

void RootSystem::finish() {
  const int n = rank();

  // symmetrizer d_i = (alpha_i, alpha_i)/2, from C[i][j] d_j = C[j][i] d_i
  d_.assign(n, Rational(0));
  d_[0] = 1;
  std::deque<int> todo{0};
  while (!todo.empty()) {
    int i = todo.front();
    todo.pop_front();
    for (int j = 0; j < n; ++j) {
      if (j == i || cartan_[i][j] == 0 || d_[j] != 0) continue;
      d_[j] = Rational(cartan_[j][i]) * d_[i] / Rational(cartan_[i][j]);
      todo.push_back(j);
    }
  }
  Rational top = *std::max_element(d_.begin(), d_.end());
  for (auto& x : d_) x /= top;

  // root strings: beta + alpha_i is a root iff q = p - <beta, alpha_i^vee> > 0
  std::set<std::vector<int>> known;
  std::vector<Root> level;
  for (int i = 0; i < n; ++i) {
    Root r = simple_root(i);
    known.insert(r.coords);
    level.push_back(r);
  }
  positive_.clear();
  while (!level.empty()) {
    positive_.insert(positive_.end(), level.begin(), level.end());
    std::set<std::vector<int>> next;
    for (const Root& beta : level) {
      for (int i = 0; i < n; ++i) {
        if (beta == simple_root(i)) continue;
        int p = 0;
        for (Root down = beta;;) {
          down.coords[i] -= 1;
          if (!known.count(down.coords)) break;
          ++p;
        }
        int q = p - pair_simple(beta, i);
        if (q > 0) {
          Root up = beta;
          up.coords[i] += 1;
          if (!known.count(up.coords)) next.insert(up.coords);
        }
      }
    }
    level.clear();
    for (const auto& c : next) {
      known.insert(c);
      level.push_back(Root{c});
    }
  }
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords > b.coords;
  });

  index_.clear();
  coroots_.clear();
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    index_[positive_[k].coords] = k;
    coroots_.push_back(coroot(positive_[k]));
  }

  RationalMatrix ct(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ct[i][j] = cartan_[j][i];
  inv_cartan_t_ = invert(ct);
  rho_.coords.assign(n, Rational(1));
}

std::vector<int> RootSystem::coroot(const Root& a) const {
  const int n = rank();
  Rational half_norm = 0;  // (a,a)/2
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) half_norm += Rational(a.coords[i] * a.coords[j] * cartan_[i][j]) * d_[j];
  half_norm /= 2;
  if (half_norm == 0) throw UsageError("zero vector has no coroot");
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) {
    Rational x = Rational(a.coords[i]) * d_[i] / half_norm;
    if (x.denominator() != 1) throw UsageError("not a root");
    c[i] = static_cast<int>(x.numerator());
  }
  return c;
}

std::optional<std::size_t> RootSystem::index_of(const Root& a) const {
  auto it = index_.find(a.coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const Root& a) const { return index_of(a) || index_of(-a); }

Root RootSystem::simple_root(int i) const {
  Root r{std::vector<int>(rank(), 0)};
  r.coords[i] = 1;
  return r;
}

int RootSystem::pair_simple(const Root& beta, int i) const {
  int s = 0;
  for (int k = 0; k < rank(); ++k) s += beta.coords[k] * cartan_[k][i];
  return s;
}

Weight RootSystem::to_weight(const Root& r) const {
  Weight w;
  for (int j = 0; j < rank(); ++j) w.coords.emplace_back(pair_simple(r, j));
  return w;
}

std::vector<Rational> RootSystem::to_root_coords(const Weight& w) const {
  const int n = rank();
  std::vector<Rational> r(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += inv_cartan_t_[i][j] * w.coords[j];
  return r;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const {
  auto rb = to_root_coords(b);
  Rational s = 0;
  for (int j = 0; j < rank(); ++j) s += a.coords[j] * d_[j] * rb[j];
  return s;
}

// --- pairings and reflections

LinearForm pair(const SymbolicWeight& lam, const Root& alpha, const RootSystem& rs) {
  if (static_cast<int>(lam.size()) != rs.rank()) throw DimensionMismatch("weight has wrong rank");
  auto c = rs.coroot(alpha);
  LinearForm out;
  for (int i = 0; i < rs.rank(); ++i)
    if (c[i] != 0) out += lam[i] * Rational(c[i]);
  return out;
}

Rational pair(const Weight& lam, const Root& alpha, const RootSystem& rs) {
  auto c = rs.coroot(alpha);
  Rational out = 0;
  for (int i = 0; i < rs.rank(); ++i) out += lam.coords[i] * Rational(c[i]);
  return out;
}

std::complex<double> pair(const NumericWeight& lam, const Root& alpha, const RootSystem& rs) {
  auto c = rs.coroot(alpha);
  std::complex<double> out = 0;
  for (int i = 0; i < rs.rank(); ++i) out += lam[i] * double(c[i]);
  return out;
}

Weight fundamental_weight(const RootSystem& rs, int i) {
  Weight w{std::vector<Rational>(rs.rank(), Rational(0))};
  w.coords[i] = 1;
  return w;
}

Root reflect(const Root& alpha, const Root& beta, const RootSystem& rs) {
  auto c = rs.coroot(beta);
  int k = 0;
  for (int i = 0; i < rs.rank(); ++i) k += c[i] * rs.pair_simple(alpha, i);
  Root out = alpha;
  for (int i = 0; i < rs.rank(); ++i) out.coords[i] -= k * beta.coords[i];
  return out;
}

Root reflect_simple(const Root& alpha, int i, const RootSystem& rs) {
  Root out = alpha;
  out.coords[i] -= rs.pair_simple(alpha, i);
  return out;
}

namespace {

template <class V, class Step>
V apply_word(const WeylElement& w, V v, Step step) {
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) step(v, *it);
  return v;
}

// (s_i mu)_j = mu_j - mu_i C[i][j] in the fundamental-weight basis
template <class V>
void reflect_weight(V& v, int i, const IntMatrix& c) {
  using T = typename V::value_type;
  T mi = v[i];
  for (std::size_t j = 0; j < v.size(); ++j)
    if (c[i][j] != 0) v[j] -= mi * T(c[i][j]);
}

}  // namespace

Root apply(const WeylElement& w, const Root& r, const RootSystem& rs) {
  return apply_word(w, r, [&](Root& v, int i) { v = reflect_simple(v, i, rs); });
}

Weight apply(const WeylElement& w, const Weight& v, const RootSystem& rs) {
  return apply_word(w, v, [&](Weight& x, int i) {
    Rational mi = x.coords[i];
    for (int j = 0; j < rs.rank(); ++j) x.coords[j] -= mi * Rational(rs.cartan()[i][j]);
  });
}

SymbolicWeight apply(const WeylElement& w, const SymbolicWeight& v, const RootSystem& rs) {
  return apply_word(w, v, [&](SymbolicWeight& x, int i) {
    LinearForm mi = x[i];
    for (int j = 0; j < rs.rank(); ++j)
      if (rs.cartan()[i][j] != 0) x[j] -= mi * Rational(rs.cartan()[i][j]);
  });
}

NumericWeight apply(const WeylElement& w, const NumericWeight& v, const RootSystem& rs) {
  return apply_word(w, v, [&](NumericWeight& x, int i) { reflect_weight(x, i, rs.cartan()); });
}

std::vector<std::pair<std::size_t, int>> root_permutation(const WeylElement& w, const RootSystem& rs) {
  std::vector<std::pair<std::size_t, int>> out;
  for (const auto& a : rs.positive_roots()) {
    Root b = apply(w, a, rs);
    int sign = b.positive() ? 1 : -1;
    auto k = rs.index_of(sign > 0 ? b : -b);
    if (!k) throw Error("Weyl element does not permute the roots");
    out.emplace_back(*k, sign);
  }
  return out;
}

// --- Weyl group

std::optional<std::size_t> WeylGroup::find(const std::vector<int>& rho_image) const {
  auto it = by_rho_.find(rho_image);
  if (it == by_rho_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b, const RootSystem& rs) const {
  WeylElement ab{elements_[a].word};
  ab.word.insert(ab.word.end(), elements_[b].word.begin(), elements_[b].word.end());
  std::vector<int> rho(rs.rank(), 1);
  auto img = apply_word(ab, rho, [&](std::vector<int>& x, int i) { reflect_weight(x, i, rs.cartan()); });
  return *find(img);
}

WeylGroup enumerate_weyl(const RootSystem& rs, std::uint64_t cap) {
  std::uint64_t order = weyl_order(rs.type());
  if (order > cap) throw CapExceeded(order);
  WeylGroup g;
  const int n = rs.rank();
  std::vector<int> rho(n, 1);
  std::vector<std::vector<int>> images{rho};
  g.elements_.push_back(WeylElement{});
  g.by_rho_[rho] = 0;
  // breadth first, so every stored word is reduced
  for (std::size_t k = 0; k < g.elements_.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> img = images[k];
      reflect_weight(img, i, rs.cartan());
      if (g.by_rho_.count(img)) continue;
      WeylElement w;
      w.word.reserve(g.elements_[k].word.size() + 1);
      w.word.push_back(i);
      w.word.insert(w.word.end(), g.elements_[k].word.begin(), g.elements_[k].word.end());
      g.by_rho_[img] = g.elements_.size();
      g.elements_.push_back(std::move(w));
      images.push_back(std::move(img));
      if (g.elements_.size() > cap) throw CapExceeded(order);
    }
  }
  std::vector<int> minus_rho(n, -1);
  g.longest_ = g.by_rho_.at(minus_rho);
  return g;
}

std::pair<HighPrecision, HighPrecision> weyl_denominator_check(const RootSystem& rs, const Rational& epsilon,
                                                               std::uint64_t cap) {
  auto hp = [](const Rational& q) { return HighPrecision(q.numerator()) / HighPrecision(q.denominator()); };
  WeylGroup g = enumerate_weyl(rs, cap);
  const Weight& rho = rs.rho();
  HighPrecision eps = hp(epsilon);
  HighPrecision lhs = 0;
  for (const auto& w : g.elements()) {
    HighPrecision term = exp(eps * hp(rs.inner(apply(w, rho, rs), rho)));
    lhs += w.sign() > 0 ? term : HighPrecision(-term);
  }
  HighPrecision rhs = 1;
  for (const auto& a : rs.positive_roots()) {
    HighPrecision x = eps * hp(rs.inner(rs.to_weight(a), rho)) / 2;
    rhs *= exp(x) - exp(-x);
  }
  return {lhs, rhs};
}

}  // namespace eisen
