#include "premon/families.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "premon/io.hpp"

namespace premon {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

template <class Err = QueryError>
std::int64_t to_int(const std::string& text) {
  const std::string t = trim(text);
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || p != t.data() + t.size()) throw Err("expected an integer, got '" + text + "'");
  return v;
}

// "{a,b,c}" or "(a,b,c)" -> items; braces optional.
std::vector<std::string> list_items(const std::string& text) {
  std::string t = trim(text);
  if (t.size() >= 2 && ((t.front() == '{' && t.back() == '}') || (t.front() == '(' && t.back() == ')')))
    t = t.substr(1, t.size() - 2);
  if (trim(t).empty()) return {};
  std::vector<std::string> out;
  for (auto& s : split(t, ',')) out.push_back(trim(s));
  return out;
}

std::string join_ints(const Element& x, const char* open, const char* close) {
  std::ostringstream os;
  os << open;
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
  os << close;
  return os.str();
}

// 0-containing subsets of [0, top], as sorted vectors.
std::vector<Element> zero_subsets(std::int64_t top) {
  std::vector<Element> out;
  const std::int64_t k = top;  // free members 1..top
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Element e{0};
    for (std::int64_t i = 0; i < k; ++i)
      if (mask >> i & 1U) e.push_back(i + 1);
    out.push_back(std::move(e));
  }
  return out;
}

// Subsets of x that keep x's first entry (the identity / zero).
std::vector<Element> anchored_subsets(const Element& x, std::int64_t anchor) {
  std::vector<std::int64_t> rest;
  for (auto v : x)
    if (v != anchor) rest.push_back(v);
  std::vector<Element> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()); ++mask) {
    Element e{anchor};
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (mask >> i & 1U) e.push_back(rest[i]);
    std::sort(e.begin(), e.end());
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------ finite carriers

FiniteMonoid make_zn(Index n) {
  if (n == 0) throw InputError("zn needs n >= 1");
  std::vector<Index> t(static_cast<std::size_t>(n) * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      t[static_cast<std::size_t>(i) * n + j] = static_cast<Index>((std::uint64_t{i} * j) % n);
  return FiniteMonoid::load(n, n == 1 ? 0 : 1, std::move(t), {true});
}

FiniteMonoid make_powerset(unsigned k) {
  if (k > 12) throw InputError("powerset base too large (k <= 12)");
  const Index n = Index{1} << k;
  std::vector<Index> t(static_cast<std::size_t>(n) * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) t[static_cast<std::size_t>(i) * n + j] = i | j;
  FiniteMonoid m = FiniteMonoid::load(n, 0, std::move(t), {true});
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i) {
    std::string s = "{";
    bool first = true;
    for (unsigned b = 0; b < k; ++b)
      if (i >> b & 1U) {
        s += (first ? "" : ",") + std::to_string(b);
        first = false;
      }
    labels.push_back(s + "}");
  }
  m.set_labels(std::move(labels));
  return m;
}

Premonoid make_powerset_premonoid(unsigned k) {
  FiniteMonoid m = make_powerset(k);
  const Index n = m.size();
  std::vector<Bitset> up(n, Bitset(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if ((i & j) == i) up[i].set(j);
  return Premonoid(std::move(m), PreorderRel::trusted(std::move(up), PreorderKind::rule));
}

// ------------------------------------------------------------ power monoid

PowerMonoid::PowerMonoid(FiniteMonoid base) : base_(std::move(base)) {
  if (!base_.complete()) throw InputError("power monoid base must have a full table");
  if (base_.size() > 12) throw InputError("power monoid base too large (at most 12 elements)");
}

Element PowerMonoid::identity() const { return {static_cast<std::int64_t>(base_.identity())}; }

Element PowerMonoid::op(const Element& a, const Element& b) const {
  std::set<std::int64_t> s;
  for (auto x : a)
    for (auto y : b) s.insert(base_.mul(static_cast<Index>(x), static_cast<Index>(y)));
  return {s.begin(), s.end()};
}

std::string PowerMonoid::format(const Element& x) const {
  std::string s = "{";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + base_.label(static_cast<Index>(x[i]));
  return s + "}";
}

Element PowerMonoid::parse(const std::string& text) const {
  std::set<std::int64_t> s;
  for (const auto& item : list_items(text)) {
    const Index i = base_.find(item);
    if (i == kAbsent) throw QueryError("unknown base element '" + item + "'");
    s.insert(i);
  }
  if (!s.count(base_.identity())) throw QueryError("power monoid elements must contain the identity");
  return {s.begin(), s.end()};
}

std::vector<Element> PowerMonoid::default_roots() const {
  Element all;
  for (Index i = 0; i < base_.size(); ++i) all.push_back(i);
  return anchored_subsets(all, base_.identity());
}

std::vector<Element> PowerMonoid::divisor_candidates(const Element& x) const {
  return anchored_subsets(x, base_.identity());
}

// X = U Y V forces U = U 1 1 and V = 1 1 V inside X, so U, Y, V all range over
// identity-containing subsets of X.
std::vector<Element> PowerMonoid::compute_divisors(const Element& x) const {
  const std::vector<Element> subs = divisor_candidates(x);
  std::vector<Element> out;
  for (const Element& y : subs) {
    bool ok = false;
    for (const Element& u : subs) {
      const Element uy = op(u, y);
      if (!std::includes(x.begin(), x.end(), uy.begin(), uy.end())) continue;
      for (const Element& v : subs)
        if (op(uy, v) == x) {
          ok = true;
          break;
        }
      if (ok) break;
    }
    if (ok) out.push_back(y);
  }
  return out;
}

// ------------------------------------------------------------ reduced power of N

ReducedPowerN::ReducedPowerN(std::int64_t cap) : cap_(cap) {
  if (cap < 1 || cap > 16) throw InputError("powerN cap must lie in [1, 16]");
}

Element ReducedPowerN::op(const Element& a, const Element& b) const {
  std::set<std::int64_t> s;
  for (auto x : a)
    for (auto y : b) s.insert(x + y);
  return {s.begin(), s.end()};
}

std::string ReducedPowerN::format(const Element& x) const { return join_ints(x, "{", "}"); }

Element ReducedPowerN::parse(const std::string& text) const {
  std::set<std::int64_t> s;
  for (const auto& item : list_items(text)) {
    const auto v = to_int(item);
    if (v < 0) throw QueryError("powerN elements are subsets of the naturals");
    s.insert(v);
  }
  if (!s.count(0)) throw QueryError("powerN elements must contain 0");
  if (*s.rbegin() > cap_) throw CapExceeded(cap_);
  return {s.begin(), s.end()};
}

std::vector<Element> ReducedPowerN::default_roots() const { return zero_subsets(cap_); }

std::vector<Element> ReducedPowerN::divisor_candidates(const Element& x) const { return anchored_subsets(x, 0); }

// Commutative: Y | X iff Y + Z = X for some Z, and the largest admissible Z is
// {z : z + Y within X}; Y divides X iff that one works.
std::vector<Element> ReducedPowerN::compute_divisors(const Element& x) const {
  const std::set<std::int64_t> xs(x.begin(), x.end());
  std::vector<Element> out;
  for (const Element& y : divisor_candidates(x)) {
    Element z;
    for (std::int64_t c = 0; c <= x.back(); ++c) {
      bool ok = true;
      for (auto v : y)
        if (!xs.count(c + v)) {
          ok = false;
          break;
        }
      if (ok) z.push_back(c);
    }
    if (op(y, z) == x) out.push_back(y);
  }
  return out;
}

// ------------------------------------------------------------ numerical monoids

NumericalMonoid::NumericalMonoid(std::vector<std::int64_t> gens, std::int64_t root_bound)
    : gens_(std::move(gens)), bound_(root_bound) {
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  if (gens_.empty() || gens_.front() < 1) throw InputError("numerical generators must be positive");
  table_.assign(static_cast<std::size_t>(bound_) + 1, false);
  table_[0] = true;
  for (std::int64_t x = 1; x <= bound_; ++x)
    for (auto g : gens_)
      if (g <= x && table_[x - g]) {
        table_[x] = true;
        break;
      }
}

bool NumericalMonoid::representable(std::int64_t x) const {
  if (x < 0) return false;
  if (x <= bound_) return table_[x];
  std::vector<bool> t(static_cast<std::size_t>(x) + 1, false);
  t[0] = true;
  for (std::int64_t k = 1; k <= x; ++k)
    for (auto g : gens_)
      if (g <= k && t[k - g]) {
        t[k] = true;
        break;
      }
  return t[x];
}

Element NumericalMonoid::parse(const std::string& text) const {
  const auto v = to_int(text);
  if (!representable(v)) throw QueryError(text + " is not in the numerical monoid");
  return {v};
}

std::vector<Element> NumericalMonoid::default_roots() const {
  std::vector<Element> out;
  for (std::int64_t x = 0; x <= bound_; ++x)
    if (table_[x]) out.push_back({x});
  return out;
}

std::vector<Element> NumericalMonoid::divisor_candidates(const Element& x) const {
  std::vector<Element> out;
  for (std::int64_t y = 0; y <= x[0]; ++y)
    if (representable(y)) out.push_back({y});
  return out;
}

std::vector<Element> NumericalMonoid::compute_divisors(const Element& x) const {
  std::vector<Element> out;
  for (std::int64_t y = 0; y <= x[0]; ++y)
    if (representable(y) && representable(x[0] - y)) out.push_back({y});
  return out;
}

// ------------------------------------------------------------ N^2 submonoid

namespace {

std::vector<std::vector<bool>> n2_grid(std::int64_t a_max, std::int64_t b_max) {
  std::vector<std::vector<bool>> g(a_max + 1, std::vector<bool>(b_max + 1, false));
  g[0][0] = true;
  for (std::int64_t a = 0; a <= a_max; ++a)
    for (std::int64_t b = 0; b <= b_max; ++b) {
      if (g[a][b]) continue;
      // last generator (1, n) or (n, 1)
      for (std::int64_t n = 1; !g[a][b] && n <= std::max(a, b); ++n) {
        if (a >= 1 && b >= n && g[a - 1][b - n]) g[a][b] = true;
        if (a >= n && b >= 1 && g[a - n][b - 1]) g[a][b] = true;
      }
    }
  return g;
}

}  // namespace

N2Submonoid::N2Submonoid(std::int64_t m) : m_(m) {
  if (m < 2 || m > 40) throw InputError("n2sub bound must lie in [2, 40]");
  grid_ = n2_grid(m_, m_);
}

bool N2Submonoid::member(std::int64_t a, std::int64_t b) const {
  if (a < 0 || b < 0) return false;
  if (a <= m_ && b <= m_) return grid_[a][b];
  return n2_grid(a, b)[a][b];
}

std::string N2Submonoid::format(const Element& x) const { return join_ints(x, "(", ")"); }

Element N2Submonoid::parse(const std::string& text) const {
  const auto items = list_items(text);
  if (items.size() != 2) throw QueryError("n2sub elements are pairs (a,b)");
  const Element e{to_int(items[0]), to_int(items[1])};
  if (!member(e[0], e[1])) throw QueryError(text + " is not in the submonoid");
  return e;
}

std::vector<Element> N2Submonoid::divisor_candidates(const Element& x) const {
  std::vector<Element> out;
  for (std::int64_t a = 0; a <= x[0]; ++a)
    for (std::int64_t b = 0; b <= x[1]; ++b)
      if (member(a, b)) out.push_back({a, b});
  return out;
}

std::vector<Element> N2Submonoid::compute_divisors(const Element& x) const {
  std::vector<Element> out;
  for (std::int64_t a = 0; a <= x[0]; ++a)
    for (std::int64_t b = 0; b <= x[1]; ++b)
      if (member(a, b) && member(x[0] - a, x[1] - b)) out.push_back({a, b});
  return out;
}

// ------------------------------------------------------------ (N, custom order)

Element CoarseNaturals::parse(const std::string& text) const {
  const auto v = to_int(text);
  if (v < 0) throw QueryError("elements are non-negative integers");
  return {v};
}

std::vector<Element> CoarseNaturals::compute_divisors(const Element& x) const {
  std::vector<Element> out;
  for (std::int64_t y = 0; y <= x[0]; ++y) out.push_back({y});
  return out;
}

// ------------------------------------------------------------ groups

namespace {

class CyclicGroup : public Group {
 public:
  explicit CyclicGroup(std::int64_t n) : n_(n) {}
  std::string name() const override { return "C" + std::to_string(n_); }
  GroupElem identity() const override { return {0, 0}; }
  GroupElem mul(const GroupElem& a, const GroupElem& b) const override { return {(a.first + b.first) % n_, 0}; }
  std::string format(const GroupElem& g) const override {
    if (g.first == 0) return "e";
    return g.first == 1 ? "g" : "g" + std::to_string(g.first);
  }
  GroupElem parse(const std::string& t) const override {
    const std::string s = trim(t);
    if (s == "e") return {0, 0};
    if (s == "g") return {1 % n_, 0};
    if (s.size() > 1 && s[0] == 'g') {
      const auto k = to_int<InputError>(s.substr(1));
      if (k >= 0 && k < n_) return {k, 0};
    }
    throw InputError("unknown element '" + t + "' of " + name());
  }

 private:
  std::int64_t n_;
};

class DihedralGroup : public Group {
 public:
  explicit DihedralGroup(std::int64_t n) : n_(n) {}
  std::string name() const override { return n_ ? "D" + std::to_string(n_) : "Dinf"; }
  GroupElem identity() const override { return {0, 0}; }
  // r^k s^e: s r = r^{-1} s
  GroupElem mul(const GroupElem& a, const GroupElem& b) const override {
    std::int64_t k = a.first + (a.second ? -b.first : b.first);
    if (n_) k = ((k % n_) + n_) % n_;
    return {k, a.second ^ b.second};
  }
  std::string format(const GroupElem& g) const override {
    return (g.second ? "s" : "r") + std::to_string(g.first);
  }
  GroupElem parse(const std::string& t) const override {
    const std::string s = trim(t);
    if (s.size() >= 2 && (s[0] == 'r' || s[0] == 's')) {
      std::int64_t k = to_int<InputError>(s.substr(1));
      if (n_) {
        if (k < 0 || k >= n_) throw InputError("rotation index out of range in '" + t + "'");
      }
      return {k, s[0] == 's' ? 1 : 0};
    }
    throw InputError("dihedral elements are written r<k> or s<k>, got '" + t + "'");
  }

 private:
  std::int64_t n_;
};

class TableGroup : public Group {
 public:
  explicit TableGroup(FiniteMonoid m) : m_(std::move(m)) {
    if (!m_.complete() || units(m_).count() != m_.size()) throw InputError("group file must describe a group");
  }
  std::string name() const override { return "table group"; }
  GroupElem identity() const override { return {m_.identity(), 0}; }
  GroupElem mul(const GroupElem& a, const GroupElem& b) const override {
    return {m_.mul(static_cast<Index>(a.first), static_cast<Index>(b.first)), 0};
  }
  std::string format(const GroupElem& g) const override { return m_.label(static_cast<Index>(g.first)); }
  GroupElem parse(const std::string& t) const override {
    const Index i = m_.find(trim(t));
    if (i == kAbsent) throw InputError("unknown group element '" + t + "'");
    return {i, 0};
  }

 private:
  FiniteMonoid m_;
};

}  // namespace

std::unique_ptr<Group> make_cyclic_group(std::int64_t n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  return std::make_unique<CyclicGroup>(n);
}
std::unique_ptr<Group> make_dihedral_group(std::int64_t n) {
  if (n < 0) throw InputError("dihedral order must be non-negative");
  return std::make_unique<DihedralGroup>(n);
}
std::unique_ptr<Group> make_table_group(FiniteMonoid m) { return std::make_unique<TableGroup>(std::move(m)); }

// ------------------------------------------------------------ product-one

ProductOneMonoid::ProductOneMonoid(std::shared_ptr<const Group> g, std::vector<GroupElem> g0, std::int64_t max_size)
    : g_(std::move(g)), g0_(std::move(g0)), max_size_(max_size) {
  std::sort(g0_.begin(), g0_.end());
  g0_.erase(std::unique(g0_.begin(), g0_.end()), g0_.end());
  if (g0_.empty()) throw InputError("empty support");
  if (max_size_ < 1 || max_size_ > 12) throw InputError("product-one size bound must lie in [1, 12]");
}

Element ProductOneMonoid::op(const Element& a, const Element& b) const {
  Element c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

std::string ProductOneMonoid::format(const Element& x) const {
  std::string s = "(";
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::int64_t k = 0; k < x[i]; ++k) {
      s += (first ? "" : ",") + g_->format(g0_[i]);
      first = false;
    }
  return s + ")";
}

Element ProductOneMonoid::parse(const std::string& text) const {
  Element counts(g0_.size(), 0);
  for (const auto& item : list_items(text)) {
    GroupElem g;
    try {
      g = g_->parse(item);
    } catch (const InputError& e) {
      throw QueryError(e.what());
    }
    auto it = std::find(g0_.begin(), g0_.end(), g);
    if (it == g0_.end()) throw QueryError("'" + item + "' is not in the support");
    ++counts[static_cast<std::size_t>(it - g0_.begin())];
  }
  if (!is_product_one(counts)) throw NotProductOne(text);
  return counts;
}

bool ProductOneMonoid::is_product_one(const Element& counts) const {
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(counts); it != memo_.end()) return it->second;
  }
  // Depth-first over orderings, memoized on (remaining multiset, product so far).
  std::set<std::pair<Element, GroupElem>> dead;
  Element rest = counts;
  std::int64_t left = std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
  auto dfs = [&](auto&& self, const GroupElem& prod) -> bool {
    if (left == 0) return prod == g_->identity();
    if (dead.count({rest, prod})) return false;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (!rest[i]) continue;
      --rest[i];
      --left;
      const bool ok = self(self, g_->mul(prod, g0_[i]));
      ++rest[i];
      ++left;
      if (ok) return true;
    }
    dead.insert({rest, prod});
    return false;
  };
  const bool r = dfs(dfs, g_->identity());
  std::lock_guard lock(mu_);
  memo_.emplace(counts, r);
  return r;
}

namespace {

void sub_vectors(const Element& x, std::size_t i, Element& cur, std::vector<Element>& out) {
  if (i == x.size()) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t k = 0; k <= x[i]; ++k) {
    cur[i] = k;
    sub_vectors(x, i + 1, cur, out);
  }
  cur[i] = 0;
}

}  // namespace

// Cofactors must themselves be product-one, so the candidates are the
// product-one sub-sequences.
std::vector<Element> ProductOneMonoid::divisor_candidates(const Element& x) const {
  std::vector<Element> all, out;
  Element cur(x.size(), 0);
  sub_vectors(x, 0, cur, all);
  for (auto& t : all)
    if (is_product_one(t)) out.push_back(std::move(t));
  return out;
}

std::vector<Element> ProductOneMonoid::compute_divisors(const Element& x) const {
  std::vector<Element> out, all;
  Element cur(x.size(), 0);
  sub_vectors(x, 0, cur, all);
  for (const Element& t : all) {
    Element rest(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) rest[i] = x[i] - t[i];
    if (is_product_one(t) && is_product_one(rest)) out.push_back(t);
  }
  return out;
}

std::vector<Element> ProductOneMonoid::default_roots() const {
  std::vector<Element> out;
  Element cur(g0_.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t budget) -> void {
    if (i == cur.size()) {
      if (is_product_one(cur)) out.push_back(cur);
      return;
    }
    for (std::int64_t k = 0; k <= budget; ++k) {
      cur[i] = k;
      self(self, i + 1, budget - k);
    }
    cur[i] = 0;
  };
  rec(rec, 0, max_size_);
  return out;
}

// ------------------------------------------------------------ instance specs

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 0) n = -n;
  for (std::int64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

Index Instance::find(const std::string& text) const {
  if (Index i = premonoid.monoid.find(text); i != kAbsent) return i;
  if (family) {
    const Element e = family->parse(text);
    const auto it = std::lower_bound(elements.begin(), elements.end(), e);
    if (it != elements.end() && *it == e) return static_cast<Index>(it - elements.begin());
    throw QueryError("'" + text + "' lies outside the loaded window; add it as a window root");
  }
  throw QueryError("unknown element '" + text + "'");
}

namespace {

std::shared_ptr<const Group> parse_group(const std::string& g) {
  if (g == "Dinf") return make_dihedral_group(0);
  if (g.size() > 1 && (g[0] == 'C' || g[0] == 'D') &&
      std::all_of(g.begin() + 1, g.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const auto n = to_int<InputError>(g.substr(1));
    return g[0] == 'C' ? make_cyclic_group(n) : make_dihedral_group(n);
  }
  return make_table_group(load_monoid_file(g));
}

Instance window_instance(const std::string& spec, std::shared_ptr<const LocallyFiniteMonoid> lf,
                         const std::vector<std::string>& roots) {
  std::vector<Element> rs;
  if (roots.empty()) {
    rs = lf->default_roots();
  } else {
    for (const auto& r : roots) rs.push_back(lf->parse(r));
  }
  Window w = build_window(*lf, rs);
  Instance inst;
  inst.spec = spec;
  inst.premonoid = std::move(w.premonoid);
  inst.elements = std::move(w.elements);
  inst.heights_exact = w.heights_exact;
  inst.family = std::move(lf);
  return inst;
}

}  // namespace

Instance load_instance(const std::string& spec, const std::vector<std::string>& roots) {
  const auto colon = spec.find(':');
  const std::string head = colon == std::string::npos ? "" : spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto finite = [&](Premonoid p) {
    Instance inst;
    inst.spec = spec;
    inst.premonoid = std::move(p);
    return inst;
  };

  if (head == "zn") return finite(with_divisibility(make_zn(static_cast<Index>(to_int<InputError>(rest)))));
  if (head == "powerset") return finite(make_powerset_premonoid(static_cast<unsigned>(to_int<InputError>(rest))));
  if (head == "power") {
    Instance base = load_instance(rest);
    if (base.is_window()) throw InputError("power: base monoid must be finite");
    return window_instance(spec, std::make_shared<PowerMonoid>(base.premonoid.monoid), roots);
  }
  if (head == "powerN") return window_instance(spec, std::make_shared<ReducedPowerN>(to_int<InputError>(rest)), roots);
  if (head == "numerical") {
    std::vector<std::int64_t> gens;
    for (const auto& g : split(rest, ',')) gens.push_back(to_int<InputError>(g));
    return window_instance(spec, std::make_shared<NumericalMonoid>(gens), roots);
  }
  if (head == "n2sub") return window_instance(spec, std::make_shared<N2Submonoid>(to_int<InputError>(rest)), roots);
  if (head == "coarseN" || head == "remarkN") {
    const auto cap = to_int<InputError>(rest);
    if (cap < 1) throw InputError("coarseN cap must be positive");
    return window_instance(spec, std::make_shared<CoarseNaturals>(cap), roots);
  }
  if (head == "b") {
    // b:<group>:<G0>[:<max size>]; a group file path may itself contain ':'
    const auto parts = split(rest, ':');
    if (parts.size() < 2) throw InputError("expected b:<group>:<G0>[:<max size>]");
    std::size_t g0_at = parts.size() - 1;
    std::int64_t max_size = 6;
    if (parts.size() >= 3 && !parts.back().empty() &&
        std::all_of(parts.back().begin(), parts.back().end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      max_size = to_int<InputError>(parts.back());
      g0_at = parts.size() - 2;
    }
    std::string gname = parts[0];
    for (std::size_t i = 1; i < g0_at; ++i) gname += ":" + parts[i];
    auto group = parse_group(gname);
    std::vector<GroupElem> g0;
    for (const auto& item : list_items(parts[g0_at])) g0.push_back(group->parse(item));
    return window_instance(spec, std::make_shared<ProductOneMonoid>(group, g0, max_size), roots);
  }
  if (head == "matrix" || head == "present")
    throw InputError(head + ": instances are handled by their own reports, not as finite premonoids");
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") return finite(with_divisibility(load_monoid_file(spec)));
  throw InputError("unknown instance spec '" + spec + "'");
}

const std::vector<std::string>& builtin_specs() {
  static const std::vector<std::string> specs = {
      "zn:1",       "zn:2",       "zn:4",        "zn:6",          "zn:8",         "zn:9",
      "zn:12",      "zn:27",      "powerset:2",  "powerset:3",    "power:zn:2",   "power:zn:3",
      "powerN:3",   "numerical:2,3", "numerical:3,5,7", "n2sub:4", "coarseN:6", "b:C3:g,g2",
      "b:C4:g,g3",  "b:D3:r1,s0", "b:Dinf:r1,s0",
  };
  return specs;
}

}  // namespace premon
