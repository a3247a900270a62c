#include "ybe/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace ybe {

namespace {

std::string triple_text(Element a, Element b, Element c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

// First (row or column, value) breaking the latin property; nullopt if none.
std::optional<std::vector<Element>> latin_violation(std::size_t n,
                                                    std::span<Element const> t) {
  std::vector<std::uint8_t> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      Element v = t[r * n + c];
      if (v >= n || seen[v]) return std::vector<Element>{0, Element(r), Element(c)};
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      Element v = t[r * n + c];
      if (seen[v]) return std::vector<Element>{1, Element(c), Element(r)};
      seen[v] = 1;
    }
  }
  return std::nullopt;
}

bool is_identity(std::size_t n, std::span<Element const> t, Element e) {
  for (std::size_t x = 0; x < n; ++x) {
    if (t[e * n + x] != x || t[x * n + e] != x) return false;
  }
  return true;
}

std::optional<std::vector<Element>> associativity_violation(std::size_t n,
                                                            std::span<Element const> t) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Element ab = t[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
          return std::vector<Element>{Element(a), Element(b), Element(c)};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Report check_group_table(std::size_t n, std::span<Element const> t, bool check_assoc) {
  Report rep;
  if (n == 0 || t.size() != n * n) {
    rep.add("dimensions", false, {Element(n), Element(t.size())});
    return rep;
  }
  auto latin = latin_violation(n, t);
  rep.add("latin-square", !latin, latin.value_or(std::vector<Element>{}));
  if (latin) return rep;
  rep.add("identity", is_identity(n, t, 0));
  if (check_assoc) {
    auto assoc = associativity_violation(n, t);
    rep.add("associativity", !assoc, assoc.value_or(std::vector<Element>{}));
  }
  // Latin + identity gives unique one-sided inverses; require them to agree.
  std::vector<Element> bad;
  for (std::size_t x = 0; x < n && bad.empty(); ++x) {
    auto row = t.subspan(x * n, n);
    auto y = Element(std::find(row.begin(), row.end(), Element{0}) - row.begin());
    if (t[y * n + x] != 0) bad = {Element(x)};
  }
  rep.add("inverses", bad.empty(), bad);
  return rep;
}

FiniteGroup::FiniteGroup() : FiniteGroup(1, Table{0}, "C1", false) {}

FiniteGroup::FiniteGroup(std::size_t order, Table table, std::string name, bool check_assoc)
    : _order(order), _table(std::move(table)), _name(std::move(name)) {
  if (_order == 0) fail(ErrorCode::InvalidArgument, "group order must be positive");
  if (_table.size() != _order * _order) {
    fail(ErrorCode::InvalidArgument,
         "table has " + std::to_string(_table.size()) + " entries, expected " +
             std::to_string(_order * _order));
  }
  auto n = _order;
  if (auto bad = latin_violation(n, _table)) {
    auto const& w = *bad;
    fail(ErrorCode::NotLatinSquare, std::string((w[0] == 0) ? "row " : "column ") +
                                        std::to_string(w[1]) + " repeats or overflows at " +
                                        std::to_string(w[2]));
  }
  if (!is_identity(n, _table, 0)) {
    std::optional<Element> e;
    for (std::size_t c = 1; c < n && !e; ++c) {
      if (is_identity(n, _table, Element(c))) e = Element(c);
    }
    if (!e) fail(ErrorCode::NoIdentity, "no two-sided identity in table of order " + std::to_string(n));
    // Swap labels 0 <-> e.
    auto relabel = [&](Element x) -> Element { return x == 0 ? *e : (x == *e ? 0 : x); };
    Table t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[relabel(Element(a)) * n + relabel(Element(b))] = relabel(_table[a * n + b]);
      }
    }
    _table = std::move(t);
  }
  if (check_assoc) {
    if (auto bad = associativity_violation(n, _table)) {
      auto const& w = *bad;
      fail(ErrorCode::NotAssociative, "triple " + triple_text(w[0], w[1], w[2]));
    }
  }
  _inverse.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    auto r = row(Element(x));
    auto y = Element(std::find(r.begin(), r.end(), Element{0}) - r.begin());
    if (mul(y, Element(x)) != 0) {
      fail(ErrorCode::NotAssociative, "element " + std::to_string(x) + " has no two-sided inverse");
    }
    _inverse[x] = y;
  }
}

FiniteGroup FiniteGroup::from_table(std::size_t order, Table table, std::string name) {
  if (order > kMaxGroupOrder) {
    fail(ErrorCode::CapExceeded, "order " + std::to_string(order) + " exceeds " +
                                     std::to_string(kMaxGroupOrder));
  }
  return FiniteGroup(order, std::move(table), std::move(name), true);
}

FiniteGroup FiniteGroup::trusted(std::size_t order, Table table, std::string name) {
  return FiniteGroup(order, std::move(table), std::move(name), false);
}

Element FiniteGroup::power(Element a, std::size_t k) const {
  Element r = 0;
  for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < _order; ++a) {
    for (std::size_t b = a + 1; b < _order; ++b) {
      if (mul(Element(a), Element(b)) != mul(Element(b), Element(a))) return false;
    }
  }
  return true;
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  FiniteGroup g = *this;
  g._name = std::move(name);
  return g;
}

bool Subgroup::contains(Element g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

Element Subgroup::position(Element g) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), g);
  if (it == elements.end() || *it != g) {
    fail(ErrorCode::InvalidArgument, "element " + std::to_string(g) + " not in subgroup");
  }
  return Element(it - elements.begin());
}

GroupMap identity_map(std::size_t n) {
  GroupMap f;
  f.images.resize(n);
  std::iota(f.images.begin(), f.images.end(), Element{0});
  return f;
}

GroupMap compose(GroupMap const& f, GroupMap const& g) {
  GroupMap h;
  h.images.reserve(g.size());
  for (Element x : g.images) h.images.push_back(f(x));
  return h;
}

std::optional<std::vector<Element>> homomorphism_violation(FiniteGroup const& src,
                                                           FiniteGroup const& tgt,
                                                           GroupMap const& f) {
  if (f.size() != src.order()) return std::vector<Element>{};
  for (Element x : f.images) {
    if (x >= tgt.order()) return std::vector<Element>{};
  }
  for (std::size_t a = 0; a < src.order(); ++a) {
    for (std::size_t b = 0; b < src.order(); ++b) {
      if (f(src.mul(Element(a), Element(b))) != tgt.mul(f(Element(a)), f(Element(b)))) {
        return std::vector<Element>{Element(a), Element(b)};
      }
    }
  }
  return std::nullopt;
}

bool is_bijective(GroupMap const& f) {
  std::vector<std::uint8_t> seen(f.size());
  for (Element x : f.images) {
    if (x >= f.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool is_automorphism(FiniteGroup const& g, GroupMap const& f) {
  return is_bijective(f) && !homomorphism_violation(g, g, f);
}

Report check_action(FiniteGroup const& g, GroupAction const& a) {
  Report rep;
  if (a.actor_order != g.order() || a.table.size() != a.actor_order * a.points) {
    rep.add("action-dimensions", false, {Element(a.actor_order), Element(a.points)});
    return rep;
  }
  std::vector<Element> bad;
  for (std::size_t p = 0; p < a.points && bad.empty(); ++p) {
    if (a.act(0, Element(p)) != p) bad = {Element(p)};
  }
  rep.add("action-identity", bad.empty(), bad);
  bad.clear();
  for (std::size_t x = 0; x < g.order() && bad.empty(); ++x) {
    for (std::size_t p = 0; p < a.points; ++p) {
      if (a.table[x * a.points + p] >= a.points) {
        bad = {Element(x), Element(p)};
        break;
      }
    }
  }
  rep.add("action-range", bad.empty(), bad);
  if (!bad.empty()) return rep;
  for (std::size_t x = 0; x < g.order() && bad.empty(); ++x) {
    for (std::size_t y = 0; y < g.order() && bad.empty(); ++y) {
      Element xy = g.mul(Element(x), Element(y));
      for (std::size_t p = 0; p < a.points; ++p) {
        if (a.act(xy, Element(p)) != a.act(Element(x), a.act(Element(y), Element(p)))) {
          bad = {Element(x), Element(y), Element(p)};
          break;
        }
      }
    }
  }
  rep.add("action-compatibility", bad.empty(), bad);
  return rep;
}

std::vector<Element> orbit(GroupAction const& a, Element point) {
  std::vector<std::uint8_t> seen(a.points);
  std::vector<Element> out{point};
  seen[point] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t g = 0; g < a.actor_order; ++g) {
      Element q = a.act(Element(g), out[i]);
      if (!seen[q]) {
        seen[q] = 1;
        out.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_transitive(GroupAction const& a) {
  return a.points == 0 || orbit(a, 0).size() == a.points;
}

Subgroup stabilizer(FiniteGroup const& g, GroupAction const& a, Element point) {
  if (point >= a.points) {
    fail(ErrorCode::InvalidArgument, "point " + std::to_string(point) + " out of range");
  }
  Subgroup s;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (a.act(Element(x), point) == point) s.elements.push_back(Element(x));
  }
  if (orbit(a, point).size() * s.size() != g.order()) {
    fail(ErrorCode::InternalConsistency, "orbit-stabilizer count mismatch at point " +
                                             std::to_string(point));
  }
  return s;
}

GroupAction left_regular_action(FiniteGroup const& g) {
  return GroupAction{g.order(), g.order(), g.table()};
}

GroupAction restrict_action(GroupAction const& a, Subgroup const& h) {
  GroupAction r{h.size(), a.points, {}};
  r.table.reserve(h.size() * a.points);
  for (Element x : h.elements) {
    for (std::size_t p = 0; p < a.points; ++p) r.table.push_back(a.act(x, Element(p)));
  }
  return r;
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "cyclic group order must be positive");
  Table t(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = Element((i + j) % n);
  }
  return FiniteGroup::trusted(n, std::move(t), "C" + std::to_string(n));
}

FiniteGroup elementary_abelian(std::size_t p, std::size_t k) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) fail(ErrorCode::InvalidArgument, "rank must be positive");
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= p;
    if (n > kMaxGroupOrder) fail(ErrorCode::CapExceeded, "p^k exceeds maximum order");
  }
  Table t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t x = a, y = b, r = 0, place = 1;
      for (std::size_t i = 0; i < k; ++i) {
        r += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
      }
      t[a * n + b] = Element(r);
    }
  }
  std::string name = k == 1 ? "C" + std::to_string(p) : "C" + std::to_string(p) + "^" + std::to_string(k);
  return FiniteGroup::trusted(n, std::move(t), name);
}

FiniteGroup dihedral_group(std::size_t m) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "dihedral parameter must be positive");
  auto rot = cyclic_group(m);
  GroupMap inversion;
  for (std::size_t i = 0; i < m; ++i) inversion.images.push_back(Element((m - i) % m));
  return semidirect_product(rot, cyclic_group(2), {identity_map(m), inversion})
      .renamed("D" + std::to_string(2 * m));
}

FiniteGroup quaternion_group() {
  // Elements (sign, unit) with units 1,i,j,k; index = 2*unit + sign.
  static constexpr int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  Table t(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int sign = (a % 2) ^ (b % 2) ^ sign_mul[ua][ub];
      t[a * 8 + b] = Element(2 * unit_mul[ua][ub] + sign);
    }
  }
  return FiniteGroup::from_table(8, std::move(t), "Q8");
}

FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b) {
  std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > kMaxGroupOrder) fail(ErrorCode::CapExceeded, "direct product too large");
  Table t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      t[x * n + y] = Element(a.mul(Element(x / nb), Element(y / nb)) * nb +
                             b.mul(Element(x % nb), Element(y % nb)));
    }
  }
  return FiniteGroup::trusted(n, std::move(t), a.name() + "x" + b.name());
}

FiniteGroup opposite_group(FiniteGroup const& g) {
  std::size_t n = g.order();
  Table t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = g.mul(Element(y), Element(x));
  }
  return FiniteGroup::trusted(n, std::move(t), g.name() + "^op");
}

FiniteGroup semidirect_product(FiniteGroup const& h, FiniteGroup const& s,
                               std::vector<GroupMap> const& alpha) {
  std::size_t nh = h.order(), ns = s.order(), n = nh * ns;
  if (alpha.size() != ns) {
    fail(ErrorCode::NotHomomorphism, "need one automorphism per element of S");
  }
  for (std::size_t x = 0; x < ns; ++x) {
    if (alpha[x].size() != nh || !is_automorphism(h, alpha[x])) {
      fail(ErrorCode::NotAutomorphism, "alpha[" + std::to_string(x) + "] is not an automorphism");
    }
  }
  for (std::size_t x = 0; x < ns; ++x) {
    for (std::size_t y = 0; y < ns; ++y) {
      if (alpha[s.mul(Element(x), Element(y))] != compose(alpha[x], alpha[y])) {
        fail(ErrorCode::NotHomomorphism, "alpha(" + std::to_string(x) + "*" + std::to_string(y) +
                                             ") != alpha(x) o alpha(y)");
      }
    }
  }
  Table t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    Element ha = Element(a / ns), sa = Element(a % ns);
    auto const& act = alpha[sa];
    for (std::size_t b = 0; b < n; ++b) {
      Element hb = Element(b / ns), sb = Element(b % ns);
      t[a * n + b] = Element(h.mul(ha, act(hb)) * ns + s.mul(sa, sb));
    }
  }
  return FiniteGroup::trusted(n, std::move(t), h.name() + ":" + s.name());
}

std::optional<std::vector<Element>> closure_with(FiniteGroup const& g,
                                                 std::span<Element const> base,
                                                 std::span<Element const> gens,
                                                 std::size_t limit) {
  // The result is a union of left cosets of `base`, so each newly reached
  // element brings its whole coset along and only `gens` drive the search.
  std::vector<std::uint8_t> in(g.order());
  std::vector<Element> coset(base.begin(), base.end());
  if (coset.empty()) coset.push_back(0);
  std::vector<Element> out;
  auto add_coset = [&](Element x) {
    if (in[x]) return;
    for (Element k : coset) {
      Element y = g.mul(x, k);
      in[y] = 1;
      out.push_back(y);
    }
  };
  add_coset(0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out.size() > limit) return std::nullopt;
    for (Element x : gens) add_coset(g.mul(out[i], x));
  }
  if (out.size() > limit) return std::nullopt;
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup subgroup_generated(FiniteGroup const& g, std::span<Element const> gens) {
  for (Element x : gens) {
    if (x >= g.order()) fail(ErrorCode::InvalidArgument, "generator " + std::to_string(x) + " out of range");
  }
  auto elems = closure_with(g, {}, gens, g.order());
  return Subgroup{std::move(*elems), std::vector<Element>(gens.begin(), gens.end())};
}

bool is_subgroup(FiniteGroup const& g, std::span<Element const> elements) {
  std::vector<std::uint8_t> in(g.order());
  for (Element x : elements) {
    if (x >= g.order()) return false;
    in[x] = 1;
  }
  if (!in[0]) return false;
  for (Element a : elements) {
    if (!in[g.inv(a)]) return false;
    for (Element b : elements) {
      if (!in[g.mul(a, b)]) return false;
    }
  }
  return true;
}

bool is_normal(FiniteGroup const& g, Subgroup const& s) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (Element y : s.elements) {
      if (!s.contains(g.conj(Element(x), y))) return false;
    }
  }
  return true;
}

FiniteGroup induced_group(FiniteGroup const& g, Subgroup const& s, std::string name) {
  std::size_t m = s.size();
  Table t(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      t[a * m + b] = s.position(g.mul(s.elements[a], s.elements[b]));
    }
  }
  return FiniteGroup::trusted(m, std::move(t), std::move(name));
}

std::vector<Element> greedy_generators(FiniteGroup const& g) {
  std::vector<Element> gens;
  std::vector<Element> span{0};
  for (std::size_t x = 1; x < g.order(); ++x) {
    if (std::binary_search(span.begin(), span.end(), Element(x))) continue;
    Element e = Element(x);
    span = *closure_with(g, span, std::span<Element const>(&e, 1), g.order());
    gens.push_back(e);
    if (span.size() == g.order()) break;
  }
  return gens;
}

}  // namespace ybe
