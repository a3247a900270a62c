#include "ybe/automorphism.hpp"

#include <algorithm>
#include <limits>

namespace ybe {

namespace {

constexpr Element kUnset = std::numeric_limits<Element>::max();

// Partial homomorphism grown one generator at a time. Every element of the
// current domain has all edges x -> x*g_j checked, so a completed domain is
// a genuine homomorphism on the subgroup it spans.
class PartialMap {
 public:
  PartialMap(FiniteGroup const& src, FiniteGroup const& tgt, bool injective)
      : _src(src), _tgt(tgt), _injective(injective), _map(src.order(), kUnset),
        _used(tgt.order()) {
    define(0, 0);
  }

  std::size_t mark() const { return _domain.size(); }

  void rollback(std::size_t mark) {
    while (_domain.size() > mark) {
      Element x = _domain.back();
      _domain.pop_back();
      _used[_map[x]] = 0;
      _map[x] = kUnset;
    }
  }

  // Adds gens[k] -> images[k] for k < count, assuming gens[0..count-2] are
  // already consistent on the current domain.
  bool extend(std::span<Element const> gens, std::span<Element const> images) {
    for (std::size_t i = 0; i < _domain.size(); ++i) {
      Element x = _domain[i];
      Element fx = _map[x];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        Element y = _src.mul(x, gens[j]);
        Element fy = _tgt.mul(fx, images[j]);
        if (_map[y] == kUnset) {
          if (_injective && _used[fy]) return false;
          define(y, fy);
        } else if (_map[y] != fy) {
          return false;
        }
      }
    }
    return true;
  }

  bool complete() const { return _domain.size() == _src.order(); }

  GroupMap result() const { return GroupMap{_map}; }

 private:
  void define(Element x, Element fx) {
    _map[x] = fx;
    _used[fx] = 1;
    _domain.push_back(x);
  }

  FiniteGroup const& _src;
  FiniteGroup const& _tgt;
  bool _injective;
  std::vector<Element> _map;
  std::vector<std::uint8_t> _used;
  std::vector<Element> _domain;
};

}  // namespace

std::optional<GroupMap> extend_homomorphism(FiniteGroup const& source,
                                            FiniteGroup const& target,
                                            std::span<Element const> gens,
                                            std::span<Element const> images) {
  if (gens.size() != images.size()) {
    fail(ErrorCode::InvalidArgument, "generator and image counts differ");
  }
  PartialMap pm(source, target, false);
  if (!pm.extend(gens, images) || !pm.complete()) return std::nullopt;
  return pm.result();
}

void for_each_endomorphism(FiniteGroup const& g, bool injective_only,
                           std::function<bool(GroupMap const&)> const& visit) {
  auto gens = greedy_generators(g);
  std::vector<std::size_t> orders(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) orders[x] = g.element_order(Element(x));

  PartialMap pm(g, g, injective_only);
  std::vector<Element> images(gens.size());
  bool keep_going = true;

  std::function<void(std::size_t)> search = [&](std::size_t level) {
    if (!keep_going) return;
    if (level == gens.size()) {
      if (pm.complete()) keep_going = visit(pm.result());
      return;
    }
    std::size_t ord = orders[gens[level]];
    for (std::size_t t = 0; t < g.order() && keep_going; ++t) {
      bool ok = injective_only ? orders[t] == ord : ord % orders[t] == 0;
      if (!ok) continue;
      images[level] = Element(t);
      auto m = pm.mark();
      if (pm.extend(std::span(gens).first(level + 1), std::span(images).first(level + 1))) {
        search(level + 1);
      }
      pm.rollback(m);
    }
  };
  search(0);
}

std::optional<Element> AutomorphismGroup::find(GroupMap const& f) const {
  auto it = index.find(f.images);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

Element AutomorphismGroup::index_of(GroupMap const& f) const {
  auto i = find(f);
  if (!i) fail(ErrorCode::NotAutomorphism, "map is not in the automorphism list");
  return *i;
}

AutomorphismGroup automorphism_group(FiniteGroup const& g, std::size_t cap) {
  if (g.order() > cap) {
    fail(ErrorCode::CapExceeded, "automorphism search limited to order " + std::to_string(cap) +
                                     ", got " + std::to_string(g.order()));
  }
  AutomorphismGroup aut;
  for_each_endomorphism(g, true, [&](GroupMap const& f) {
    aut.maps.push_back(f);
    return true;
  });
  // The identity is the lexicographically least permutation fixing 0.
  std::sort(aut.maps.begin(), aut.maps.end(),
            [](GroupMap const& a, GroupMap const& b) { return a.images < b.images; });
  std::size_t m = aut.maps.size();
  for (std::size_t i = 0; i < m; ++i) aut.index.emplace(aut.maps[i].images, Element(i));
  Table t(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      t[a * m + b] = aut.index_of(compose(aut.maps[a], aut.maps[b]));
    }
  }
  aut.group = FiniteGroup::trusted(m, std::move(t), "Aut(" + g.name() + ")");
  return aut;
}

std::optional<Element> Holomorph::find_permutation(std::span<Element const> perm) const {
  if (perm.size() != base.order()) return std::nullopt;
  Element h = perm[0];
  GroupMap a;
  a.images.reserve(perm.size());
  Element hinv = base.inv(h);
  for (Element k : perm) a.images.push_back(base.mul(hinv, k));
  auto i = aut.find(a);
  if (!i) return std::nullopt;
  return element(h, *i);
}

Subgroup Holomorph::translations() const {
  Subgroup s;
  for (std::size_t h = 0; h < base.order(); ++h) s.elements.push_back(element(Element(h), 0));
  return s;
}

Holomorph holomorph(FiniteGroup const& g, HolomorphLimits limits) {
  auto aut = automorphism_group(g, limits.aut_cap);
  std::size_t order = g.order() * aut.maps.size();
  if (order > limits.max_order) {
    fail(ErrorCode::CapExceeded, "holomorph of order " + std::to_string(order) +
                                     " exceeds maximum order " + std::to_string(limits.max_order));
  }
  auto hol = semidirect_product(g, aut.group, aut.maps).renamed("Hol(" + g.name() + ")");
  std::size_t n = g.order(), m = aut.maps.size();
  GroupAction act{order, n, Table(order * n)};
  for (std::size_t x = 0; x < order; ++x) {
    Element h = Element(x / m);
    auto const& a = aut.maps[x % m];
    for (std::size_t k = 0; k < n; ++k) act.table[x * n + k] = g.mul(h, a(Element(k)));
  }
  return Holomorph{g, std::move(aut), std::move(hol), std::move(act)};
}

}  // namespace ybe
