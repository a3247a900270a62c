#include "ybe/factorization.hpp"

#include <algorithm>

namespace ybe {

namespace {

bool meets_trivially(std::vector<Element> const& k, std::vector<std::uint8_t> const& in_s) {
  for (Element x : k) {
    if (x != 0 && in_s[x]) return false;
  }
  return true;
}

}  // namespace

std::vector<Subgroup> find_complements(FiniteGroup const& g, Subgroup const& s) {
  if (s.size() == 0 || g.order() % s.size() != 0) {
    fail(ErrorCode::InvalidArgument, "|S| must divide |G|");
  }
  std::size_t target = g.order() / s.size();
  std::vector<std::uint8_t> in_s(g.order());
  for (Element x : s.elements) in_s[x] = 1;

  std::vector<Element> candidates;
  for (std::size_t x = 1; x < g.order(); ++x) {
    if (!in_s[x] && target % g.element_order(Element(x)) == 0) candidates.push_back(Element(x));
  }

  std::vector<Subgroup> found;
  std::vector<Element> chain;
  // Each subgroup is reached once, along its greedy chain: every new
  // generator is the least element it adds to the current span.
  auto search = [&](auto& self, std::vector<Element> const& span, std::size_t from) -> void {
    if (span.size() == target) {
      found.push_back(Subgroup{span, chain});
      return;
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      Element c = candidates[i];
      if (std::binary_search(span.begin(), span.end(), c)) continue;
      auto next = closure_with(g, span, std::span<Element const>(&c, 1), target);
      if (!next || target % next->size() != 0 || !meets_trivially(*next, in_s)) continue;
      bool canonical = true;
      for (Element x : *next) {
        if (x >= c) break;
        if (!std::binary_search(span.begin(), span.end(), x)) {
          canonical = false;
          break;
        }
      }
      if (!canonical) continue;
      chain.push_back(c);
      self(self, *next, i + 1);
      chain.pop_back();
    }
  };
  search(search, std::vector<Element>{0}, 0);

  std::sort(found.begin(), found.end(),
            [](Subgroup const& a, Subgroup const& b) { return a.elements < b.elements; });
  return found;
}

std::vector<Subgroup> all_subgroups(FiniteGroup const& g) {
  std::size_t n = g.order();
  std::vector<Subgroup> found;
  std::vector<Element> chain;
  auto search = [&](auto& self, std::vector<Element> const& span, Element from) -> void {
    found.push_back(Subgroup{span, chain});
    for (Element c = from; c < n; ++c) {
      if (std::binary_search(span.begin(), span.end(), c)) continue;
      auto next = closure_with(g, span, std::span<Element const>(&c, 1), n);
      if (n % next->size() != 0) continue;
      bool canonical = true;
      for (Element x : *next) {
        if (x >= c) break;
        if (!std::binary_search(span.begin(), span.end(), x)) {
          canonical = false;
          break;
        }
      }
      if (!canonical) continue;
      chain.push_back(c);
      self(self, *next, c + 1);
      chain.pop_back();
    }
  };
  search(search, std::vector<Element>{0}, 1);
  std::sort(found.begin(), found.end(),
            [](Subgroup const& a, Subgroup const& b) { return a.elements < b.elements; });
  return found;
}

bool exact_factorization(FiniteGroup const& g, Subgroup const& h, Subgroup const& s) {
  if (h.size() * s.size() != g.order()) return false;
  for (Element x : h.elements) {
    if (x != 0 && s.contains(x)) return false;
  }
  return true;
}

Factorization factorize(FiniteGroup const& g, Subgroup const& h, Subgroup const& s) {
  if (!exact_factorization(g, h, s)) {
    fail(ErrorCode::NotExactFactorization, "G is not HS exactly");
  }
  Factorization f{h, s, std::vector<Element>(g.order()), std::vector<Element>(g.order())};
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      Element x = g.mul(h.elements[i], s.elements[j]);
      f.h_part[x] = Element(i);
      f.s_part[x] = Element(j);
    }
  }
  return f;
}

Report check_matched_pair(MatchedPair const& mp) {
  Report rep;
  auto const& H = mp.h;
  auto const& S = mp.s;
  std::size_t nh = H.order(), ns = S.order();
  if (mp.left.size() != nh * ns || mp.right.size() != nh * ns) {
    rep.add("matched-pair-dimensions", false);
    return rep;
  }
  for (std::size_t i = 0; i < nh * ns; ++i) {
    if (mp.left[i] >= nh || mp.right[i] >= ns) {
      rep.add("matched-pair-range", false, {Element(i)});
      return rep;
    }
  }

  std::vector<Element> bad;
  for (Element h = 0; h < nh && bad.empty(); ++h) {
    if (mp.left_act(0, h) != h) bad = {h};
  }
  for (Element s = 0; s < ns && bad.empty(); ++s) {
    for (Element t = 0; t < ns && bad.empty(); ++t) {
      for (Element h = 0; h < nh; ++h) {
        if (mp.left_act(S.mul(s, t), h) != mp.left_act(s, mp.left_act(t, h))) {
          bad = {s, t, h};
          break;
        }
      }
    }
  }
  rep.add("left-action", bad.empty(), bad);

  bad.clear();
  for (Element s = 0; s < ns && bad.empty(); ++s) {
    if (mp.right_act(s, 0) != s) bad = {s};
  }
  for (Element s = 0; s < ns && bad.empty(); ++s) {
    for (Element h1 = 0; h1 < nh && bad.empty(); ++h1) {
      for (Element h2 = 0; h2 < nh; ++h2) {
        if (mp.right_act(s, H.mul(h1, h2)) != mp.right_act(mp.right_act(s, h1), h2)) {
          bad = {s, h1, h2};
          break;
        }
      }
    }
  }
  rep.add("right-action", bad.empty(), bad);

  bad.clear();
  for (Element s = 0; s < ns && bad.empty(); ++s) {
    for (Element h1 = 0; h1 < nh && bad.empty(); ++h1) {
      for (Element h2 = 0; h2 < nh; ++h2) {
        Element lhs = mp.left_act(s, H.mul(h1, h2));
        Element rhs = H.mul(mp.left_act(s, h1), mp.left_act(mp.right_act(s, h1), h2));
        if (lhs != rhs) {
          bad = {s, h1, h2};
          break;
        }
      }
    }
  }
  rep.add("compatibility-left", bad.empty(), bad);

  bad.clear();
  for (Element s1 = 0; s1 < ns && bad.empty(); ++s1) {
    for (Element s2 = 0; s2 < ns && bad.empty(); ++s2) {
      for (Element h = 0; h < nh; ++h) {
        Element lhs = mp.right_act(S.mul(s1, s2), h);
        Element rhs = S.mul(mp.right_act(s1, mp.left_act(s2, h)), mp.right_act(s2, h));
        if (lhs != rhs) {
          bad = {s1, s2, h};
          break;
        }
      }
    }
  }
  rep.add("compatibility-right", bad.empty(), bad);
  return rep;
}

MatchedPair matched_pair_from_factorization(FiniteGroup const& g, Subgroup const& h,
                                            Subgroup const& s) {
  auto f = factorize(g, h, s);
  std::size_t nh = h.size(), ns = s.size();
  MatchedPair mp{induced_group(g, h, "H"), induced_group(g, s, "S"), Table(nh * ns),
                 Table(nh * ns)};
  for (std::size_t j = 0; j < ns; ++j) {
    for (std::size_t i = 0; i < nh; ++i) {
      Element x = g.mul(s.elements[j], h.elements[i]);
      mp.left[j * nh + i] = f.h_part[x];
      mp.right[j * nh + i] = f.s_part[x];
    }
  }
  return mp;
}

FiniteGroup bicrossed_product(MatchedPair const& mp) {
  auto rep = check_matched_pair(mp);
  if (auto const* bad = rep.first_failure()) {
    fail(ErrorCode::CompatibilityViolated, bad->name + " at " + format_witness(bad->witness));
  }
  std::size_t nh = mp.h.order(), ns = mp.s.order(), n = nh * ns;
  Table t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    Element h1 = Element(a / ns), s1 = Element(a % ns);
    for (std::size_t b = 0; b < n; ++b) {
      Element h2 = Element(b / ns), s2 = Element(b % ns);
      Element h = mp.h.mul(h1, mp.left_act(s1, h2));
      Element s = mp.s.mul(mp.right_act(s1, h2), s2);
      t[a * n + b] = Element(h * ns + s);
    }
  }
  return FiniteGroup::trusted(n, std::move(t), mp.h.name() + "|><|" + mp.s.name());
}

bool is_factorization_isomorphism(FiniteGroup const& g, Subgroup const& h, Subgroup const& s,
                                  FiniteGroup const& product) {
  std::size_t n = g.order(), ns = s.size();
  if (product.order() != n || h.size() * ns != n) return false;
  std::vector<Element> phi(n);
  std::vector<std::uint8_t> hit(n);
  for (std::size_t a = 0; a < n; ++a) {
    phi[a] = g.mul(h.elements[a / ns], s.elements[a % ns]);
    if (hit[phi[a]]) return false;
    hit[phi[a]] = 1;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (phi[product.mul(Element(a), Element(b))] != g.mul(phi[a], phi[b])) return false;
    }
  }
  return true;
}

}  // namespace ybe
