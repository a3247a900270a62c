#pragma once

// Brute-force reference computations, written independently of the
// library algorithms.

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <vector>

#include "ybe/group.hpp"
#include "ybe/solution.hpp"

namespace oracle {

using ybe::Element;

inline bool is_subgroup(ybe::FiniteGroup const& g, std::vector<Element> const& s) {
  std::vector<bool> in(g.order());
  for (auto x : s) in[x] = true;
  if (!in[0]) return false;
  for (auto a : s) {
    for (auto b : s) {
      if (!in[g.mul(a, b)]) return false;
    }
  }
  return true;
}

// Every subgroup, by scanning all subsets containing 0 (n <= 12).
inline std::vector<std::vector<Element>> subgroups(ybe::FiniteGroup const& g) {
  std::size_t n = g.order();
  std::vector<std::vector<Element>> out;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<Element> s{0};
    for (std::size_t i = 1; i < n; ++i) {
      if (mask >> (i - 1) & 1) s.push_back(Element(i));
    }
    if (n % s.size() == 0 && is_subgroup(g, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Number of automorphisms by trying every permutation (n <= 8).
inline std::size_t count_automorphisms(ybe::FiniteGroup const& g) {
  std::size_t n = g.order();
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    bool hom = true;
    for (Element a = 0; a < n && hom; ++a) {
      for (Element b = 0; b < n && hom; ++b) hom = p[g.mul(a, b)] == g.mul(p[a], p[b]);
    }
    count += hom;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// First triple violating the braid relation, composing maps on triples.
inline std::optional<std::array<Element, 3>> braid_failure(ybe::SolutionMap const& r) {
  using T = std::array<Element, 3>;
  auto r12 = [&](T t) {
    auto [a, b] = r(t[0], t[1]);
    return T{a, b, t[2]};
  };
  auto r23 = [&](T t) {
    auto [a, b] = r(t[1], t[2]);
    return T{t[0], a, b};
  };
  for (Element x = 0; x < r.size; ++x) {
    for (Element y = 0; y < r.size; ++y) {
      for (Element z = 0; z < r.size; ++z) {
        T t{x, y, z};
        if (r12(r23(r12(t))) != r23(r12(r23(t)))) return t;
      }
    }
  }
  return std::nullopt;
}

inline bool injective(std::vector<Element> const& v) {
  auto s = v;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace oracle
