#pragma once

#include <vector>

#include "ybe/group.hpp"

namespace ybe {

// All subgroups H with H n S = {e} and |H||S| = |G|, in lexicographic order
// of their sorted element lists. Exhaustive: an empty result certifies that
// S has no complement.
std::vector<Subgroup> find_complements(FiniteGroup const& g, Subgroup const& s);

// Every subgroup exactly once, in lexicographic order of element lists.
std::vector<Subgroup> all_subgroups(FiniteGroup const& g);

bool exact_factorization(FiniteGroup const& g, Subgroup const& h, Subgroup const& s);

// Unique factorization g = h s for an exact factorization G = HS.
struct Factorization {
  Subgroup h;
  Subgroup s;
  std::vector<Element> h_part;  // H-position of the H-factor of g
  std::vector<Element> s_part;  // S-position of the S-factor of g
};

Factorization factorize(FiniteGroup const& g, Subgroup const& h, Subgroup const& s);

// Matched pair of groups on positions: left[s*|H| + h] = ^s h and
// right[s*|H| + h] = s^h.
struct MatchedPair {
  FiniteGroup h;
  FiniteGroup s;
  Table left;
  Table right;

  Element left_act(Element s_, Element h_) const { return left[s_ * h.order() + h_]; }
  Element right_act(Element s_, Element h_) const { return right[s_ * h.order() + h_]; }
};

// Action laws plus the two compatibility laws
//   ^s(h1 h2) = ^s h1 . ^(s^h1) h2,   (s1 s2)^h = s1^(^s2 h) . s2^h.
Report check_matched_pair(MatchedPair const& mp);

// Reads ^s h and s^h off s.h = (^s h)(s^h) in G.
MatchedPair matched_pair_from_factorization(FiniteGroup const& g, Subgroup const& h,
                                            Subgroup const& s);

// H |><| S on pairs (h,s) at index h*|S| + s with
// (h,s)(h',s') = (h ^s h', s^h' s'). Throws CompatibilityViolated.
FiniteGroup bicrossed_product(MatchedPair const& mp);

// Checks that (h,s) -> hs is an isomorphism from `product` onto G.
bool is_factorization_isomorphism(FiniteGroup const& g, Subgroup const& h, Subgroup const& s,
                                  FiniteGroup const& product);

}  // namespace ybe
