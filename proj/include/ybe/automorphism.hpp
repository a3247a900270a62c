#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ybe/group.hpp"

namespace ybe {

// Default bound on |G| for automorphism searches.
inline constexpr std::size_t kAutomorphismCap = 64;

// Extends gens[i] -> images[i] to a homomorphism source -> target, or
// returns nullopt if the assignment is inconsistent. The generators must
// generate the source group.
std::optional<GroupMap> extend_homomorphism(FiniteGroup const& source,
                                            FiniteGroup const& target,
                                            std::span<Element const> gens,
                                            std::span<Element const> images);

// Backtracking over generator images (greedy generating set, candidates in
// ascending order). Calls `visit` for every homomorphism found; stop early
// by returning false.
void for_each_endomorphism(FiniteGroup const& g, bool injective_only,
                           std::function<bool(GroupMap const&)> const& visit);

struct AutomorphismGroup {
  FiniteGroup group;             // product is composition: (a*b)(x) = a(b(x))
  std::vector<GroupMap> maps;    // maps[i] realizes element i; maps[0] = id
  std::map<std::vector<Element>, Element> index;

  std::optional<Element> find(GroupMap const& f) const;
  Element index_of(GroupMap const& f) const;
};

// Throws CapExceeded when |G| > cap.
AutomorphismGroup automorphism_group(FiniteGroup const& g, std::size_t cap = kAutomorphismCap);

struct HolomorphLimits {
  std::size_t aut_cap = kAutomorphismCap;
  std::size_t max_order = kMaxGroupOrder;
};

// Hol(N) = N x| Aut(N) on pairs (h, a) at index h*|Aut| + a, acting on N by
// (h, a).k = h a(k).
struct Holomorph {
  FiniteGroup base;
  AutomorphismGroup aut;
  FiniteGroup group;
  GroupAction action;

  Element element(Element translation, Element aut_index) const {
    return Element(translation * aut.maps.size() + aut_index);
  }
  Element translation(Element x) const { return Element(x / aut.maps.size()); }
  Element aut_index(Element x) const { return Element(x % aut.maps.size()); }
  // Holomorph element acting on N as the permutation `perm`, if there is one.
  std::optional<Element> find_permutation(std::span<Element const> perm) const;
  // Pure translations {(h, id)}.
  Subgroup translations() const;
};

Holomorph holomorph(FiniteGroup const& g, HolomorphLimits limits = {});

}  // namespace ybe
