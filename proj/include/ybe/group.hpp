#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ybe/common.hpp"

namespace ybe {

// Largest group order accepted anywhere in the library.
inline constexpr std::size_t kMaxGroupOrder = 2048;

// Raw table diagnostics: latin-square, identity (at index 0), associativity
// and two-sided inverses. Used by the file verifiers.
Report check_group_table(std::size_t order, std::span<Element const> table,
                         bool check_associativity = true);

// A finite group on 0..n-1 given by its multiplication table; 0 is the
// identity. Immutable once built.
class FiniteGroup {
 public:
  FiniteGroup();

  // Validates the table and relabels a unique identity to index 0. Throws
  // NotLatinSquare, NoIdentity or NotAssociative naming the first offender.
  static FiniteGroup from_table(std::size_t order, Table table, std::string name = "G");

  // For products of already verified groups: the O(n^3) associativity scan
  // is skipped, the O(n^2) structural checks still run.
  static FiniteGroup trusted(std::size_t order, Table table, std::string name);

  std::size_t order() const noexcept { return _order; }
  std::string const& name() const noexcept { return _name; }
  Table const& table() const noexcept { return _table; }

  Element mul(Element a, Element b) const { return _table[a * _order + b]; }
  Element inv(Element a) const { return _inverse[a]; }
  Element conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }
  Element commutator(Element a, Element b) const {
    return mul(mul(a, b), mul(inv(a), inv(b)));
  }
  Element power(Element a, std::size_t k) const;
  std::size_t element_order(Element a) const;
  std::span<Element const> row(Element a) const {
    return {_table.data() + a * _order, _order};
  }

  bool is_abelian() const;
  FiniteGroup renamed(std::string name) const;

  friend bool operator==(FiniteGroup const& a, FiniteGroup const& b) {
    return a._order == b._order && a._table == b._table;
  }

 private:
  FiniteGroup(std::size_t order, Table table, std::string name, bool check_assoc);

  std::size_t _order;
  Table _table;
  std::vector<Element> _inverse;
  std::string _name;
};

struct Subgroup {
  std::vector<Element> elements;    // sorted, contains 0
  std::vector<Element> generators;  // may be empty

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(Element g) const;
  // Position of g in `elements`; g must be a member.
  Element position(Element g) const;

  friend bool operator==(Subgroup const& a, Subgroup const& b) {
    return a.elements == b.elements;
  }
};

// Homomorphism data: images[x] for x in the source group.
struct GroupMap {
  std::vector<Element> images;

  Element operator()(Element x) const { return images[x]; }
  std::size_t size() const noexcept { return images.size(); }

  friend bool operator==(GroupMap const&, GroupMap const&) = default;
};

GroupMap identity_map(std::size_t n);
// (f o g)(x) = f(g(x)).
GroupMap compose(GroupMap const& f, GroupMap const& g);

// Returns the first pair (x,y) with f(xy) != f(x)f(y), or nullopt.
std::optional<std::vector<Element>> homomorphism_violation(FiniteGroup const& source,
                                                           FiniteGroup const& target,
                                                           GroupMap const& f);
bool is_bijective(GroupMap const& f);
bool is_automorphism(FiniteGroup const& g, GroupMap const& f);

// Left action of a group on points 0..m-1; table[g * m + p] = g.p
struct GroupAction {
  std::size_t actor_order = 0;
  std::size_t points = 0;
  Table table;

  Element act(Element g, Element p) const { return table[g * points + p]; }

  friend bool operator==(GroupAction const&, GroupAction const&) = default;
};

// identity row, compatibility g.(h.p) = (gh).p
Report check_action(FiniteGroup const& g, GroupAction const& a);
std::vector<Element> orbit(GroupAction const& a, Element point);
bool is_transitive(GroupAction const& a);
// Asserts |orbit| * |stabilizer| = |G| (InternalConsistency otherwise).
Subgroup stabilizer(FiniteGroup const& g, GroupAction const& a, Element point);
GroupAction left_regular_action(FiniteGroup const& g);
// Restriction of an action to the elements of a subgroup, indexed by
// subgroup position.
GroupAction restrict_action(GroupAction const& a, Subgroup const& h);

bool is_prime(std::size_t p);

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup elementary_abelian(std::size_t p, std::size_t k);
// Dihedral group of order 2m: rotations 0..m-1, reflections m..2m-1.
FiniteGroup dihedral_group(std::size_t m);
FiniteGroup quaternion_group();
FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b);
FiniteGroup opposite_group(FiniteGroup const& g);

// Pairs (h,s) at index h*|S| + s with (h,s)(h',s') = (h alpha_s(h'), ss').
// alpha[s] must be an automorphism of H and s -> alpha[s] a homomorphism.
FiniteGroup semidirect_product(FiniteGroup const& h, FiniteGroup const& s,
                               std::vector<GroupMap> const& alpha);

// Deterministic breadth-first closure. Products are taken on the right by
// the generators, so elements appear in discovery order before sorting.
Subgroup subgroup_generated(FiniteGroup const& g, std::span<Element const> gens);
// Closure of `base` (already a subgroup, sorted) together with `extra`.
// Stops early and returns nullopt once the size would exceed `limit`.
std::optional<std::vector<Element>> closure_with(FiniteGroup const& g,
                                                 std::span<Element const> base,
                                                 std::span<Element const> gens,
                                                 std::size_t limit);
bool is_subgroup(FiniteGroup const& g, std::span<Element const> elements);
bool is_normal(FiniteGroup const& g, Subgroup const& s);
// The subgroup as a group in its own right, on positions 0..|S|-1.
FiniteGroup induced_group(FiniteGroup const& g, Subgroup const& s, std::string name);

// Greedy generating set: smallest element outside the span so far.
std::vector<Element> greedy_generators(FiniteGroup const& g);

}  // namespace ybe
