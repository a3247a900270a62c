#pragma once

#include <span>
#include <vector>

#include "ybe/bracoid.hpp"
#include "ybe/group.hpp"

namespace ybe {

// Dot group, associative plus, every plus-row injective, and
//   x.(y+z) = x.y + x.(x^-1 + z)
// for all triples.
Report verify_semibrace(std::size_t order, std::span<Element const> dot,
                        std::span<Element const> plus);

// A left cancellative semibrace (G, +, .) sharing the indexing of (G,.).
class Semibrace {
 public:
  // Throws ConstructionFailed with the first failed check.
  static Semibrace make(FiniteGroup dot, Table plus);

  std::size_t order() const noexcept { return _dot.order(); }
  FiniteGroup const& dot() const noexcept { return _dot; }
  Table const& plus_table() const noexcept { return _plus; }
  Element add(Element x, Element y) const { return _plus[x * order() + y]; }

  friend bool operator==(Semibrace const& a, Semibrace const& b) {
    return a._dot == b._dot && a._plus == b._plus;
  }

 private:
  Semibrace(FiniteGroup dot, Table plus) : _dot(std::move(dot)), _plus(std::move(plus)) {}

  FiniteGroup _dot;
  Table _plus;
};

// x + y = y.
Semibrace trivial_semibrace(FiniteGroup const& g);

// x + y = y * x for a skew brace (G,*,.); the brace case.
Semibrace brace_semibrace(SkewBrace const& b);

// L_x(y) = x(x^-1 + y).
GroupMap l_map(Semibrace const& sb, Element x);

// Asserted: each L_x is a +-endomorphism and x -> L_x is a homomorphism.
// Reported only: "l-bijective".
Report check_l_maps(Semibrace const& sb);

struct Decomposition {
  std::vector<Element> h_part;  // G + e
  std::vector<Element> e_part;  // idempotents
};

// e in E; x in E iff x+e = e; x in E gives x+y = y; (G+e,+) a group;
// g = (g+e) + eps for a unique eps in E.
Report check_decomposition(Semibrace const& sb, Decomposition const& d);

// Throws InternalConsistency if check_decomposition fails.
Decomposition decompose(Semibrace const& sb);

// x + y = y lambda_{y^-1}(x). The result is verified, and E = S, G+e = H
// and the three-way idempotent test are asserted (InternalConsistency).
Semibrace bracoid_to_semibrace(ContainedBrace const& cb, LambdaRho const& lr);
Semibrace bracoid_to_semibrace(ContainedBrace const& cb);

// H = G+e, h * k = k + h, x . h = xh + e.
ContainedBrace semibrace_to_bracoid(Semibrace const& sb);

// E = S and G+e = H as sets, three-way agreement x in S <=> x+x = x <=>
// x+e = e, and the decomposition invariants.
Report check_correspondence(ContainedBrace const& cb, Semibrace const& sb);

bool same_tables(ContainedBrace const& a, ContainedBrace const& b);

// Composing the two conversions reproduces the input tables exactly.
bool roundtrip_check(ContainedBrace const& cb);
bool roundtrip_check(Semibrace const& sb);

}  // namespace ybe
