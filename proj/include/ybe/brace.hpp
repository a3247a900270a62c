#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ybe/automorphism.hpp"
#include "ybe/group.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// psi is an endomorphism of (G,.) with abelian image; phi(x) = x psi(x)^-1.
struct AbelianMapData {
  GroupMap psi;
  std::vector<Element> phi;
};

// Raw-table verifier: both tables are groups with identity 0 and
//   x.(y*z) = (x.y) * x^-* * (x.z)
// for all triples (first failing triple reported).
Report verify_skew_brace(std::size_t order, std::span<Element const> star,
                         std::span<Element const> dot);

// A skew brace (G, *, .) with the gamma table
// gamma_x(y) = x^-* * (x.y) precomputed.
class SkewBrace {
 public:
  // Throws ConstructionFailed with the first failed check.
  static SkewBrace make(FiniteGroup star, FiniteGroup dot,
                        std::optional<AbelianMapData> abelian_map = std::nullopt);

  std::size_t order() const noexcept { return _dot.order(); }
  FiniteGroup const& star() const noexcept { return _star; }
  FiniteGroup const& dot() const noexcept { return _dot; }
  Element gamma(Element x, Element y) const { return _gamma[x * order() + y]; }
  std::optional<AbelianMapData> const& abelian_map() const noexcept { return _abelian; }

 private:
  SkewBrace(FiniteGroup star, FiniteGroup dot, std::optional<AbelianMapData> abelian);

  FiniteGroup _star;
  FiniteGroup _dot;
  Table _gamma;
  std::optional<AbelianMapData> _abelian;
};

SkewBrace trivial_brace(FiniteGroup const& g);

// (G, *^op, .) is again a skew brace.
SkewBrace opposite_brace(SkewBrace const& b);

// G = H x S with (h,s)*(h',s') = (hh', ss') and
// (h,s).(h',s') = (h alpha_s(h'), ss').
SkewBrace semidirect_brace(FiniteGroup const& h, FiniteGroup const& s,
                           std::vector<GroupMap> const& alpha);

// x * y = x psi(x)^-1 y psi(x), re-verified before it is returned.
// Throws NotHomomorphism, NotAbelianImage or ConstructionFailed.
SkewBrace abelian_map_brace(FiniteGroup const& g, GroupMap const& psi);

GroupMap brace_gamma(SkewBrace const& b, Element x);

// gamma_x in Aut(G,*) for every x and x -> gamma_x a homomorphism.
Report check_brace_gamma(SkewBrace const& b);

// Definitional test: (S,*) normal in (G,*) and gamma_x(S) in S. For
// abelian-map braces the commutator criterion is evaluated as well and a
// disagreement throws InternalConsistency.
bool is_strong_left_ideal(SkewBrace const& b, Subgroup const& s);

// [G, phi(S)] <= S, commutators in (G,.). Needs abelian-map data.
bool commutator_criterion(SkewBrace const& b, Subgroup const& s);

// r(x,y) = (gamma_x(y), gamma_x(y)^-1 x y).
SolutionMap brace_solution(SkewBrace const& b);

struct HolomorphImage {
  Holomorph hol;
  Subgroup image;
};

// Left regular representation of (G,.) inside Hol(G,*); verified regular.
HolomorphImage regular_rep_in_holomorph(SkewBrace const& b, HolomorphLimits limits = {});

}  // namespace ybe
