#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ybe/automorphism.hpp"
#include "ybe/brace.hpp"
#include "ybe/factorization.hpp"
#include "ybe/group.hpp"

namespace ybe {

// (G, ., N, *, .) with G acting transitively on the elements of N. The
// identity of N is element 0.
struct SkewBracoid {
  FiniteGroup g;
  FiniteGroup n;
  GroupAction act;
};

// Action axioms, transitivity, and
//   x.(a * b) = (x.a) * (x.e)^-1 * (x.b)
// for all x in G and a, b in N.
Report verify_bracoid(FiniteGroup const& g, FiniteGroup const& n, GroupAction const& act);

// Throws ConstructionFailed on the first failed check.
SkewBracoid make_bracoid(FiniteGroup g, FiniteGroup n, GroupAction act);

// (G,.) acting on (G,*) by left multiplication.
SkewBracoid brace_as_bracoid(SkewBrace const& b);

// (G,.) acting on the *-cosets G/S by left translation; the coset of the
// identity is element 0 and the others are numbered by least member.
// Throws NotStrongLeftIdeal.
SkewBracoid from_strong_left_ideal(SkewBrace const& b, Subgroup const& s);

// Natural action of a transitive subgroup J of Hol(N). The multiplicative
// group is J on positions within `j`. Throws NotTransitive.
SkewBracoid from_holomorph_subgroup(Holomorph const& hol, Subgroup const& j);

// A bracoid containing a brace, transported onto a subgroup H of G that
// acts regularly. The additive group lives on H-positions (0..|H|-1), and
// so does the transported action.
struct ContainedBrace {
  FiniteGroup g;
  Subgroup h;
  Subgroup s;                 // Stab(e)
  FiniteGroup dot_h;          // (H,.) on H-positions
  FiniteGroup star_h;         // (H,*_H) on H-positions
  GroupAction act_h;          // G acting on H-positions
  std::vector<Element> to_n;  // h -> h.e_N in the original N

  Element h_element(Element pos) const { return h.elements[pos]; }
  SkewBracoid bracoid() const { return SkewBracoid{g, star_h, act_h}; }
};

// Bracoid axioms, Stab(e) = S, exact factorization G = HS, regularity of H
// and h (.)_H e = h.
Report check_contained_brace(ContainedBrace const& cb);

// Builds the contained brace directly on H (to_n is the identity).
// Throws ConstructionFailed.
ContainedBrace make_contained_brace(FiniteGroup g, Subgroup h, FiniteGroup star_h,
                                    GroupAction act_h);

// Transports * and the action from N onto H through h -> h.e_N. Throws
// NotRegular when H does not act regularly on N.
ContainedBrace transport(SkewBracoid const& b, Subgroup const& h);

struct BraceSearch {
  Subgroup stabilizer;
  std::vector<Subgroup> complements;
  std::optional<ContainedBrace> brace;  // built from the first complement

  bool found() const { return brace.has_value(); }
};

// Exhaustive: `brace` is empty exactly when Stab(e) has no complement.
BraceSearch contains_brace(SkewBracoid const& b);

// (H, *_H, .) as a skew brace on H-positions.
SkewBrace contained_skew_brace(ContainedBrace const& cb);

// gamma_x(h) = (x.e)^-* * (x.h) on H-positions.
GroupMap bracoid_gamma(ContainedBrace const& cb, Element x);

// Automorphisms of (H,*_H), x -> gamma_x a homomorphism, and agreement
// with the gamma function of the contained brace on H.
Report check_bracoid_gamma(ContainedBrace const& cb);

// lambda_x(y) = gamma_x(y.e) with values in H, and
// rho_y(x) = lambda_x(y)^-1 x y with values in G.
class LambdaRho {
 public:
  explicit LambdaRho(ContainedBrace const& cb);

  std::size_t order() const noexcept { return _n; }
  // H-position of lambda_x(y).
  Element lambda_pos(Element x, Element y) const { return _lambda[x * _n + y]; }
  // lambda_x(y) as an element of G.
  Element lambda(Element x, Element y) const { return _h[lambda_pos(x, y)]; }
  Element rho(Element y, Element x) const { return _rho[y * _n + x]; }

 private:
  std::size_t _n;
  std::vector<Element> _h;
  Table _lambda;  // [x][y]
  Table _rho;     // [y][x]
};

struct IdentityCheckOptions {
  std::size_t exhaustive_limit = 24;  // |G| at or below: all triples
  std::size_t samples = 10000;        // otherwise: seeded random triples
  std::uint64_t seed = 0;
};

//   lambda_x(e) = e, rho_e = id,
//   lambda_xy = lambda_x lambda_y, rho_xy = rho_y rho_x,
//   rho_x rho_{x^-1} = rho_{x^-1} rho_x = id,
//   lambda_x(yz) = lambda_x(y) lambda_{rho_y(x)}(z).
Report check_lambda_rho(ContainedBrace const& cb, LambdaRho const& lr,
                        IdentityCheckOptions const& options = {});

// Builds the tables and asserts check_lambda_rho (InternalConsistency).
LambdaRho lambda_rho(ContainedBrace const& cb, IdentityCheckOptions const& options = {});

struct MatchedPairData {
  MatchedPair pair;
  FiniteGroup product;          // H |><| S
  Holomorph hol;                // Hol(H, *_H)
  std::vector<Element> theta;   // H |><| S -> Hol(H, *_H)
  Subgroup image;               // Im(theta)
  Subgroup regular_part;        // theta(H |><| {e})
};

// theta(h,s)[k] = h . ^s k. Verifies that S acts on (H,*_H) by
// automorphisms, that theta is a homomorphism into Hol(H,*_H) and that
// theta(H |><| {e}) is regular; any failure is InternalConsistency.
MatchedPairData to_matched_pair(ContainedBrace const& cb, HolomorphLimits limits = {});

}  // namespace ybe
