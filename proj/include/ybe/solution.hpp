#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ybe/common.hpp"

namespace ybe {

// Candidate set-theoretic solution r(x,y) = (left[x*n+y], right[x*n+y]).
struct SolutionMap {
  std::size_t size = 0;
  Table left;
  Table right;
  std::string provenance;
  // Group inverses of the carrier, required for iota-conjugation.
  std::optional<std::vector<Element>> inverses;

  std::pair<Element, Element> operator()(Element x, Element y) const {
    return {left[x * size + y], right[x * size + y]};
  }
};

struct Property {
  bool holds = true;
  std::vector<Element> witness;
};

struct SolutionReport {
  Property braid;                 // witness (x,y,z)
  Property bijective;             // witness (x,y,x',y') colliding, or empty
  Property involutive;            // witness (x,y)
  Property left_nondegenerate;    // witness (x,y,y') with lambda_x(y)=lambda_x(y')
  Property right_nondegenerate;   // witness (y,x,x') with rho_y(x)=rho_y(x')
  std::vector<std::array<Element, 3>> braid_failures;  // full scan only
  std::size_t triples_checked = 0;
};

enum class ScanMode { FirstFailure, Full };

// Exhaustive over all n^3 triples: (r x id)(id x r)(r x id) against
// (id x r)(r x id)(id x r).
SolutionReport check_braid(SolutionMap const& r, ScanMode mode = ScanMode::FirstFailure);

// iota(x,y) = (x^-1, y^-1), tau(x,y) = (y,x).
enum class Involution { Iota, Tau };

// Returns c r c for the chosen involution c. Iota needs r.inverses
// (NoInverseCarrier otherwise).
SolutionMap conjugate_solution(SolutionMap const& r, Involution by);

struct NotClosed {
  Element x;
  Element y;
};

// Restriction to a sorted subset, re-indexed by subset position.
std::variant<SolutionMap, NotClosed> restrict_solution(SolutionMap const& r,
                                                       std::span<Element const> subset);

// Entry-wise equality; SizeMismatch if the sizes differ.
bool solutions_equal(SolutionMap const& a, SolutionMap const& b);

// Largest size accepted by find_solution_isomorphism.
inline constexpr std::size_t kSolutionIsomorphismCap = 16;

// Bijection phi with (phi x phi) o a = b o (phi x phi), by backtracking.
std::optional<std::vector<Element>> find_solution_isomorphism(SolutionMap const& a,
                                                              SolutionMap const& b);

}  // namespace ybe
