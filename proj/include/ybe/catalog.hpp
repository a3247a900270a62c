#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybe/automorphism.hpp"
#include "ybe/brace.hpp"
#include "ybe/bracoid.hpp"
#include "ybe/rng.hpp"

namespace ybe {

struct ExampleInstance {
  std::string name;  // label used for files, e.g. "semidirect-3-2"
  std::optional<SkewBrace> brace;
  std::optional<Subgroup> ideal;                // quotiented strong left ideal
  std::optional<Subgroup> expected_complement;  // complement named by the example
  SkewBracoid bracoid;
  std::size_t attempts = 0;                     // generator pairs tried (gl3f2)
};

inline constexpr std::size_t kGl3SearchAttempts = 1000000;

// trivial-brace <n> [k]: k = 0 cyclic C_n, k = 1 dihedral of order n.
ExampleInstance trivial_brace_example(std::size_t n, std::size_t kind = 0);

// C_n x| C_m with the generator of C_m acting by the least unit u > 1 of
// order dividing m (inversion for n = 3, m = 2); quotient by {e} x C_m.
ExampleInstance semidirect_example(std::size_t n, std::size_t m);

// C_pq x| (C_2 x C_2), y and z inverting x, psi(x^i y^j z^k) = y^j z^k,
// quotient by <x^q, z>. Index of x^i y^j z^k is 4i + j + 2k.
ExampleInstance abelianmap_example(std::size_t p, std::size_t q);

// Seeded search in Hol(C_2^3) for a transitive J of order 168 with
// J n N = {e}, so that J embeds in GL_3(F_2). Throws SearchExhausted.
ExampleInstance gl3f2_example(std::uint64_t seed,
                              std::size_t max_attempts = kGl3SearchAttempts);

// N = C_pq, J = <(sigma, id), (tau, alpha)> in Hol(N) with alpha of order
// q^2 fixing tau. Needs p = 1 mod q^2.
ExampleInstance cyclic_pq_example(std::size_t p, std::size_t q);

// Dispatch on a catalog name; throws UnknownExample or InvalidArgument.
ExampleInstance build_example(std::string const& name, std::vector<std::size_t> const& params,
                              std::uint64_t seed = 0);

std::vector<std::string> example_names();

// Small groups (order <= 16) used for random instances.
std::vector<FiniteGroup> small_groups(std::size_t max_order = 16);

// Seeded source of random skew braces of order <= 16 (trivial,
// semidirect, abelian-map, or from a regular subgroup of a holomorph) and
// of bracoids built from them. Holomorph searches are cached per instance.
class BraceSampler {
 public:
  explicit BraceSampler(std::uint64_t seed);

  SkewBrace brace(std::string* label = nullptr);
  // The brace as a bracoid or, with even odds, its quotient by a random
  // nontrivial strong left ideal that has a complement.
  SkewBracoid bracoid(std::string* label = nullptr);

 private:
  std::vector<Subgroup> const& regular_subgroups(std::size_t group_index);

  Rng _rng;
  std::vector<FiniteGroup> _groups;
  std::vector<std::optional<std::pair<Holomorph, std::vector<Subgroup>>>> _regular;
};

}  // namespace ybe
