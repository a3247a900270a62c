#include <doctest.h>

#include "oracles.hpp"
#include "ybe/catalog.hpp"
#include "ybe/derive.hpp"

using namespace ybe;

namespace {

SolutionMap from_fn(std::size_t n, auto&& f, std::optional<std::vector<Element>> inv = {}) {
  SolutionMap r{n, Table(n * n), Table(n * n), "test", std::move(inv)};
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      auto [a, b] = f(x, y);
      r.left[x * n + y] = a;
      r.right[x * n + y] = b;
    }
  }
  return r;
}

std::vector<Element> inverses(FiniteGroup const& g) {
  std::vector<Element> v;
  for (Element x = 0; x < g.order(); ++x) v.push_back(g.inv(x));
  return v;
}

ContainedBrace brace_of(ExampleInstance const& ex) {
  auto s = contains_brace(ex.bracoid);
  REQUIRE(s.found());
  return *s.brace;
}

}  // namespace

TEST_CASE("flip and conjugation solutions") {
  auto flip = from_fn(5, [](Element x, Element y) { return std::pair{y, x}; });
  auto rep = check_braid(flip);
  CHECK(rep.braid.holds);
  CHECK(rep.involutive.holds);
  CHECK(rep.bijective.holds);
  CHECK(rep.left_nondegenerate.holds);
  CHECK(rep.right_nondegenerate.holds);
  CHECK_FALSE(oracle::braid_failure(flip));

  auto s3 = dihedral_group(3);
  auto conj = from_fn(6, [&](Element x, Element y) {
    return std::pair{s3.mul(s3.mul(x, y), s3.inv(x)), x};
  });
  auto crep = check_braid(conj);
  CHECK(crep.braid.holds);
  CHECK_FALSE(crep.involutive.holds);
  CHECK_FALSE(oracle::braid_failure(conj));
}

TEST_CASE("braid failure witnesses") {
  auto c3 = cyclic_group(3);
  auto bad = from_fn(3, [&](Element x, Element y) { return std::pair{y, c3.mul(x, y)}; });
  auto rep = check_braid(bad, ScanMode::Full);
  auto expected = oracle::braid_failure(bad);
  REQUIRE(expected);
  CHECK_FALSE(rep.braid.holds);
  CHECK(rep.braid.witness == std::vector<Element>(expected->begin(), expected->end()));
  CHECK(rep.triples_checked == 27);
  CHECK_FALSE(rep.braid_failures.empty());
  for (auto t : rep.braid_failures) {
    using T = std::array<Element, 3>;
    auto r12 = [&](T u) {
      auto [a, b] = bad(u[0], u[1]);
      return T{a, b, u[2]};
    };
    auto r23 = [&](T u) {
      auto [a, b] = bad(u[1], u[2]);
      return T{u[0], a, b};
    };
    CHECK(r12(r23(r12(t))) != r23(r12(r23(t))));
  }
}

TEST_CASE("semibrace solutions") {
  auto s3 = dihedral_group(3);
  auto triv = solution_from_semibrace(trivial_semibrace(s3));
  for (Element x = 0; x < 6; ++x) {
    for (Element y = 0; y < 6; ++y) CHECK(triv(x, y) == std::pair{s3.mul(x, y), Element(0)});
  }

  for (auto const& b : {trivial_brace(s3), *semidirect_example(3, 2).brace,
                        *abelianmap_example(3, 5).brace}) {
    auto from_sb = solution_from_semibrace(brace_semibrace(b));
    CHECK(solutions_equal(from_sb, brace_solution(opposite_brace(b))));
  }

  auto cb = brace_of(semidirect_example(3, 2));
  auto r = solution_from_semibrace(bracoid_to_semibrace(cb));
  auto rep = check_braid(r);
  CHECK(rep.braid.holds);
  CHECK(rep.left_nondegenerate.holds);
  CHECK_FALSE(rep.right_nondegenerate.holds);
  CHECK_FALSE(oracle::braid_failure(r));
}

TEST_CASE("bracoid solutions") {
  auto c4 = cyclic_group(4);
  auto cb = brace_of(trivial_brace_example(4));
  auto r = solution_from_bracoid(cb);
  auto tilde = tilde_solution_from_bracoid(cb);
  for (Element x = 0; x < 4; ++x) {
    for (Element y = 0; y < 4; ++y) {
      CHECK(r(x, y) == std::pair{y, x});
      CHECK(tilde(x, y) == std::pair{y, c4.mul(c4.inv(y), c4.mul(x, y))});
    }
  }

  for (auto const& ex : {semidirect_example(3, 2), abelianmap_example(3, 5), cyclic_pq_example(5, 2)}) {
    auto search = contains_brace(ex.bracoid);
    if (!search.found()) continue;
    auto const& c = *search.brace;
    LambdaRho lr(c);
    auto rb = solution_from_bracoid(c, lr);
    CHECK(solutions_equal(rb, solution_from_semibrace(bracoid_to_semibrace(c, lr))));
    auto rt = tilde_solution_from_bracoid(c, lr);
    CHECK(solutions_equal(rt, tau_iota_conjugate(rb)));
    auto rep = check_braid(rt);
    CHECK(rep.braid.holds);
    CHECK(rep.right_nondegenerate.holds);
    if (c.g.order() <= 20) CHECK_FALSE(oracle::braid_failure(rt));
  }
}

TEST_CASE("conjugation by involutions") {
  auto s3 = dihedral_group(3);
  auto cb = brace_of(semidirect_example(3, 2));
  auto r = solution_from_bracoid(cb);
  auto tau = conjugate_solution(r, Involution::Tau);
  CHECK(solutions_equal(conjugate_solution(tau, Involution::Tau), r));
  CHECK(solutions_equal(conjugate_solution(conjugate_solution(r, Involution::Iota), Involution::Iota), r));
  auto rl = check_braid(r);
  auto tl = check_braid(tau);
  CHECK(tl.braid.holds);
  CHECK(rl.left_nondegenerate.holds == tl.right_nondegenerate.holds);
  CHECK(rl.right_nondegenerate.holds == tl.left_nondegenerate.holds);

  auto flip = from_fn(6, [](Element x, Element y) { return std::pair{y, x}; });
  try {
    conjugate_solution(flip, Involution::Iota);
    CHECK(false);
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NoInverseCarrier);
  }
  flip.inverses = inverses(s3);
  CHECK(solutions_equal(conjugate_solution(flip, Involution::Iota), flip));
}

TEST_CASE("restriction") {
  auto flip = from_fn(6, [](Element x, Element y) { return std::pair{y, x}; });
  std::vector<Element> sub{1, 3, 4};
  auto res = restrict_solution(flip, sub);
  REQUIRE(std::holds_alternative<SolutionMap>(res));
  auto const& small = std::get<SolutionMap>(res);
  CHECK(small.size == 3);
  CHECK(small(0, 2) == std::pair{Element(2), Element(0)});

  auto c6 = cyclic_group(6);
  auto shift = from_fn(6, [&](Element x, Element y) { return std::pair{c6.mul(x, y), Element(0)}; });
  auto nc = restrict_solution(shift, sub);
  REQUIRE(std::holds_alternative<NotClosed>(nc));

  auto other = from_fn(3, [](Element x, Element y) { return std::pair{y, x}; });
  CHECK_THROWS_AS(solutions_equal(flip, other), Error);
}

TEST_CASE("solution isomorphism") {
  auto c4 = cyclic_group(4);
  auto a = from_fn(4, [&](Element x, Element y) { return std::pair{y, c4.mul(c4.inv(y), c4.mul(x, y))}; });
  auto flip = from_fn(4, [](Element x, Element y) { return std::pair{y, x}; });
  auto phi = find_solution_isomorphism(a, flip);
  CHECK(phi);

  // relabel a conjugation solution by a fixed permutation
  auto s3 = dihedral_group(3);
  auto conj = from_fn(6, [&](Element x, Element y) {
    return std::pair{s3.mul(s3.mul(x, y), s3.inv(x)), x};
  });
  std::vector<Element> p{3, 0, 5, 1, 4, 2}, pinv(6);
  for (Element i = 0; i < 6; ++i) pinv[p[i]] = i;
  auto relabeled = from_fn(6, [&](Element x, Element y) {
    auto [u, v] = conj(pinv[x], pinv[y]);
    return std::pair{p[u], p[v]};
  });
  auto found = find_solution_isomorphism(conj, relabeled);
  REQUIRE(found);
  for (Element x = 0; x < 6; ++x) {
    for (Element y = 0; y < 6; ++y) {
      auto [u, v] = conj(x, y);
      CHECK(relabeled((*found)[x], (*found)[y]) == std::pair{(*found)[u], (*found)[v]});
    }
  }
  auto triv = from_fn(6, [&](Element x, Element y) { return std::pair{s3.mul(x, y), Element(0)}; });
  CHECK_FALSE(find_solution_isomorphism(conj, triv));
}
