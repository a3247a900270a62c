#include <doctest.h>

#include "oracles.hpp"
#include "ybe/bracoid.hpp"
#include "ybe/catalog.hpp"

using namespace ybe;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.code();
  }
  return ErrorCode::InternalConsistency;
}

// lambda_x(y) straight from the untransported bracoid: the element h of H
// with h.e = (x.e)^-1 * (x.(y.e)).
Element lambda_oracle(SkewBracoid const& b, Subgroup const& h, Element x, Element y) {
  Element target = b.n.mul(b.n.inv(b.act.act(x, 0)), b.act.act(x, b.act.act(y, 0)));
  for (Element k : h.elements) {
    if (b.act.act(k, 0) == target) return k;
  }
  return Element(-1);
}

}  // namespace

TEST_CASE("verify_bracoid") {
  auto s3 = dihedral_group(3);
  CHECK(verify_bracoid(s3, s3, left_regular_action(s3)).passed());

  auto ex = cyclic_pq_example(5, 2);
  CHECK(verify_bracoid(ex.bracoid.g, ex.bracoid.n, ex.bracoid.act).passed());

  // permuting one action row breaks the axioms
  auto act = ex.bracoid.act;
  std::swap(act.table[3 * act.points + 1], act.table[3 * act.points + 2]);
  CHECK_FALSE(verify_bracoid(ex.bracoid.g, ex.bracoid.n, act).passed());

  // degenerate |N| = 1
  GroupAction point{6, 1, Table(6, 0)};
  CHECK(verify_bracoid(s3, cyclic_group(1), point).passed());
}

TEST_CASE("quotients by strong left ideals") {
  auto t = trivial_brace(dihedral_group(3));
  auto same = from_strong_left_ideal(t, Subgroup{{0}, {}});
  CHECK(same.n == t.star());
  CHECK(same.act == left_regular_action(t.dot()));

  auto ex24 = semidirect_example(3, 2);
  CHECK(ex24.bracoid.n.order() == 3);
  auto ex27 = abelianmap_example(3, 5);
  CHECK(ex27.bracoid.n.order() == 10);
  CHECK(stabilizer(ex27.bracoid.g, ex27.bracoid.act, 0) == *ex27.ideal);

  auto b = *ex24.brace;
  // index h*2 + s: {0,2,4} is the normal C3, {0,3} a non-normal reflection
  CHECK(is_strong_left_ideal(b, Subgroup{{0, 2, 4}, {}}));
  CHECK_FALSE(is_strong_left_ideal(b, Subgroup{{0, 3}, {}}));
  CHECK(code_of([&] { from_strong_left_ideal(b, Subgroup{{0, 3}, {}}); }) ==
        ErrorCode::NotStrongLeftIdeal);
}

TEST_CASE("holomorph subgroups") {
  auto hol = holomorph(cyclic_group(6));
  auto tr = from_holomorph_subgroup(hol, hol.translations());
  CHECK(stabilizer(tr.g, tr.act, 0).size() == 1);
  CHECK(code_of([&] {
          Subgroup aut;
          for (Element a = 0; a < hol.aut.maps.size(); ++a) aut.elements.push_back(hol.element(0, a));
          from_holomorph_subgroup(hol, aut);
        }) == ErrorCode::NotTransitive);

  auto ex = cyclic_pq_example(5, 2);
  CHECK(ex.bracoid.g.order() == 20);
  CHECK(ex.bracoid.n.order() == 10);
  CHECK(stabilizer(ex.bracoid.g, ex.bracoid.act, 0).size() == 2);
}

TEST_CASE("contains_brace") {
  auto b = brace_as_bracoid(trivial_brace(dihedral_group(4)));
  auto found = contains_brace(b);
  REQUIRE(found.found());
  CHECK(found.brace->h.size() == 8);

  auto none = contains_brace(cyclic_pq_example(5, 2).bracoid);
  CHECK_FALSE(none.found());
  CHECK(none.complements.empty());
  CHECK(none.stabilizer.size() == 2);

  auto gl = contains_brace(gl3f2_example(1).bracoid);
  REQUIRE(gl.found());
  CHECK(gl.stabilizer.size() == 21);
  CHECK(gl.brace->h.size() == 8);
  // (H, *_H) is elementary abelian of order 8
  for (Element k = 1; k < 8; ++k) CHECK(gl.brace->star_h.element_order(k) == 2);
  CHECK(gl.brace->star_h.is_abelian());
}

TEST_CASE("transport") {
  auto ex = semidirect_example(3, 2);
  auto cb = transport(ex.bracoid, *ex.expected_complement);
  CHECK(check_contained_brace(cb).passed());
  CHECK(cb.star_h.element_order(1) == 3);  // cyclic of order 3

  auto s3 = dihedral_group(3);
  auto b = brace_as_bracoid(trivial_brace(s3));
  std::vector<Element> all{0, 1, 2, 3, 4, 5};
  auto same = transport(b, Subgroup{all, {}});
  CHECK(same.star_h == s3);
  CHECK(same.act_h == left_regular_action(s3));

  CHECK(code_of([&] { transport(ex.bracoid, Subgroup{{0, 1}, {}}); }) == ErrorCode::NotRegular);
}

TEST_CASE("bracoid gamma") {
  auto ex = semidirect_example(3, 2);
  auto cb = *contains_brace(ex.bracoid).brace;
  CHECK(check_bracoid_gamma(cb).passed());
  for (Element s : cb.s.elements) {
    auto g = bracoid_gamma(cb, s);
    for (Element k = 0; k < cb.h.size(); ++k) CHECK(g(k) == cb.act_h.act(s, k));
  }
  CHECK(bracoid_gamma(cb, 0) == identity_map(cb.h.size()));
}

TEST_CASE("lambda and rho") {
  for (auto const& ex : {semidirect_example(3, 2), semidirect_example(7, 3),
                         trivial_brace_example(8, 1), abelianmap_example(3, 5)}) {
    auto search = contains_brace(ex.bracoid);
    REQUIRE(search.found());
    auto const& cb = *search.brace;
    auto lr = lambda_rho(cb);
    auto const& g = cb.g;
    std::size_t n = g.order();
    for (Element x = 0; x < n; ++x) {
      CHECK(lr.lambda(x, 0) == 0);
      CHECK(lr.rho(0, x) == x);
      for (Element y = 0; y < n; ++y) {
        CHECK(lr.lambda(x, y) == lambda_oracle(ex.bracoid, cb.h, x, y));
        CHECK(lr.rho(y, x) == g.mul(g.inv(lr.lambda(x, y)), g.mul(x, y)));
      }
    }
    if (n > 24) continue;
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          CHECK(lr.lambda(g.mul(x, y), z) == lr.lambda(x, lr.lambda(y, z)));
          CHECK(lr.rho(g.mul(x, y), z) == lr.rho(y, lr.rho(x, z)));
          CHECK(lr.lambda(x, g.mul(y, z)) ==
                g.mul(lr.lambda(x, y), lr.lambda(lr.rho(y, x), z)));
        }
      }
    }
  }

  auto s3 = dihedral_group(3);
  auto cb = *contains_brace(brace_as_bracoid(trivial_brace(s3))).brace;
  LambdaRho lr(cb);
  for (Element x = 0; x < 6; ++x) {
    for (Element y = 0; y < 6; ++y) {
      CHECK(lr.lambda(x, y) == y);
      CHECK(lr.rho(y, x) == s3.mul(s3.inv(y), s3.mul(x, y)));
    }
  }
}

TEST_CASE("sampled identity checks") {
  auto gl = *contains_brace(gl3f2_example(1).bracoid).brace;
  auto lr = LambdaRho(gl);
  auto rep = check_lambda_rho(gl, lr, {24, 10000, 7});
  CHECK(rep.passed());
  CHECK(rep.find("lambda-cocycle"));
}

TEST_CASE("matched pair and theta") {
  auto s3 = dihedral_group(3);
  auto cb = *contains_brace(brace_as_bracoid(trivial_brace(s3))).brace;
  auto mp = to_matched_pair(cb);
  // S trivial: theta is the left regular representation
  for (Element h = 0; h < 6; ++h) {
    for (Element k = 0; k < 6; ++k) {
      CHECK(mp.hol.action.act(mp.theta[h], k) == s3.mul(h, k));
    }
  }

  auto ex = semidirect_example(3, 2);
  auto cb24 = *contains_brace(ex.bracoid).brace;
  auto mp24 = to_matched_pair(cb24);
  // S acts on H = C3 by inversion
  CHECK(mp24.pair.left_act(1, 1) == 2);

  auto gl = *contains_brace(gl3f2_example(1).bracoid).brace;
  auto mpg = to_matched_pair(gl);
  CHECK(mpg.product.order() == 168);
  CHECK(mpg.image.size() == 168);
  CHECK(is_transitive(restrict_action(mpg.hol.action, mpg.image)));
  CHECK(mpg.regular_part.size() == 8);
}
