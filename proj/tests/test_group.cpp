#include <doctest.h>

#include "oracles.hpp"
#include "ybe/factorization.hpp"
#include "ybe/group.hpp"

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

}  // namespace

TEST_CASE("group_from_table") {
  auto c2 = FiniteGroup::from_table(2, {0, 1, 1, 0});
  CHECK(c2.order() == 2);
  CHECK(c2.mul(1, 1) == 0);

  Table t3;
  for (Element i = 0; i < 3; ++i) {
    for (Element j = 0; j < 3; ++j) t3.push_back((i + j) % 3);
  }
  CHECK(FiniteGroup::from_table(3, t3) == cyclic_group(3));

  CHECK(code_of([] { FiniteGroup::from_table(2, {0, 1, 1, 1}); }) == ErrorCode::NotLatinSquare);

  // a loop of order 5 with x^2 = e for all x cannot be a group
  Table loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK(code_of([&] { FiniteGroup::from_table(5, loop); }) == ErrorCode::NotAssociative);
  auto rep = check_group_table(5, loop);
  CHECK(rep.find("latin-square")->passed);
  CHECK_FALSE(rep.find("associativity")->passed);
  CHECK(rep.find("associativity")->witness.size() == 3);

  // identity at index 1 is relabeled to 0
  auto swapped = FiniteGroup::from_table(2, {1, 0, 0, 1});
  CHECK(swapped.table() == Table{0, 1, 1, 0});
}

TEST_CASE("cyclic and elementary abelian groups") {
  CHECK(cyclic_group(1).order() == 1);
  auto c3 = cyclic_group(3);
  CHECK(std::vector<Element>(c3.row(1).begin(), c3.row(1).end()) == std::vector<Element>{1, 2, 0});
  auto c10 = cyclic_group(10);
  for (Element i = 0; i < 10; ++i) {
    for (Element j = 0; j < 10; ++j) CHECK(c10.mul(i, j) == (i + j) % 10);
  }

  CHECK(elementary_abelian(2, 1) == cyclic_group(2));
  auto e8 = elementary_abelian(2, 3);
  CHECK(e8.order() == 8);
  for (Element i = 0; i < 8; ++i) {
    for (Element j = 0; j < 8; ++j) CHECK(e8.mul(i, j) == (i ^ j));
    if (i) CHECK(e8.element_order(i) == 2);
  }
  CHECK(code_of([] { elementary_abelian(4, 1); }) == ErrorCode::NotPrime);
}

TEST_CASE("semidirect, dihedral, quaternion, products") {
  auto c3 = cyclic_group(3);
  auto c2 = cyclic_group(2);
  GroupMap inversion{{0, 2, 1}};
  auto g = semidirect_product(c3, c2, {identity_map(3), inversion});
  CHECK(g.order() == 6);
  CHECK(g.mul(1 * 2 + 0, 1 * 2 + 1) == 2 * 2 + 1);  // (1,0)(1,1) = (2,1)
  CHECK_FALSE(g.is_abelian());
  CHECK(semidirect_product(c3, c2, {identity_map(3), identity_map(3)}) == direct_product(c3, c2));

  CHECK(code_of([&] {
          semidirect_product(c3, c2, {identity_map(3), GroupMap{{0, 1, 1}}});
        }) == ErrorCode::NotAutomorphism);
  auto c4 = cyclic_group(4);
  CHECK(code_of([&] {
          semidirect_product(c3, c4, {identity_map(3), inversion, inversion, inversion});
        }) == ErrorCode::NotHomomorphism);

  for (std::size_t m = 3; m <= 8; ++m) {
    auto d = dihedral_group(m);
    CHECK(d.order() == 2 * m);
    CHECK_FALSE(d.is_abelian());
  }
  auto q8 = quaternion_group();
  std::size_t order2 = 0, order4 = 0;
  for (Element x = 0; x < 8; ++x) {
    order2 += q8.element_order(x) == 2;
    order4 += q8.element_order(x) == 4;
  }
  CHECK(order2 == 1);
  CHECK(order4 == 6);

  auto s3 = dihedral_group(3);
  auto op = opposite_group(s3);
  for (Element a = 0; a < 6; ++a) {
    for (Element b = 0; b < 6; ++b) CHECK(op.mul(a, b) == s3.mul(b, a));
  }
}

TEST_CASE("subgroups, actions, stabilizers") {
  auto c10 = cyclic_group(10);
  CHECK(subgroup_generated(c10, {}).elements == std::vector<Element>{0});
  std::vector<Element> two{2};
  CHECK(subgroup_generated(c10, two).elements == std::vector<Element>{0, 2, 4, 6, 8});

  auto s3 = dihedral_group(3);
  auto reg = left_regular_action(s3);
  CHECK(is_transitive(reg));
  CHECK(stabilizer(s3, reg, 0).elements == std::vector<Element>{0});
  GroupAction trivial{2, 2, {0, 1, 0, 1}};
  CHECK(check_action(cyclic_group(2), trivial).passed());
  CHECK_FALSE(is_transitive(trivial));

  for (auto const& g : {s3, dihedral_group(4), quaternion_group(), cyclic_group(12)}) {
    auto act = left_regular_action(g);
    for (Element p = 0; p < g.order(); ++p) {
      CHECK(orbit(act, p).size() * stabilizer(g, act, p).size() == g.order());
    }
  }
}

TEST_CASE("all_subgroups matches exhaustive subset scan") {
  for (auto const& g : {cyclic_group(12), dihedral_group(3), dihedral_group(4), quaternion_group(),
                        elementary_abelian(2, 3), dihedral_group(6)}) {
    auto expected = oracle::subgroups(g);
    std::vector<std::vector<Element>> got;
    for (auto const& s : all_subgroups(g)) got.push_back(s.elements);
    CHECK(got == expected);
  }
  CHECK(all_subgroups(dihedral_group(3)).size() == 6);
  CHECK(all_subgroups(elementary_abelian(2, 3)).size() == 16);
}

TEST_CASE("normality") {
  auto s3 = dihedral_group(3);
  std::vector<Element> rot{2};  // index 2 = (1,0), a rotation
  CHECK(is_normal(s3, subgroup_generated(s3, rot)));
  std::vector<Element> refl{1};
  CHECK_FALSE(is_normal(s3, subgroup_generated(s3, refl)));
}
