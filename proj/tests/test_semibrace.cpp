#include <doctest.h>

#include "ybe/catalog.hpp"
#include "ybe/rng.hpp"
#include "ybe/semibrace.hpp"

using namespace ybe;

namespace {

ContainedBrace brace_of(ExampleInstance const& ex) {
  auto s = contains_brace(ex.bracoid);
  REQUIRE(s.found());
  return *s.brace;
}

std::vector<ExampleInstance> catalog_instances() {
  return {trivial_brace_example(4), trivial_brace_example(6, 1), semidirect_example(3, 2),
          semidirect_example(7, 3), abelianmap_example(3, 5), gl3f2_example(1)};
}

}  // namespace

TEST_CASE("verify_semibrace") {
  auto s3 = dihedral_group(3);
  CHECK(verify_semibrace(6, s3.table(), trivial_semibrace(s3).plus_table()).passed());
  CHECK(verify_semibrace(6, s3.table(), opposite_group(s3).table()).passed());

  Table constant(36, 0);
  auto rep = verify_semibrace(6, s3.table(), constant);
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(rep.find("left-cancellative")->passed);

  Table out_of_range = trivial_semibrace(s3).plus_table();
  out_of_range[7] = 6;
  CHECK_FALSE(verify_semibrace(6, s3.table(), out_of_range).passed());
  CHECK_THROWS_AS(Semibrace::make(s3, constant), Error);
}

TEST_CASE("L maps") {
  auto s3 = dihedral_group(3);
  auto triv = trivial_semibrace(s3);
  CHECK(l_map(triv, 0) == identity_map(6));
  for (Element x = 0; x < 6; ++x) {
    auto l = l_map(triv, x);
    for (Element y = 0; y < 6; ++y) CHECK(l(y) == s3.mul(x, y));
  }
  CHECK(check_l_maps(triv).passed());
  for (auto const& ex : catalog_instances()) {
    CHECK(check_l_maps(bracoid_to_semibrace(brace_of(ex))).passed());
  }
}

TEST_CASE("decomposition") {
  auto s3 = dihedral_group(3);
  auto t = decompose(trivial_semibrace(s3));
  CHECK(t.h_part == std::vector<Element>{0});
  CHECK(t.e_part.size() == 6);

  auto b = decompose(brace_semibrace(trivial_brace(s3)));
  CHECK(b.h_part.size() == 6);
  CHECK(b.e_part == std::vector<Element>{0});

  auto gl = decompose(bracoid_to_semibrace(brace_of(gl3f2_example(1))));
  CHECK(gl.h_part.size() == 8);
  CHECK(gl.e_part.size() == 21);

  Decomposition wrong{{0}, {0}};
  CHECK_FALSE(check_decomposition(trivial_semibrace(s3), wrong).passed());
}

TEST_CASE("bracoid to semibrace") {
  auto s3 = dihedral_group(3);
  auto sb = bracoid_to_semibrace(brace_of(trivial_brace_example(6, 1)));
  for (Element x = 0; x < 6; ++x) {
    for (Element y = 0; y < 6; ++y) CHECK(sb.add(x, y) == s3.mul(y, x));
  }

  auto ex = semidirect_example(3, 2);
  auto cb = brace_of(ex);
  auto sb24 = bracoid_to_semibrace(cb);
  auto d = decompose(sb24);
  CHECK(d.h_part.size() == 3);
  CHECK(d.e_part.size() == 2);
  CHECK(d.e_part == cb.s.elements);
  CHECK(check_correspondence(cb, sb24).passed());
}

TEST_CASE("semibrace to bracoid") {
  auto s3 = dihedral_group(3);
  auto t = semibrace_to_bracoid(trivial_semibrace(s3));
  CHECK(t.h.size() == 1);
  CHECK(t.s.size() == 6);

  auto b = semibrace_to_bracoid(brace_semibrace(trivial_brace(s3)));
  CHECK(b.h.size() == 6);
  CHECK(b.s.elements == std::vector<Element>{0});
  CHECK(b.star_h == opposite_group(opposite_group(s3)));
}

TEST_CASE("round trips") {
  for (auto const& ex : catalog_instances()) {
    CAPTURE(ex.name);
    auto cb = brace_of(ex);
    CHECK(roundtrip_check(cb));
    auto sb = bracoid_to_semibrace(cb);
    CHECK(roundtrip_check(sb));
    CHECK(same_tables(semibrace_to_bracoid(sb), cb));
  }

  auto sb = bracoid_to_semibrace(brace_of(semidirect_example(3, 2)));
  Table plus = sb.plus_table();
  std::swap(plus[6 + 1], plus[6 + 2]);
  CHECK_FALSE(verify_semibrace(6, sb.dot().table(), plus).passed());
}

TEST_CASE("random plus tables are rejected") {
  Rng rng(11);
  auto c4 = cyclic_group(4);
  int accepted = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Table plus(16);
    for (auto& v : plus) v = Element(rng.below(4));
    auto rep = verify_semibrace(4, c4.table(), plus);
    bool injective_rows = true;
    for (Element x = 0; x < 4; ++x) {
      std::vector<bool> seen(4);
      for (Element y = 0; y < 4; ++y) {
        if (seen[plus[x * 4 + y]]) injective_rows = false;
        seen[plus[x * 4 + y]] = true;
      }
    }
    if (!injective_rows) CHECK_FALSE(rep.passed());
    accepted += rep.passed();
  }
  CHECK(accepted < 200);
}
