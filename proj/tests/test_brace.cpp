#include <doctest.h>

#include <algorithm>
#include <array>

#include "oracles.hpp"
#include "ybe/brace.hpp"
#include "ybe/catalog.hpp"
#include "ybe/factorization.hpp"

using namespace ybe;

namespace {

GroupMap inversion3{{0, 2, 1}};

SkewBrace example24() {
  return semidirect_brace(cyclic_group(3), cyclic_group(2), {identity_map(3), inversion3});
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.code();
  }
  return ErrorCode::InternalConsistency;
}

}  // namespace

TEST_CASE("verify_skew_brace") {
  auto s3 = dihedral_group(3);
  CHECK(verify_skew_brace(6, s3.table(), s3.table()).passed());
  auto b = example24();
  CHECK(verify_skew_brace(6, b.star().table(), b.dot().table()).passed());

  // dot with two rows swapped is no longer a group
  Table t = s3.table();
  std::swap_ranges(t.begin() + 6, t.begin() + 12, t.begin() + 12);
  auto rep = verify_skew_brace(6, s3.table(), t);
  CHECK_FALSE(rep.passed());
  CHECK(rep.first_failure()->name.rfind("dot:", 0) == 0);

  // C6 against every relabelling of S3 fixing 0, compared with a direct
  // scan of x(y*z) = (xy) * x^-* * (xz)
  auto c6 = cyclic_group(6);
  auto d3 = dihedral_group(3);
  std::array<Element, 6> p{0, 1, 2, 3, 4, 5};
  int accepted = 0, rejected = 0;
  do {
    std::array<Element, 6> pinv{};
    for (Element i = 0; i < 6; ++i) pinv[p[i]] = i;
    Table dot(36);
    for (Element a = 0; a < 6; ++a) {
      for (Element b2 = 0; b2 < 6; ++b2) dot[a * 6 + b2] = p[d3.mul(pinv[a], pinv[b2])];
    }
    auto dg = FiniteGroup::from_table(6, dot);
    bool holds = true;
    for (Element x = 0; x < 6 && holds; ++x) {
      for (Element y = 0; y < 6 && holds; ++y) {
        for (Element z = 0; z < 6 && holds; ++z) {
          holds = dg.mul(x, c6.mul(y, z)) ==
                  c6.mul(c6.mul(dg.mul(x, y), c6.inv(x)), dg.mul(x, z));
        }
      }
    }
    auto rep = verify_skew_brace(6, c6.table(), dot);
    CHECK(rep.passed() == holds);
    if (!holds) {
      auto const* f = rep.find("brace-compatibility");
      REQUIRE(f);
      REQUIRE(f->witness.size() == 3);
      Element x = f->witness[0], y = f->witness[1], z = f->witness[2];
      CHECK(dg.mul(x, c6.mul(y, z)) != c6.mul(c6.mul(dg.mul(x, y), c6.inv(x)), dg.mul(x, z)));
    }
    (holds ? accepted : rejected) += 1;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  CHECK(accepted > 0);
  CHECK(rejected > 0);
}

TEST_CASE("gamma functions") {
  auto t = trivial_brace(dihedral_group(4));
  for (Element x = 0; x < 8; ++x) CHECK(brace_gamma(t, x) == identity_map(8));
  CHECK(check_brace_gamma(t).passed());

  auto b = example24();
  // gamma_(h,s)(h',s') = (alpha_s(h'), s') with index h*2 + s
  for (Element x = 0; x < 6; ++x) {
    Element s = x % 2;
    for (Element y = 0; y < 6; ++y) {
      Element hp = y / 2, sp = y % 2;
      Element expected = (s ? inversion3(hp) : hp) * 2 + sp;
      CHECK(b.gamma(x, y) == expected);
    }
  }
  CHECK(check_brace_gamma(b).passed());
  CHECK(check_brace_gamma(*abelianmap_example(3, 5).brace).passed());
}

TEST_CASE("abelian map braces") {
  auto s3 = dihedral_group(3);
  GroupMap trivial_psi{std::vector<Element>(6, 0)};
  auto b = abelian_map_brace(s3, trivial_psi);
  CHECK(b.star() == s3);

  auto c6 = cyclic_group(6);
  CHECK(abelian_map_brace(c6, identity_map(6)).star() == c6);

  CHECK(code_of([&] { abelian_map_brace(s3, identity_map(6)); }) == ErrorCode::NotAbelianImage);
  CHECK(code_of([&] { abelian_map_brace(c6, GroupMap{{0, 1, 1, 1, 1, 1}}); }) ==
        ErrorCode::NotHomomorphism);

  // order-60 example: phi(x^i y^j z^k) = x^i, index 4i + j + 2k
  auto ex = abelianmap_example(3, 5);
  auto const& am = ex.brace->abelian_map();
  REQUIRE(am);
  for (Element x = 0; x < 60; ++x) CHECK(am->phi[x] == x / 4 * 4);
  CHECK(ex.brace->star().is_abelian());
}

TEST_CASE("strong left ideals") {
  auto b = example24();
  std::vector<Element> all{0, 1, 2, 3, 4, 5};
  CHECK(is_strong_left_ideal(b, Subgroup{all, {}}));
  CHECK(is_strong_left_ideal(b, Subgroup{{0, 1}, {}}));  // {e} x S

  auto ex = abelianmap_example(3, 5);
  CHECK(ex.ideal->size() == 6);
  CHECK(is_strong_left_ideal(*ex.brace, *ex.ideal));
  // definition and commutator criterion agree on every subgroup
  std::size_t ideals = 0;
  for (auto const& s : all_subgroups(ex.brace->dot())) {
    bool def = is_strong_left_ideal(*ex.brace, s);
    CHECK(def == commutator_criterion(*ex.brace, s));
    ideals += def;
  }
  CHECK(ideals > 2);
  CHECK(code_of([&] { commutator_criterion(b, Subgroup{{0}, {}}); }) ==
        ErrorCode::PreconditionFailed);
}

TEST_CASE("brace solutions") {
  auto s3 = dihedral_group(3);
  auto r = brace_solution(trivial_brace(s3));
  for (Element x = 0; x < 6; ++x) {
    for (Element y = 0; y < 6; ++y) {
      auto [l, rr] = r(x, y);
      CHECK(l == y);
      CHECK(rr == s3.mul(s3.inv(y), s3.mul(x, y)));
    }
  }
  auto b = example24();
  auto rb = brace_solution(b);
  for (Element y = 0; y < 6; ++y) CHECK(rb(0, y) == std::pair<Element, Element>{y, 0});
  CHECK_FALSE(oracle::braid_failure(rb));
  auto rep = check_braid(rb);
  CHECK(rep.braid.holds);
  CHECK(rep.triples_checked == 216);
  CHECK(rep.bijective.holds);
  CHECK(rep.left_nondegenerate.holds);
  CHECK(rep.right_nondegenerate.holds);
}

TEST_CASE("regular representation in the holomorph") {
  auto t = trivial_brace(cyclic_group(4));
  auto img = regular_rep_in_holomorph(t);
  CHECK(img.image == img.hol.translations());

  auto b = example24();
  auto img6 = regular_rep_in_holomorph(b);
  CHECK(img6.image.size() == 6);
  CHECK(is_transitive(restrict_action(img6.hol.action, img6.image)));

  auto ex = abelianmap_example(3, 5);
  CHECK(code_of([&] { regular_rep_in_holomorph(*ex.brace); }) == ErrorCode::CapExceeded);
  auto img60 = regular_rep_in_holomorph(*ex.brace, {kAutomorphismCap, 2880});
  CHECK(img60.image.size() == 60);
}
