#include "ybe/bracoid.hpp"

#include <algorithm>
#include <limits>

#include "ybe/rng.hpp"

namespace ybe {

namespace {

constexpr Element kNone = std::numeric_limits<Element>::max();

[[noreturn]] void fail_report(ErrorCode code, std::string const& what, Report const& rep) {
  auto const* bad = rep.first_failure();
  fail(code, what + ": " + bad->name + " at " + format_witness(bad->witness));
}

}  // namespace

Report verify_bracoid(FiniteGroup const& g, FiniteGroup const& n, GroupAction const& act) {
  Report rep = check_action(g, act);
  if (act.points != n.order()) {
    rep.add("action-points", false, {Element(act.points), Element(n.order())});
  }
  if (!rep.passed()) return rep;
  rep.add("transitive", is_transitive(act), {});

  std::vector<Element> bad;
  for (Element x = 0; x < g.order() && bad.empty(); ++x) {
    Element xe_inv = n.inv(act.act(x, 0));
    for (Element a = 0; a < n.order() && bad.empty(); ++a) {
      Element left = n.mul(act.act(x, a), xe_inv);
      for (Element b = 0; b < n.order(); ++b) {
        if (act.act(x, n.mul(a, b)) != n.mul(left, act.act(x, b))) {
          bad = {x, a, b};
          break;
        }
      }
    }
  }
  rep.add("bracoid-compatibility", bad.empty(), bad);
  return rep;
}

SkewBracoid make_bracoid(FiniteGroup g, FiniteGroup n, GroupAction act) {
  auto rep = verify_bracoid(g, n, act);
  if (!rep.passed()) fail_report(ErrorCode::ConstructionFailed, "not a skew bracoid", rep);
  return SkewBracoid{std::move(g), std::move(n), std::move(act)};
}

SkewBracoid brace_as_bracoid(SkewBrace const& b) {
  return make_bracoid(b.dot(), b.star(), left_regular_action(b.dot()));
}

SkewBracoid from_strong_left_ideal(SkewBrace const& b, Subgroup const& s) {
  if (!is_subgroup(b.dot(), s.elements) || !is_strong_left_ideal(b, s)) {
    fail(ErrorCode::NotStrongLeftIdeal, "subset is not a strong left ideal");
  }
  auto const& star = b.star();
  std::size_t n = b.order();
  std::vector<Element> coset(n, kNone);
  std::vector<Element> reps;
  for (Element g = 0; g < n; ++g) {
    if (coset[g] != kNone) continue;
    for (Element y : s.elements) coset[star.mul(g, y)] = Element(reps.size());
    reps.push_back(g);
  }
  std::size_t m = reps.size();
  Table quotient(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t c = 0; c < m; ++c) quotient[a * m + c] = coset[star.mul(reps[a], reps[c])];
  }
  GroupAction act{n, m, Table(n * m)};
  for (Element x = 0; x < n; ++x) {
    for (std::size_t a = 0; a < m; ++a) act.table[x * m + a] = coset[b.dot().mul(x, reps[a])];
  }
  auto quotient_group =
      FiniteGroup::trusted(m, std::move(quotient), star.name() + "/S");
  auto bracoid = make_bracoid(b.dot(), std::move(quotient_group), std::move(act));
  if (stabilizer(bracoid.g, bracoid.act, 0).elements != s.elements) {
    fail(ErrorCode::InternalConsistency, "Stab(eS) differs from S");
  }
  return bracoid;
}

SkewBracoid from_holomorph_subgroup(Holomorph const& hol, Subgroup const& j) {
  if (!is_subgroup(hol.group, j.elements)) {
    fail(ErrorCode::InvalidArgument, "J is not a subgroup of Hol(N)");
  }
  auto act = restrict_action(hol.action, j);
  if (!is_transitive(act)) fail(ErrorCode::NotTransitive, "J is not transitive on N");
  return make_bracoid(induced_group(hol.group, j, "J"), hol.base, std::move(act));
}

Report check_contained_brace(ContainedBrace const& cb) {
  Report rep = verify_bracoid(cb.g, cb.star_h, cb.act_h);
  if (!rep.passed()) return rep;
  if (!is_subgroup(cb.g, cb.h.elements)) {
    rep.add("h-subgroup", false);
    return rep;
  }
  rep.add("stabilizer", stabilizer(cb.g, cb.act_h, 0).elements == cb.s.elements);
  rep.add("exact-factorization", exact_factorization(cb.g, cb.h, cb.s));
  rep.add("h-regular", cb.h.size() == cb.act_h.points &&
                           is_transitive(restrict_action(cb.act_h, cb.h)));
  std::vector<Element> bad;
  for (Element i = 0; i < cb.h.size() && bad.empty(); ++i) {
    if (cb.act_h.act(cb.h_element(i), 0) != i) bad = {cb.h_element(i)};
  }
  rep.add("h-acts-on-e", bad.empty(), bad);
  return rep;
}

ContainedBrace make_contained_brace(FiniteGroup g, Subgroup h, FiniteGroup star_h,
                                    GroupAction act_h) {
  if (!is_subgroup(g, h.elements)) fail(ErrorCode::ConstructionFailed, "H is not a subgroup");
  if (act_h.points != h.size()) {
    fail(ErrorCode::ConstructionFailed, "action is not on H-positions");
  }
  auto s = stabilizer(g, act_h, 0);
  auto dot_h = induced_group(g, h, "H");
  std::vector<Element> to_n(h.size());
  for (std::size_t i = 0; i < to_n.size(); ++i) to_n[i] = Element(i);
  ContainedBrace cb{std::move(g), std::move(h), std::move(s), std::move(dot_h),
                    std::move(star_h), std::move(act_h), std::move(to_n)};
  auto rep = check_contained_brace(cb);
  if (!rep.passed()) fail_report(ErrorCode::ConstructionFailed, "not a contained brace", rep);
  return cb;
}

ContainedBrace transport(SkewBracoid const& b, Subgroup const& h) {
  if (!is_subgroup(b.g, h.elements)) fail(ErrorCode::InvalidArgument, "H is not a subgroup of G");
  std::size_t m = h.size();
  if (m != b.n.order()) fail(ErrorCode::NotRegular, "|H| != |N|");
  std::vector<Element> to_n(m), from_n(m, kNone);
  for (Element i = 0; i < m; ++i) {
    to_n[i] = b.act.act(h.elements[i], 0);
    if (from_n[to_n[i]] != kNone) {
      fail(ErrorCode::NotRegular, "elements " + std::to_string(h.elements[from_n[to_n[i]]]) +
                                      " and " + std::to_string(h.elements[i]) +
                                      " move e_N to the same point");
    }
    from_n[to_n[i]] = i;
  }
  Table star(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) star[i * m + j] = from_n[b.n.mul(to_n[i], to_n[j])];
  }
  std::size_t ng = b.g.order();
  GroupAction act{ng, m, Table(ng * m)};
  for (Element x = 0; x < ng; ++x) {
    for (std::size_t i = 0; i < m; ++i) act.table[x * m + i] = from_n[b.act.act(x, to_n[i])];
  }

  auto s = stabilizer(b.g, b.act, 0);
  ContainedBrace cb{b.g, h, std::move(s), induced_group(b.g, h, "H"),
                    FiniteGroup::trusted(m, std::move(star), "H*"), std::move(act), to_n};
  auto rep = check_contained_brace(cb);

  // (x *_H y).e_N = (x.e_N) * (y.e_N) and (x (.)_H h).e_N = (xh).e_N
  std::vector<Element> bad;
  for (Element i = 0; i < m && bad.empty(); ++i) {
    for (Element j = 0; j < m; ++j) {
      Element lhs = b.act.act(h.elements[cb.star_h.mul(i, j)], 0);
      if (lhs != b.n.mul(b.act.act(h.elements[i], 0), b.act.act(h.elements[j], 0))) {
        bad = {h.elements[i], h.elements[j]};
        break;
      }
    }
  }
  rep.add("transport-star", bad.empty(), bad);
  bad.clear();
  for (Element x = 0; x < ng && bad.empty(); ++x) {
    for (Element i = 0; i < m; ++i) {
      Element lhs = b.act.act(h.elements[cb.act_h.act(x, i)], 0);
      if (lhs != b.act.act(b.g.mul(x, h.elements[i]), 0)) {
        bad = {x, h.elements[i]};
        break;
      }
    }
  }
  rep.add("transport-action", bad.empty(), bad);
  if (!rep.passed()) fail_report(ErrorCode::InternalConsistency, "transport", rep);
  return cb;
}

BraceSearch contains_brace(SkewBracoid const& b) {
  BraceSearch out{stabilizer(b.g, b.act, 0), {}, std::nullopt};
  out.complements = find_complements(b.g, out.stabilizer);
  if (!out.complements.empty()) {
    out.brace = transport(b, out.complements.front());
    contained_skew_brace(*out.brace);
  }
  return out;
}

SkewBrace contained_skew_brace(ContainedBrace const& cb) {
  return SkewBrace::make(cb.star_h, cb.dot_h);
}

GroupMap bracoid_gamma(ContainedBrace const& cb, Element x) {
  std::size_t m = cb.h.size();
  GroupMap f;
  f.images.reserve(m);
  Element xe_inv = cb.star_h.inv(cb.act_h.act(x, 0));
  for (Element k = 0; k < m; ++k) f.images.push_back(cb.star_h.mul(xe_inv, cb.act_h.act(x, k)));
  return f;
}

Report check_bracoid_gamma(ContainedBrace const& cb) {
  Report rep;
  std::size_t ng = cb.g.order(), m = cb.h.size();
  std::vector<GroupMap> gammas;
  gammas.reserve(ng);
  for (Element x = 0; x < ng; ++x) gammas.push_back(bracoid_gamma(cb, x));

  std::vector<Element> bad;
  for (Element x = 0; x < ng && bad.empty(); ++x) {
    if (!is_automorphism(cb.star_h, gammas[x])) bad = {x};
  }
  rep.add("gamma-automorphism", bad.empty(), bad);
  bad.clear();
  for (Element x = 0; x < ng && bad.empty(); ++x) {
    for (Element y = 0; y < ng; ++y) {
      if (gammas[cb.g.mul(x, y)] != compose(gammas[x], gammas[y])) {
        bad = {x, y};
        break;
      }
    }
  }
  rep.add("gamma-homomorphism", bad.empty(), bad);
  bad.clear();
  auto brace = contained_skew_brace(cb);
  for (Element i = 0; i < m && bad.empty(); ++i) {
    if (gammas[cb.h_element(i)] != brace_gamma(brace, i)) bad = {cb.h_element(i)};
  }
  rep.add("gamma-agrees-on-h", bad.empty(), bad);
  return rep;
}

LambdaRho::LambdaRho(ContainedBrace const& cb)
    : _n(cb.g.order()), _h(cb.h.elements), _lambda(_n * _n), _rho(_n * _n) {
  std::vector<GroupMap> gammas;
  gammas.reserve(_n);
  for (Element x = 0; x < _n; ++x) gammas.push_back(bracoid_gamma(cb, x));
  auto const& g = cb.g;
  for (Element x = 0; x < _n; ++x) {
    for (Element y = 0; y < _n; ++y) {
      Element l = gammas[x](cb.act_h.act(y, 0));
      _lambda[x * _n + y] = l;
      _rho[y * _n + x] = g.mul(g.inv(_h[l]), g.mul(x, y));
    }
  }
}

Report check_lambda_rho(ContainedBrace const& cb, LambdaRho const& lr,
                        IdentityCheckOptions const& options) {
  Report rep;
  auto const& g = cb.g;
  std::size_t n = g.order();

  std::vector<Element> bad;
  for (Element x = 0; x < n && bad.empty(); ++x) {
    if (lr.lambda_pos(x, 0) != 0) bad = {x};
  }
  rep.add("lambda-fixes-e", bad.empty(), bad);
  bad.clear();
  for (Element x = 0; x < n && bad.empty(); ++x) {
    if (lr.rho(0, x) != x) bad = {x};
  }
  rep.add("rho-e-identity", bad.empty(), bad);

  // rho_x bijective with inverse rho_{x^-1}: O(n^2), always exhaustive.
  bad.clear();
  for (Element x = 0; x < n && bad.empty(); ++x) {
    Element xi = g.inv(x);
    for (Element z = 0; z < n; ++z) {
      if (lr.rho(x, lr.rho(xi, z)) != z || lr.rho(xi, lr.rho(x, z)) != z) {
        bad = {x, z};
        break;
      }
    }
  }
  rep.add("rho-bijective", bad.empty(), bad);

  std::vector<Element> hom_bad, anti_bad, cocycle_bad;
  auto check_triple = [&](Element x, Element y, Element z) {
    Element xy = g.mul(x, y);
    if (hom_bad.empty() && lr.lambda(xy, z) != lr.lambda(x, lr.lambda(y, z))) {
      hom_bad = {x, y, z};
    }
    if (anti_bad.empty() && lr.rho(xy, z) != lr.rho(y, lr.rho(x, z))) {
      anti_bad = {x, y, z};
    }
    if (cocycle_bad.empty() &&
        lr.lambda(x, g.mul(y, z)) != g.mul(lr.lambda(x, y), lr.lambda(lr.rho(y, x), z))) {
      cocycle_bad = {x, y, z};
    }
  };
  if (n <= options.exhaustive_limit) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) check_triple(x, y, z);
      }
    }
  } else {
    Rng rng(options.seed);
    for (std::size_t i = 0; i < options.samples; ++i) {
      Element x = Element(rng.below(n));
      Element y = Element(rng.below(n));
      Element z = Element(rng.below(n));
      check_triple(x, y, z);
    }
  }
  rep.add("lambda-homomorphism", hom_bad.empty(), hom_bad);
  rep.add("rho-antihomomorphism", anti_bad.empty(), anti_bad);
  rep.add("lambda-cocycle", cocycle_bad.empty(), cocycle_bad);
  return rep;
}

LambdaRho lambda_rho(ContainedBrace const& cb, IdentityCheckOptions const& options) {
  LambdaRho lr(cb);
  auto rep = check_lambda_rho(cb, lr, options);
  if (!rep.passed()) fail_report(ErrorCode::InternalConsistency, "lambda/rho identities", rep);
  return lr;
}

MatchedPairData to_matched_pair(ContainedBrace const& cb, HolomorphLimits limits) {
  auto pair = matched_pair_from_factorization(cb.g, cb.h, cb.s);
  std::size_t nh = cb.h.size(), ns = cb.s.size();

  for (Element j = 0; j < ns; ++j) {
    Element s = cb.s.elements[j];
    GroupMap act;
    for (Element k = 0; k < nh; ++k) {
      act.images.push_back(cb.act_h.act(s, k));
      if (act.images.back() != pair.left_act(j, k)) {
        fail(ErrorCode::InternalConsistency, "S-action on H differs from the matched pair");
      }
    }
    if (!is_automorphism(cb.star_h, act)) {
      fail(ErrorCode::InternalConsistency,
           "element " + std::to_string(s) + " of S does not act by automorphisms");
    }
  }

  auto product = bicrossed_product(pair);
  auto hol = holomorph(cb.star_h, limits);
  std::size_t n = product.order();
  std::vector<Element> theta(n);
  std::vector<Element> perm(nh);
  for (Element a = 0; a < n; ++a) {
    Element hp = Element(a / ns), sp = Element(a % ns);
    Element x = cb.g.mul(cb.h_element(hp), cb.s.elements[sp]);
    for (Element k = 0; k < nh; ++k) {
      perm[k] = pair.h.mul(hp, pair.left_act(sp, k));
      if (perm[k] != cb.act_h.act(x, k)) {
        fail(ErrorCode::InternalConsistency, "theta disagrees with the bracoid action");
      }
    }
    auto e = hol.find_permutation(perm);
    if (!e) fail(ErrorCode::InternalConsistency, "theta leaves Hol(H,*)");
    theta[a] = *e;
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (theta[product.mul(a, b)] != hol.group.mul(theta[a], theta[b])) {
        fail(ErrorCode::InternalConsistency, "theta is not a homomorphism");
      }
    }
  }
  Subgroup image{sorted_unique(theta), {}};
  Subgroup regular;
  for (Element hp = 0; hp < nh; ++hp) regular.elements.push_back(theta[hp * ns]);
  regular.elements = sorted_unique(regular.elements);
  if (!is_subgroup(hol.group, image.elements) || regular.size() != nh ||
      !is_transitive(restrict_action(hol.action, regular))) {
    fail(ErrorCode::InternalConsistency, "theta(H) is not a regular subgroup");
  }
  return MatchedPairData{std::move(pair), std::move(product), std::move(hol), std::move(theta),
                         std::move(image), std::move(regular)};
}

}  // namespace ybe
