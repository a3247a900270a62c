#include "ybe/brace.hpp"

#include <algorithm>

namespace ybe {

Report verify_skew_brace(std::size_t n, std::span<Element const> star,
                         std::span<Element const> dot) {
  Report rep;
  Report star_rep = check_group_table(n, star);
  Report dot_rep = check_group_table(n, dot);
  rep.append(star_rep, "star:");
  rep.append(dot_rep, "dot:");
  if (!star_rep.passed() || !dot_rep.passed()) return rep;

  std::vector<Element> star_inv(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (star[x * n + y] == 0) star_inv[x] = Element(y);
    }
  }
  auto s = [&](Element a, Element b) { return star[a * n + b]; };
  auto d = [&](Element a, Element b) { return dot[a * n + b]; };
  std::vector<Element> bad;
  for (Element x = 0; x < n && bad.empty(); ++x) {
    for (Element y = 0; y < n && bad.empty(); ++y) {
      Element xy = d(x, y);
      Element left = s(xy, star_inv[x]);
      for (Element z = 0; z < n; ++z) {
        if (d(x, s(y, z)) != s(left, d(x, z))) {
          bad = {x, y, z};
          break;
        }
      }
    }
  }
  rep.add("brace-compatibility", bad.empty(), bad);
  return rep;
}

SkewBrace::SkewBrace(FiniteGroup star, FiniteGroup dot, std::optional<AbelianMapData> abelian)
    : _star(std::move(star)), _dot(std::move(dot)), _abelian(std::move(abelian)) {
  std::size_t n = _dot.order();
  _gamma.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    Element xinv = _star.inv(Element(x));
    for (std::size_t y = 0; y < n; ++y) {
      _gamma[x * n + y] = _star.mul(xinv, _dot.mul(Element(x), Element(y)));
    }
  }
}

SkewBrace SkewBrace::make(FiniteGroup star, FiniteGroup dot,
                          std::optional<AbelianMapData> abelian_map) {
  if (star.order() != dot.order()) {
    fail(ErrorCode::ConstructionFailed, "operations on carriers of different size");
  }
  auto rep = verify_skew_brace(dot.order(), star.table(), dot.table());
  if (auto const* bad = rep.first_failure()) {
    fail(ErrorCode::ConstructionFailed,
         "not a skew brace: " + bad->name + " at " + format_witness(bad->witness));
  }
  return SkewBrace(std::move(star), std::move(dot), std::move(abelian_map));
}

SkewBrace trivial_brace(FiniteGroup const& g) { return SkewBrace::make(g, g); }

SkewBrace opposite_brace(SkewBrace const& b) {
  return SkewBrace::make(opposite_group(b.star()), b.dot());
}

SkewBrace semidirect_brace(FiniteGroup const& h, FiniteGroup const& s,
                           std::vector<GroupMap> const& alpha) {
  auto dot = semidirect_product(h, s, alpha);
  auto star = direct_product(h, s);
  return SkewBrace::make(std::move(star), std::move(dot));
}

SkewBrace abelian_map_brace(FiniteGroup const& g, GroupMap const& psi) {
  if (psi.size() != g.order()) fail(ErrorCode::NotHomomorphism, "psi has wrong length");
  if (auto bad = homomorphism_violation(g, g, psi)) {
    fail(ErrorCode::NotHomomorphism, "psi(xy) != psi(x)psi(y) at " + format_witness(*bad));
  }
  auto image = sorted_unique(psi.images);
  for (Element a : image) {
    for (Element b : image) {
      if (g.mul(a, b) != g.mul(b, a)) {
        fail(ErrorCode::NotAbelianImage, "image elements " + std::to_string(a) + " and " +
                                             std::to_string(b) + " do not commute");
      }
    }
  }
  std::size_t n = g.order();
  AbelianMapData data{psi, std::vector<Element>(n)};
  Table t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    Element px = psi(Element(x));
    Element phi = g.mul(Element(x), g.inv(px));
    data.phi[x] = phi;
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = g.mul(g.mul(phi, Element(y)), px);
  }
  try {
    auto star = FiniteGroup::from_table(n, std::move(t), g.name() + "_psi");
    return SkewBrace::make(std::move(star), g, std::move(data));
  } catch (Error const& e) {
    if (e.code() == ErrorCode::ConstructionFailed) throw;
    fail(ErrorCode::ConstructionFailed, std::string("abelian-map operation: ") + e.what());
  }
}

GroupMap brace_gamma(SkewBrace const& b, Element x) {
  GroupMap f;
  for (std::size_t y = 0; y < b.order(); ++y) f.images.push_back(b.gamma(x, Element(y)));
  return f;
}

Report check_brace_gamma(SkewBrace const& b) {
  Report rep;
  std::size_t n = b.order();
  std::vector<Element> bad;
  for (Element x = 0; x < n && bad.empty(); ++x) {
    auto g = brace_gamma(b, x);
    if (!is_bijective(g)) {
      bad = {x};
    } else if (auto w = homomorphism_violation(b.star(), b.star(), g)) {
      bad = {x, (*w)[0], (*w)[1]};
    }
  }
  rep.add("gamma-automorphism", bad.empty(), bad);
  bad.clear();
  for (Element x = 0; x < n && bad.empty(); ++x) {
    for (Element y = 0; y < n && bad.empty(); ++y) {
      Element xy = b.dot().mul(x, y);
      for (Element z = 0; z < n; ++z) {
        if (b.gamma(xy, z) != b.gamma(x, b.gamma(y, z))) {
          bad = {x, y, z};
          break;
        }
      }
    }
  }
  rep.add("gamma-homomorphism", bad.empty(), bad);
  return rep;
}

bool commutator_criterion(SkewBrace const& b, Subgroup const& s) {
  if (!b.abelian_map()) {
    fail(ErrorCode::PreconditionFailed, "commutator criterion needs an abelian-map brace");
  }
  auto const& g = b.dot();
  auto const& phi = b.abelian_map()->phi;
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (Element y : s.elements) {
      if (!s.contains(g.commutator(Element(x), phi[y]))) return false;
    }
  }
  return true;
}

bool is_strong_left_ideal(SkewBrace const& b, Subgroup const& s) {
  auto const& star = b.star();
  bool ideal = is_subgroup(star, s.elements) && is_normal(star, s);
  for (std::size_t x = 0; x < b.order() && ideal; ++x) {
    for (Element y : s.elements) {
      if (!s.contains(b.gamma(Element(x), y))) {
        ideal = false;
        break;
      }
    }
  }
  if (b.abelian_map() && is_subgroup(b.dot(), s.elements)) {
    if (commutator_criterion(b, s) != ideal) {
      fail(ErrorCode::InternalConsistency,
           "strong-left-ideal test disagrees with the commutator criterion");
    }
  }
  return ideal;
}

SolutionMap brace_solution(SkewBrace const& b) {
  std::size_t n = b.order();
  auto const& dot = b.dot();
  SolutionMap r{n, Table(n * n), Table(n * n), "brace", std::vector<Element>(n)};
  for (std::size_t x = 0; x < n; ++x) (*r.inverses)[x] = dot.inv(Element(x));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Element l = b.gamma(Element(x), Element(y));
      r.left[x * n + y] = l;
      r.right[x * n + y] = dot.mul(dot.inv(l), dot.mul(Element(x), Element(y)));
    }
  }
  return r;
}

HolomorphImage regular_rep_in_holomorph(SkewBrace const& b, HolomorphLimits limits) {
  HolomorphImage out{holomorph(b.star(), limits), {}};
  std::size_t n = b.order();
  for (std::size_t x = 0; x < n; ++x) {
    auto row = b.dot().row(Element(x));
    auto e = out.hol.find_permutation(row);
    if (!e) {
      fail(ErrorCode::InternalConsistency,
           "left multiplication by " + std::to_string(x) + " is not in Hol(G,*)");
    }
    out.image.elements.push_back(*e);
  }
  out.image.elements = sorted_unique(out.image.elements);
  if (out.image.size() != n || !is_subgroup(out.hol.group, out.image.elements) ||
      !is_transitive(restrict_action(out.hol.action, out.image))) {
    fail(ErrorCode::InternalConsistency, "image of (G,.) in Hol(G,*) is not regular");
  }
  return out;
}

}  // namespace ybe
