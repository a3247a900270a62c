#include "ybe/semibrace.hpp"

#include <algorithm>
#include <limits>

namespace ybe {

namespace {

constexpr Element kNone = std::numeric_limits<Element>::max();

[[noreturn]] void fail_report(ErrorCode code, std::string const& what, Report const& rep) {
  auto const* bad = rep.first_failure();
  fail(code, what + ": " + bad->name + " at " + format_witness(bad->witness));
}

}  // namespace

Report verify_semibrace(std::size_t n, std::span<Element const> dot,
                        std::span<Element const> plus) {
  Report rep;
  Report dot_rep = check_group_table(n, dot);
  rep.append(dot_rep, "dot:");
  if (plus.size() != n * n) {
    rep.add("plus-size", false, {Element(plus.size())});
    return rep;
  }
  std::vector<Element> bad;
  for (std::size_t i = 0; i < n * n && bad.empty(); ++i) {
    if (plus[i] >= n) bad = {Element(i / n), Element(i % n)};
  }
  rep.add("plus-range", bad.empty(), bad);
  if (!rep.passed()) return rep;

  auto p = [&](Element a, Element b) { return plus[a * n + b]; };
  auto d = [&](Element a, Element b) { return dot[a * n + b]; };

  for (Element x = 0; x < n && bad.empty(); ++x) {
    for (Element y = 0; y < n && bad.empty(); ++y) {
      Element xy = p(x, y);
      for (Element z = 0; z < n; ++z) {
        if (p(xy, z) != p(x, p(y, z))) {
          bad = {x, y, z};
          break;
        }
      }
    }
  }
  rep.add("plus-associativity", bad.empty(), bad);

  bad.clear();
  std::vector<Element> seen(n, kNone);
  for (Element x = 0; x < n && bad.empty(); ++x) {
    for (Element y = 0; y < n; ++y) {
      Element v = p(x, y);
      if (seen[v] == x) {
        bad = {x, v};
        break;
      }
      seen[v] = x;
    }
  }
  rep.add("left-cancellative", bad.empty(), bad);

  bad.clear();
  std::vector<Element> inv(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (d(x, y) == 0) inv[x] = y;
    }
  }
  for (Element x = 0; x < n && bad.empty(); ++x) {
    for (Element y = 0; y < n && bad.empty(); ++y) {
      Element xy = d(x, y);
      for (Element z = 0; z < n; ++z) {
        if (d(x, p(y, z)) != p(xy, d(x, p(inv[x], z)))) {
          bad = {x, y, z};
          break;
        }
      }
    }
  }
  rep.add("semibrace-relation", bad.empty(), bad);
  return rep;
}

Semibrace Semibrace::make(FiniteGroup dot, Table plus) {
  auto rep = verify_semibrace(dot.order(), dot.table(), plus);
  if (!rep.passed()) fail_report(ErrorCode::ConstructionFailed, "not a semibrace", rep);
  return Semibrace(std::move(dot), std::move(plus));
}

Semibrace trivial_semibrace(FiniteGroup const& g) {
  std::size_t n = g.order();
  Table plus(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) plus[x * n + y] = Element(y);
  }
  return Semibrace::make(g, std::move(plus));
}

Semibrace brace_semibrace(SkewBrace const& b) {
  std::size_t n = b.order();
  Table plus(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) plus[x * n + y] = b.star().mul(y, x);
  }
  return Semibrace::make(b.dot(), std::move(plus));
}

GroupMap l_map(Semibrace const& sb, Element x) {
  auto const& g = sb.dot();
  Element xi = g.inv(x);
  GroupMap f;
  f.images.reserve(sb.order());
  for (Element y = 0; y < sb.order(); ++y) f.images.push_back(g.mul(x, sb.add(xi, y)));
  return f;
}

Report check_l_maps(Semibrace const& sb) {
  Report rep;
  std::size_t n = sb.order();
  std::vector<GroupMap> ls;
  ls.reserve(n);
  for (Element x = 0; x < n; ++x) ls.push_back(l_map(sb, x));

  std::vector<Element> bad;
  for (Element x = 0; x < n && bad.empty(); ++x) {
    for (Element y = 0; y < n && bad.empty(); ++y) {
      for (Element z = 0; z < n; ++z) {
        if (ls[x](sb.add(y, z)) != sb.add(ls[x](y), ls[x](z))) {
          bad = {x, y, z};
          break;
        }
      }
    }
  }
  rep.add("l-endomorphism", bad.empty(), bad);
  bad.clear();
  for (Element x = 0; x < n && bad.empty(); ++x) {
    for (Element y = 0; y < n; ++y) {
      if (ls[sb.dot().mul(x, y)] != compose(ls[x], ls[y])) {
        bad = {x, y};
        break;
      }
    }
  }
  rep.add("l-homomorphism", bad.empty(), bad);
  bad.clear();
  for (Element x = 0; x < n && bad.empty(); ++x) {
    if (!is_bijective(ls[x])) bad = {x};
  }
  rep.add("l-bijective", bad.empty(), bad);
  return rep;
}

Report check_decomposition(Semibrace const& sb, Decomposition const& d) {
  Report rep;
  std::size_t n = sb.order();
  auto in = [](std::vector<Element> const& v, Element x) {
    return std::binary_search(v.begin(), v.end(), x);
  };
  rep.add("identity-idempotent", in(d.e_part, 0));

  std::vector<Element> bad;
  for (Element x = 0; x < n && bad.empty(); ++x) {
    bool idem = sb.add(x, x) == x;
    if (in(d.e_part, x) != idem || idem != (sb.add(x, 0) == 0)) bad = {x};
  }
  rep.add("idempotent-test", bad.empty(), bad);

  bad.clear();
  for (Element x : d.e_part) {
    for (Element y = 0; y < n; ++y) {
      if (sb.add(x, y) != y) {
        bad = {x, y};
        break;
      }
    }
    if (!bad.empty()) break;
  }
  rep.add("idempotent-left-neutral", bad.empty(), bad);

  // (G+e, +) is a group whose identity is e: e + h = h by the above and
  // h + e = h since h = g+e.
  bad.clear();
  for (Element h : d.h_part) {
    if (sb.add(h, 0) != h) bad = {h};
    bool has_inverse = false;
    for (Element k : d.h_part) {
      if (!in(d.h_part, sb.add(h, k))) {
        bad = {h, k};
        break;
      }
      if (sb.add(h, k) == 0 && sb.add(k, h) == 0) has_inverse = true;
    }
    if (bad.empty() && !has_inverse) bad = {h};
    if (!bad.empty()) break;
  }
  rep.add("h-part-group", bad.empty(), bad);

  bad.clear();
  for (Element g = 0; g < n && bad.empty(); ++g) {
    Element ge = sb.add(g, 0);
    std::size_t count = 0;
    for (Element eps : d.e_part) count += sb.add(ge, eps) == g;
    if (count != 1) bad = {g, Element(count)};
  }
  rep.add("unique-decomposition", bad.empty(), bad);
  rep.add("sizes", d.h_part.size() * d.e_part.size() == n,
          {Element(d.h_part.size()), Element(d.e_part.size())});
  return rep;
}

Decomposition decompose(Semibrace const& sb) {
  Decomposition d;
  for (Element g = 0; g < sb.order(); ++g) {
    d.h_part.push_back(sb.add(g, 0));
    if (sb.add(g, g) == g) d.e_part.push_back(g);
  }
  d.h_part = sorted_unique(d.h_part);
  auto rep = check_decomposition(sb, d);
  if (!rep.passed()) fail_report(ErrorCode::InternalConsistency, "decomposition", rep);
  return d;
}

Report check_correspondence(ContainedBrace const& cb, Semibrace const& sb) {
  Report rep;
  Decomposition d;
  for (Element g = 0; g < sb.order(); ++g) {
    d.h_part.push_back(sb.add(g, 0));
    if (sb.add(g, g) == g) d.e_part.push_back(g);
  }
  d.h_part = sorted_unique(d.h_part);
  rep.add("e-equals-s", d.e_part == cb.s.elements);
  rep.add("g-plus-e-equals-h", d.h_part == cb.h.elements);
  std::vector<Element> bad;
  for (Element x = 0; x < sb.order() && bad.empty(); ++x) {
    bool a = cb.s.contains(x), b = sb.add(x, x) == x, c = sb.add(x, 0) == 0;
    if (a != b || b != c) bad = {x};
  }
  rep.add("three-way-idempotent", bad.empty(), bad);
  rep.append(check_decomposition(sb, d));
  return rep;
}

Semibrace bracoid_to_semibrace(ContainedBrace const& cb, LambdaRho const& lr) {
  auto const& g = cb.g;
  std::size_t n = g.order();
  Table plus(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) plus[x * n + y] = g.mul(y, lr.lambda(g.inv(y), x));
  }
  auto sb = Semibrace::make(g, std::move(plus));
  auto rep = check_correspondence(cb, sb);
  if (!rep.passed()) fail_report(ErrorCode::InternalConsistency, "bracoid to semibrace", rep);
  return sb;
}

Semibrace bracoid_to_semibrace(ContainedBrace const& cb) {
  return bracoid_to_semibrace(cb, LambdaRho(cb));
}

ContainedBrace semibrace_to_bracoid(Semibrace const& sb) {
  auto const& g = sb.dot();
  std::size_t n = sb.order();
  std::vector<Element> hs;
  for (Element x = 0; x < n; ++x) hs.push_back(sb.add(x, 0));
  hs = sorted_unique(hs);
  std::size_t m = hs.size();
  std::vector<Element> pos(n, kNone);
  for (Element i = 0; i < m; ++i) pos[hs[i]] = i;

  auto lookup = [&](Element x) {
    if (pos[x] == kNone) {
      fail(ErrorCode::ConstructionFailed, "element " + std::to_string(x) + " is not in G+e");
    }
    return pos[x];
  };
  Table star(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) star[i * m + j] = lookup(sb.add(hs[j], hs[i]));
  }
  GroupAction act{n, m, Table(n * m)};
  for (Element x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < m; ++i) act.table[x * m + i] = lookup(sb.add(g.mul(x, hs[i]), 0));
  }
  auto star_h = FiniteGroup::from_table(m, std::move(star), "H*");
  Subgroup h{std::move(hs), {}};
  return make_contained_brace(g, std::move(h), std::move(star_h), std::move(act));
}

bool same_tables(ContainedBrace const& a, ContainedBrace const& b) {
  return a.g == b.g && a.h.elements == b.h.elements && a.s.elements == b.s.elements &&
         a.star_h == b.star_h && a.act_h.table == b.act_h.table;
}

bool roundtrip_check(ContainedBrace const& cb) {
  try {
    return same_tables(semibrace_to_bracoid(bracoid_to_semibrace(cb)), cb);
  } catch (Error const&) {
    return false;
  }
}

bool roundtrip_check(Semibrace const& sb) {
  try {
    return bracoid_to_semibrace(semibrace_to_bracoid(sb)) == sb;
  } catch (Error const&) {
    return false;
  }
}

}  // namespace ybe
