#include "ybe/solution.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace ybe {

namespace {

// Bijectivity of i -> f(i) over 0..n-1; on failure the two colliding inputs.
template <typename F>
std::optional<std::pair<Element, Element>> collision(std::size_t n, F&& f) {
  std::vector<Element> seen(n, std::numeric_limits<Element>::max());
  for (std::size_t i = 0; i < n; ++i) {
    Element v = f(Element(i));
    if (seen[v] != std::numeric_limits<Element>::max()) return std::pair{seen[v], Element(i)};
    seen[v] = Element(i);
  }
  return std::nullopt;
}

}  // namespace

SolutionReport check_braid(SolutionMap const& r, ScanMode mode) {
  SolutionReport rep;
  std::size_t n = r.size;
  Element const* L = r.left.data();
  Element const* R = r.right.data();

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t xy = x * n + y;
      Element a1 = L[xy], b1 = R[xy];
      for (std::size_t z = 0; z < n; ++z) {
        // (r x id)(id x r)(r x id), rightmost factor first
        Element b2 = L[b1 * n + z], c2 = R[b1 * n + z];
        Element a3 = L[a1 * n + b2], b3 = R[a1 * n + b2];
        // (id x r)(r x id)(id x r)
        std::size_t yz = y * n + z;
        Element p1 = L[yz], q1 = R[yz];
        Element o2 = L[x * n + p1], p2 = R[x * n + p1];
        Element p3 = L[p2 * n + q1], q3 = R[p2 * n + q1];
        ++rep.triples_checked;
        if (a3 != o2 || b3 != p3 || c2 != q3) {
          if (rep.braid.holds) {
            rep.braid = {false, {Element(x), Element(y), Element(z)}};
          }
          if (mode == ScanMode::FirstFailure) goto done;
          rep.braid_failures.push_back({Element(x), Element(y), Element(z)});
        }
      }
    }
  }
done:

  if (auto c = collision(n * n, [&](Element i) { return Element(L[i] * n + R[i]); })) {
    rep.bijective = {false, {Element(c->first / n), Element(c->first % n),
                             Element(c->second / n), Element(c->second % n)}};
  }
  for (std::size_t i = 0; i < n * n && rep.involutive.holds; ++i) {
    std::size_t j = L[i] * n + R[i];
    if (L[j] * n + R[j] != i) rep.involutive = {false, {Element(i / n), Element(i % n)}};
  }
  for (std::size_t x = 0; x < n && rep.left_nondegenerate.holds; ++x) {
    if (auto c = collision(n, [&](Element y) { return L[x * n + y]; })) {
      rep.left_nondegenerate = {false, {Element(x), c->first, c->second}};
    }
  }
  for (std::size_t y = 0; y < n && rep.right_nondegenerate.holds; ++y) {
    if (auto c = collision(n, [&](Element x) { return R[x * n + y]; })) {
      rep.right_nondegenerate = {false, {Element(y), c->first, c->second}};
    }
  }
  return rep;
}

SolutionMap conjugate_solution(SolutionMap const& r, Involution by) {
  std::size_t n = r.size;
  SolutionMap out{n, Table(n * n), Table(n * n), r.provenance, r.inverses};
  if (by == Involution::Tau) {
    out.provenance += "|tau";
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        // tau r tau (x,y) = tau r (y,x)
        auto [a, b] = r(Element(y), Element(x));
        out.left[x * n + y] = b;
        out.right[x * n + y] = a;
      }
    }
    return out;
  }
  if (!r.inverses || r.inverses->size() != n) {
    fail(ErrorCode::NoInverseCarrier, "iota-conjugation of '" + r.provenance +
                                          "' needs the carrier's group inverses");
  }
  auto const& inv = *r.inverses;
  out.provenance += "|iota";
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto [a, b] = r(inv[x], inv[y]);
      out.left[x * n + y] = inv[a];
      out.right[x * n + y] = inv[b];
    }
  }
  return out;
}

std::variant<SolutionMap, NotClosed> restrict_solution(SolutionMap const& r,
                                                       std::span<Element const> subset) {
  std::size_t m = subset.size();
  std::vector<Element> pos(r.size, std::numeric_limits<Element>::max());
  for (std::size_t i = 0; i < m; ++i) {
    if (subset[i] >= r.size || (i > 0 && subset[i] <= subset[i - 1])) {
      fail(ErrorCode::InvalidArgument, "subset must be sorted, distinct and in range");
    }
    pos[subset[i]] = Element(i);
  }
  SolutionMap out{m, Table(m * m), Table(m * m), r.provenance + "|restricted", std::nullopt};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto [a, b] = r(subset[i], subset[j]);
      if (pos[a] == std::numeric_limits<Element>::max() ||
          pos[b] == std::numeric_limits<Element>::max()) {
        return NotClosed{subset[i], subset[j]};
      }
      out.left[i * m + j] = pos[a];
      out.right[i * m + j] = pos[b];
    }
  }
  if (r.inverses) {
    std::vector<Element> inv;
    for (Element x : subset) {
      Element y = (*r.inverses)[x];
      if (pos[y] == std::numeric_limits<Element>::max()) {
        inv.clear();
        break;
      }
      inv.push_back(pos[y]);
    }
    if (inv.size() == m) out.inverses = std::move(inv);
  }
  return out;
}

bool solutions_equal(SolutionMap const& a, SolutionMap const& b) {
  if (a.size != b.size) {
    fail(ErrorCode::SizeMismatch, "solutions of sizes " + std::to_string(a.size) + " and " +
                                      std::to_string(b.size));
  }
  return a.left == b.left && a.right == b.right;
}

std::optional<std::vector<Element>> find_solution_isomorphism(SolutionMap const& a,
                                                              SolutionMap const& b) {
  if (a.size != b.size) return std::nullopt;
  std::size_t n = a.size;
  if (n > kSolutionIsomorphismCap) {
    fail(ErrorCode::CapExceeded, "solution isomorphism search limited to size " +
                                     std::to_string(kSolutionIsomorphismCap));
  }
  constexpr Element unset = std::numeric_limits<Element>::max();
  std::vector<Element> phi(n, unset);
  std::vector<std::uint8_t> used(n);

  // Every pair of assigned points must map consistently wherever the
  // images are assigned too.
  auto consistent = [&](std::size_t upto) {
    for (std::size_t x = 0; x <= upto; ++x) {
      for (std::size_t y = 0; y <= upto; ++y) {
        if (x != upto && y != upto) continue;
        auto [l, r] = a(Element(x), Element(y));
        auto [l2, r2] = b(phi[x], phi[y]);
        if (phi[l] != unset && phi[l] != l2) return false;
        if (phi[r] != unset && phi[r] != r2) return false;
      }
    }
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t k) {
    if (k == n) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          auto [l, r] = a(Element(x), Element(y));
          auto [l2, r2] = b(phi[x], phi[y]);
          if (phi[l] != l2 || phi[r] != r2) return false;
        }
      }
      return true;
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t]) continue;
      phi[k] = Element(t);
      used[t] = 1;
      if (consistent(k) && search(k + 1)) return true;
      used[t] = 0;
      phi[k] = unset;
    }
    return false;
  };
  if (search(0)) return phi;
  return std::nullopt;
}

}  // namespace ybe
