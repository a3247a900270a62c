#include "ybe/derive.hpp"

namespace ybe {

namespace {

std::vector<Element> inverses_of(FiniteGroup const& g) {
  std::vector<Element> inv(g.order());
  for (Element x = 0; x < g.order(); ++x) inv[x] = g.inv(x);
  return inv;
}

void assert_solution(SolutionMap const& r, bool left) {
  auto rep = check_braid(r);
  if (!rep.braid.holds) {
    fail(ErrorCode::InternalConsistency,
         r.provenance + ": braid relation fails at " + format_witness(rep.braid.witness));
  }
  auto const& nd = left ? rep.left_nondegenerate : rep.right_nondegenerate;
  if (!nd.holds) {
    fail(ErrorCode::InternalConsistency, r.provenance + ": " + (left ? "left" : "right") +
                                             " nondegeneracy fails at " +
                                             format_witness(nd.witness));
  }
}

}  // namespace

SolutionMap solution_from_semibrace(Semibrace const& sb) {
  auto const& g = sb.dot();
  std::size_t n = sb.order();
  SolutionMap r{n, Table(n * n), Table(n * n), "semibrace", inverses_of(g)};
  for (Element x = 0; x < n; ++x) {
    Element xi = g.inv(x);
    for (Element y = 0; y < n; ++y) {
      Element l = g.mul(x, sb.add(xi, y));
      r.left[x * n + y] = l;
      r.right[x * n + y] = g.mul(g.inv(l), g.mul(x, y));
    }
  }
  assert_solution(r, true);
  return r;
}

SolutionMap solution_from_bracoid(ContainedBrace const& cb, LambdaRho const& lr) {
  auto const& g = cb.g;
  std::size_t n = g.order();
  SolutionMap r{n, Table(n * n), Table(n * n), "bracoid", inverses_of(g)};
  for (Element x = 0; x < n; ++x) {
    Element xi = g.inv(x);
    for (Element y = 0; y < n; ++y) {
      Element yi = g.inv(y);
      r.left[x * n + y] = g.inv(lr.rho(xi, yi));
      r.right[x * n + y] = g.inv(lr.lambda(yi, xi));
    }
  }
  auto via_semibrace = solution_from_semibrace(bracoid_to_semibrace(cb, lr));
  for (std::size_t i = 0; i < n * n; ++i) {
    if (r.left[i] != via_semibrace.left[i] || r.right[i] != via_semibrace.right[i]) {
      fail(ErrorCode::InternalConsistency,
           "bracoid solution differs from the semibrace solution at " +
               format_witness(std::vector<Element>{Element(i / n), Element(i % n)}));
    }
  }
  return r;
}

SolutionMap solution_from_bracoid(ContainedBrace const& cb) {
  return solution_from_bracoid(cb, LambdaRho(cb));
}

SolutionMap tilde_solution_from_bracoid(ContainedBrace const& cb, LambdaRho const& lr) {
  std::size_t n = cb.g.order();
  SolutionMap r{n, Table(n * n), Table(n * n), "bracoid-tilde", inverses_of(cb.g)};
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      r.left[x * n + y] = lr.lambda(x, y);
      r.right[x * n + y] = lr.rho(y, x);
    }
  }
  assert_solution(r, false);
  return r;
}

SolutionMap tilde_solution_from_bracoid(ContainedBrace const& cb) {
  return tilde_solution_from_bracoid(cb, LambdaRho(cb));
}

SolutionMap tau_iota_conjugate(SolutionMap const& r) {
  return conjugate_solution(conjugate_solution(r, Involution::Iota), Involution::Tau);
}

}  // namespace ybe
