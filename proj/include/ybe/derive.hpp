#pragma once

#include "ybe/bracoid.hpp"
#include "ybe/semibrace.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// r(x,y) = (L_x(y), L_x(y)^-1 x y). Braid relation and left
// nondegeneracy are asserted (InternalConsistency).
SolutionMap solution_from_semibrace(Semibrace const& sb);

// r(x,y) = (rho_{x^-1}(y^-1)^-1, lambda_{y^-1}(x^-1)^-1), asserted equal
// entry for entry to the solution of the associated semibrace.
SolutionMap solution_from_bracoid(ContainedBrace const& cb, LambdaRho const& lr);
SolutionMap solution_from_bracoid(ContainedBrace const& cb);

// r~(x,y) = (lambda_x(y), rho_y(x)). Braid relation and right
// nondegeneracy are asserted.
SolutionMap tilde_solution_from_bracoid(ContainedBrace const& cb, LambdaRho const& lr);
SolutionMap tilde_solution_from_bracoid(ContainedBrace const& cb);

// tau iota r iota tau.
SolutionMap tau_iota_conjugate(SolutionMap const& r);

}  // namespace ybe
