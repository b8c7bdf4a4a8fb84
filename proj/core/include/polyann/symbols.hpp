#pragma once

#include <vector>

#include "polyann/exponents.hpp"

namespace polyann {

// Root structure of the operator symbol q(z) = prod_j (z - lambda_j).

struct RootCluster {
  cplx root;                         // representative (first occurrence)
  int multiplicity = 0;
  std::vector<std::size_t> indices;  // positions in the exponent prefix
};

// Groups equal exponents. Integer-valued prefixes are grouped by exact
// comparison; otherwise two entries within `tol`*max(1, scale) coalesce.
// Cluster order follows first occurrence, so results are deterministic.
std::vector<RootCluster> cluster_roots(const std::vector<cplx>& lambda,
                                       double tol = 1e-9);

// q(z) at a point.
cplx symbol_eval(const std::vector<cplx>& lambda, cplx z);

// q'(lambda_j) = prod_{s != j} (lambda_j - lambda_s). Zero when the root is
// repeated; callers that need the distinct-root form must check first.
cplx symbol_derivative_at_root(const std::vector<cplx>& lambda, std::size_t j);

// Smallest pairwise distance between entries (infinity for a single entry).
double min_root_gap(const std::vector<cplx>& lambda);

// One term of the decomposition
//   1/q(z) = sum over simple roots  A/(z - root)
//          + sum over double roots  B/(z - root) + C/(z - root)^2.
struct PartialFractionTerm {
  cplx root;
  int multiplicity = 1;  // 1 or 2
  cplx a = 0.0;          // simple-root residue A
  cplx b = 0.0;          // double-root first-order residue B
  cplx c = 0.0;          // double-root second-order coefficient C
};

// Partial fractions of 1/q for root multiplicities at most 2. Roots with
// higher multiplicity raise InvalidInputError: the exponential-polynomial
// machinery built on top only ever needs single and double roots.
std::vector<PartialFractionTerm> partial_fractions(
    const std::vector<cplx>& lambda, double tol = 1e-9);

}  // namespace polyann
