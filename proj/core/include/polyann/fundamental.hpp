#pragma once

#include <optional>
#include <vector>

#include "polyann/exponents.hpp"
#include "polyann/symbols.hpp"

namespace polyann {

// Closed-form families for the fundamental solution Phi of the Cauchy
// problem Phi^(k)(0) = 0 (k < n), Phi^(n)(0) = 1 attached to the operator
// (d/dx - lambda_0)...(d/dx - lambda_n).
enum class ClosedForm { Polynomial, Equidistant, DistinctRoots, RepeatedRoots, None };

enum class EvalStrategy { Series, Contour, ClosedFormula };

struct ContourOptions {
  // 0 means automatic: 2 * max(1, max|lambda_j|).
  double radius = 0.0;
  int initial_nodes = 512;
  double tol = 1e-12;
  int max_doublings = 8;
};

struct SeriesOptions {
  double rel_tol = 1e-12;
  std::size_t max_terms = 10000;
};

// Taylor coefficients Phi^(k)(0) for k = 0..K via the complete homogeneous
// symmetric polynomial recurrence h_m(l_0..l_j) = h_m(l_0..l_{j-1}) +
// l_j * h_{m-1}(l_0..l_j): entries below n are exactly 0, entry n exactly 1,
// entry n+m equals h_m(lambda_0,...,lambda_n).
std::vector<cplx> fundamental_taylor_coeffs(const std::vector<cplx>& lambda,
                                            std::size_t K);

// Phi for a fixed exponent prefix (lambda_0,...,lambda_n), n = size - 1.
class FundamentalFunction {
public:
  explicit FundamentalFunction(std::vector<cplx> lambda_prefix);
  static FundamentalFunction from_sequence(const ExponentSequence& seq,
                                           std::size_t n);

  std::size_t order() const { return lambda_.size() - 1; }  // n
  const std::vector<cplx>& exponents() const { return lambda_; }
  const std::vector<RootCluster>& multiplicity_table() const { return roots_; }
  ClosedForm closed_form() const { return closed_form_; }
  // Equidistant parameters lambda_j = offset + j*step (step may be 0, which
  // covers the pure-power and shifted-power cases).
  cplx equi_offset() const { return equi_offset_; }
  cplx equi_step() const { return equi_step_; }
  double max_abs_exponent() const { return max_abs_; }

  std::vector<cplx> taylor_coeffs(std::size_t K) const;

  cplx eval(cplx z, EvalStrategy strategy) const;
  // Best available: closed formula when one exists, otherwise the series.
  cplx eval(cplx z) const;

  cplx eval_series(cplx z, const SeriesOptions& opts = {}) const;
  cplx eval_contour(cplx z, const ContourOptions& opts = {}) const;
  cplx eval_closed_formula(cplx z) const;

private:
  std::vector<cplx> lambda_;
  std::vector<RootCluster> roots_;
  std::vector<PartialFractionTerm> pf_;  // filled for the root-based forms
  ClosedForm closed_form_ = ClosedForm::None;
  cplx equi_offset_ = 0.0, equi_step_ = 0.0;
  double max_abs_ = 0.0;
};

// Moment (1/2pi i) * integral of w^k / q(w) over a circle enclosing all
// exponents; equals the k-th Taylor coefficient of Phi. Independent of the
// recurrence, so it serves as a cross-check oracle.
cplx contour_moment(const std::vector<cplx>& lambda, std::size_t k,
                    const ContourOptions& opts = {});

// |central difference of Phi_{n+1} at z  -  lambda_{n+1} Phi_{n+1}(z)
//  - Phi_n(z)|. The one-exponent extension identity makes this O(h^2).
double check_recursion(const FundamentalFunction& phi_np1,
                       const FundamentalFunction& phi_n, cplx z, double h);

// (1/n!) |z|^n e^{M_n |z|} with M_n = max|lambda_j|: dominates |Phi(z)|
// everywhere.
double bound_fundamental_max(const std::vector<cplx>& lambda, double abs_z);

// (1/n!) e^{alpha |z|} ((e^{(1+eps) beta |z|} - 1) / ((1+eps) beta))^n for
// prefixes with |lambda_j| <= alpha + (1+eps) beta j. beta = 0 is rejected
// (use the max bound); a prefix violating the growth claim is rejected too.
double bound_fundamental_linear_growth(const std::vector<cplx>& lambda,
                                       double abs_z, double alpha, double beta,
                                       double eps);

}  // namespace polyann
