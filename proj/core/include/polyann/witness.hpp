#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polyann/models.hpp"

namespace polyann {

// Scalar test function with exact derivatives. The witness searches only
// need f and f'; the second-order bound check also uses f''.
struct TestFunction {
  std::function<double(double)> f;
  std::function<double(double)> df;
  std::function<double(double)> ddf;
};

// Outcome of one numeric witness search or inequality check. `witness`
// carries the located point or the fitted constants, depending on the
// check; `passed` holds exactly when residual <= tolerance.
struct WitnessReport {
  std::string theorem_id;
  std::string inputs;
  std::vector<double> witness;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

// Weighted Rolle point: given e^{-lambda a} f(a) = e^{-lambda b} f(b)
// (required to 1e-10, else PreconditionError), locates xi in (a, b) with
// (f' - lambda f)(xi) = 0 by a 256-point scan followed by bisection.
// A missing sign change is reported as passed = false, with the scan's
// best point and residual.
WitnessReport rolle_point(const TestFunction& fn, double lambda, double a,
                          double b);

// Weighted mean-value point: locates xi in (a, b) where f' - lambda f
// meets lambda (e^{lambda a} f(b) - e^{lambda b} f(a)) /
// (e^{lambda b} - e^{lambda a}). lambda must be nonzero and a < b.
WitnessReport mean_value_point(const TestFunction& fn, double lambda,
                               double a, double b);

// Endpoint bound on the first generalized derivative:
//   |(f' - lambda0 f)(a)| <= 4 e^{(|l0|+|l1|)(b-a)}/(b-a) max{|f(a)|,|f(b)|}
//                          + 2 max_[a,b]|D_l1 D_l0 f| (b-a) e^{|l1|(b-a)}
// evaluated with exact derivatives and a grid maximum for the second
// generalized derivative. Also verifies the exponential ratio bound (below)
// for each nonzero lambda. The witness carries {lhs, rhs}.
WitnessReport check_odd_derivative_bound(const TestFunction& fn,
                                         double lambda0, double lambda1,
                                         double a, double b);

// |lambda (e^{lambda a} + e^{lambda b}) / (e^{lambda a} - e^{lambda b})|
// <= 2 e^{|lambda|(b-a)} / (b-a), for nonzero lambda and a < b.
WitnessReport exp_ratio_bound(double lambda, double a, double b);

// Even-to-odd derivative control for one coefficient slot of a model: for
// every m <= n_max and x on a 64-point grid over [v0, v0+delta],
//   |D^(2m+1) g(x)| <= 2 max{2/delta, delta} e^{(|l_{2m}|+|l_{2m+1}|) delta}
//                      (max |D^(2m)| + max |D^(2m+2)|),
// the maxima running over [v0, v0+2 delta]. Afterwards fits the envelope
// |D^(2n+1)| <= C2 (2n+1)! (sigma+eps)^{2n+1} with sigma from the even
// orders; the witness carries {sigma, C2}. Requires exp of the whole
// doubled interval inside the model's annulus.
WitnessReport check_even_to_odd(const AnnularModel& m, int k, int l,
                                double v0, double delta, int n_max);

// JSON array with one record per report, byte-stable for fixed inputs.
std::string witness_reports_to_json(const std::vector<WitnessReport>& reports);

}  // namespace polyann
