#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "polyann/exponents.hpp"
#include "polyann/harmonics.hpp"
#include "polyann/lie.hpp"
#include "polyann/models.hpp"

namespace polyann {

// Generalized derivatives at v0 of the log-substituted coefficient
// g(v) = f_{k,l}(e^v), where f_{k,l} is the coefficient of the model against
// Y_{k,l}. Entry n is D^(n) g(v0) with D^(n) = (d/dv - lambda_{n-1}) ...
// (d/dv - lambda_0) for the sequence exponent_sequence_for(k, d). Even
// orders come from the iterated Laplacian, odd orders from its radial
// derivative, so every entry is quadrature-exact rather than differenced.
struct LogCoefficientJet {
  int k = 0;
  int l = 1;
  int d = 2;
  double v0 = 0.0;
  double tau = 0.0;  // growth rate the model certifies (tau_claimed)
  std::vector<cplx> derivs;  // D^(n) g(v0), n = 0..N
  ExponentSequence exponents = ExponentSequence::zeros();
};

// N+1 generalized derivatives of g at v0. Requires exp(v0) strictly inside
// the model's annulus.
LogCoefficientJet log_jet(const AnnularModel& m, int k, int l, double v0,
                          std::size_t N);

// Partial sum of the generalized Taylor series of a jet at a (possibly
// complex) log-variable point, with a geometric tail estimate fitted to the
// computed derivatives. `outside_guaranteed_disc` marks points beyond
// ln(1 + 1/(e^{v0} tau)) from v0, where convergence is no longer certified;
// the sum is still returned since it may converge anyway.
struct LogSeriesValue {
  cplx value = 0.0;
  double tail_estimate = 0.0;
  bool outside_guaranteed_disc = false;
};

LogSeriesValue taylor_in_log(const LogCoefficientJet& jet, cplx v);

// Exponential form of a coefficient: f_{k,l}(z) = sum_j a_j z^{lambda_j},
// split into even slots (exponents k+2j) and odd slots (exponents
// -k-d+2+2j). In even dimension an odd slot whose exponent collides with an
// even one carries an extra log z factor and is marked in log_flags.
// Slots whose defining sum over derivative orders is empty (2j or 2j+1
// exceeding the jet length) are stored as zero; trunc_error covers them.
struct ExtensionSeries {
  int k = 0;
  int l = 1;
  int d = 2;
  double v0 = 0.0;
  std::vector<cplx> coeffs_even;  // a_{2j}, j = 0..J
  std::vector<cplx> coeffs_odd;   // a_{2j+1}, j = 0..J
  std::vector<bool> log_flags;    // parallel to coeffs_odd; all false for odd d
  // Geometric bound on the per-coefficient truncation, anchored at the last
  // computed derivative term; +infinity when the ratio test fails (the
  // expansion point is too far out for the model's growth rate).
  double trunc_error = 0.0;
  ExponentSequence exponents = ExponentSequence::zeros();
};

// Rearranges a jet into coefficient form for odd dimension, where the
// exponents are pairwise distinct: a_j = e^{-lambda_j v0} sum_{n>=j}
// derivs[n] / q_n'(lambda_j) with q_n the product of (z - lambda_i), i<=n.
// Even dimension raises WrongBranchError; use extension_coeffs_even.
// A finite tail_tol turns an unachieved tail bound into TruncationError.
ExtensionSeries extension_coeffs(
    const LogCoefficientJet& jet, std::size_t J,
    double tail_tol = std::numeric_limits<double>::infinity());

// Even-dimension rearrangement. Each prefix symbol 1/q_n is decomposed by
// partial fractions with root multiplicities at most two; the double roots
// produced by exponent collisions contribute both a pure-exponential part
// (folded into the colliding even slot) and a log part (the flagged odd
// slot). Every partial-fraction coefficient is checked against the bound
// 2^n/(n-2)!; a violation or a multiplicity above two is an InternalError.
ExtensionSeries extension_coeffs_even(
    const LogCoefficientJet& jet, std::size_t J,
    double tail_tol = std::numeric_limits<double>::infinity());

// sum_j a_j z^{lambda_j} (+ log z factors on flagged slots), principal
// branch. z = 0 raises DomainError("origin"); in even dimension a z on the
// cut (-inf, 0] raises DomainError("cut"). Odd dimension has integer
// exponents only, so the cut does not apply there.
cplx eval_Fkl(const ExtensionSeries& s, cplx z);

// Split of a coefficient series into two ordinary power series in w = z^2:
// f_{k,l}(z) = z^k f1(z^2) + z^{2-d-k} f2(z^2). In even dimension the
// flagged slots are segregated into f2_log_coeffs (each pairs with a log z
// factor) and zeroed in f2_coeffs. The radii are root-test estimates in the
// z variable; a super-geometric coefficient decay reports +infinity.
struct LaurentSplit {
  int k = 0;
  int d = 2;
  std::vector<cplx> f1_coeffs;
  std::vector<cplx> f2_coeffs;
  std::vector<cplx> f2_log_coeffs;  // empty for odd d
  double radius_f1 = std::numeric_limits<double>::infinity();
  double radius_f2 = std::numeric_limits<double>::infinity();
};

LaurentSplit laurent_split(const ExtensionSeries& s);

// Analytic extension F(z) = f1(z) + q(z)^{(2-d)/2} f2(z) of a model from
// its annulus to complex points, assembled from the coefficient series of
// every harmonic slot through degree K_max:
//   f1(z) = sum_{k,l} sum_j a_{k,l,2j}   q(z)^j     (r^k Y_{k,l})(z)
//   f2(z) = sum_{k,l} sum_j a_{k,l,2j+1} q(z)^{j-k} (r^k Y_{k,l})(z)
// with q(z) = z_1^2 + ... + z_d^2 and principal branches throughout.
// Summation order is fixed (k ascending, then l, then j) so results are
// reproducible bit for bit.
class AnnularExtension {
 public:
  // Builds the coefficient series once. v0 defaults to the log-midpoint of
  // (r0, r_out); when given it must satisfy exp(v0) in (r0, r1).
  AnnularExtension(const AnnularModel& m, int K_max, std::size_t J,
                   std::size_t N = 40,
                   std::optional<double> v0 = std::nullopt);

  int dimension() const { return d_; }
  int max_degree() const { return kmax_; }
  double v0() const { return v0_; }
  double r0() const { return r0_; }
  // Outer radius of the certified evaluation domain: min(r1, 1/(2 tau)) for
  // positive tau, r1 otherwise.
  double r_out() const { return r_out_; }

  // Number of slots at degree k (the dimension a_k of the harmonic basis).
  int order_count(int k) const;
  // Coefficient series of slot (k, l), l = 1..a_k.
  const ExtensionSeries& series(int k, int l) const;

  // F at a complex point. Points outside the certified domain raise
  // DomainError carrying the violated constraint: "L-" (inner radius),
  // "L+" (outer radius), or "cut" (q(z) on (-inf, 0]).
  cplx eval(const CVec3& z) const;

 private:
  int d_ = 2;
  int kmax_ = 0;
  double r0_ = 0.0;
  double r_out_ = 0.0;
  double v0_ = 0.0;
  double tau_ = 0.0;
  SphericalContext ctx_;
  std::vector<std::vector<ExtensionSeries>> series_;  // [k][l-1]
};

// One-call form: build the extension of m and evaluate it at z.
cplx eval_extension(const AnnularModel& m, const CVec3& z, int K_max,
                    std::size_t J);

// JSON array of {k, l, j, re, im, log_flag} records, one per stored slot,
// with j the flat slot index (even exponents at 2j, odd at 2j+1). Order is
// k, then l, then j, ascending.
std::string extension_to_json(const AnnularExtension& ext);

}  // namespace polyann
