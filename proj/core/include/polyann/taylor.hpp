#pragma once

#include <optional>
#include <vector>

#include "polyann/exponents.hpp"
#include "polyann/fundamental.hpp"
#include "polyann/smooth.hpp"

namespace polyann {

// Expansion of f around x0 in the basis Phi_0, Phi_1, ... attached to an
// exponent sequence: f ~ sum_n a_n Phi_n(x - x0) with a_n the generalized
// derivatives of f at x0.
struct GeneralizedTaylorSeries {
  double x0 = 0.0;
  std::vector<cplx> coeffs;  // a_n, n = 0..N
  ExponentSequence exponents = ExponentSequence::zeros();
  // Root-test data; empty when fewer than 12 coefficients are available.
  std::optional<double> R_star;  // 1 / limsup |a_n/n!|^{1/n}, may be +inf
  std::optional<double> radius;  // (1/beta) ln(1 + beta R*) for beta>0, else R*
  std::optional<double> sigma;   // even-order growth rate estimate
};

GeneralizedTaylorSeries taylor_expand(const SmoothFunction& f,
                                      const ExponentSequence& exponents,
                                      double x0, std::size_t N);

// n-th term a_n Phi_n(x - x0).
cplx taylor_term(const GeneralizedTaylorSeries& s, std::size_t n, cplx x);

// Partial sum s_m(x) = sum_{n=0}^{m} a_n Phi_n(x - x0).
cplx taylor_partial_sum(const GeneralizedTaylorSeries& s, std::size_t m, cplx x);

// Remainder R_m(x) = integral_{x0}^{x} D^(m+1) f(t) Phi_m(x - t) dt by
// adaptive Gauss-Legendre quadrature; f(x) = s_m(x) + R_m(x). Only the right
// half-interval x >= x0 is defined.
cplx taylor_remainder(const SmoothFunction& f, const ExponentSequence& exponents,
                      double x0, std::size_t m, double x, double abs_tol = 1e-10,
                      int max_depth = 20);

// limsup |a_n/n!|^{1/n} estimated as the max over the top third of indices
// (at least 12 coefficients required); below the zero threshold 1e-9 the
// result is reported as 0, i.e. an infinite R*.
double root_test_estimate(const std::vector<cplx>& coeffs);

// R* = 1/root-test estimate mapped through the growth transform:
// (1/beta) ln(1 + beta R*) for beta > 0, R* itself for beta = 0. All-zero
// coefficient lists give +infinity, which is not an error.
double convergence_radius(const std::vector<cplx>& coeffs, double beta);

// Even-order growth rate: max over even indices in the top-third window of
// (|a_{2p}|/(2p)!)^{1/(2p)}.
double sigma_estimate(const std::vector<cplx>& coeffs);

// Disc radius (1/beta) ln(1 + beta/sigma) associated with an even-order
// growth rate; decreases in sigma and tends to 1/sigma as beta -> 0.
double radius_from_sigma(double sigma, double beta);

}  // namespace polyann
