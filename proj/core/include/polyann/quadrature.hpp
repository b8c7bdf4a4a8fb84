#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace polyann {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;  // positive, sum to 2
};

// Nodes and weights of the n-point Gauss-Legendre rule, computed by Newton
// iteration on the Legendre polynomial. Results are cached per n.
const GaussLegendreRule& gauss_legendre(int n);

// Adaptive integration of a complex-valued integrand over [a, b]: a 15-point
// Gauss-Legendre panel is accepted when it agrees with its two-half split to
// abs_tol, otherwise the panel is bisected. Throws TruncationError when the
// depth limit is exceeded before the tolerance is met.
std::complex<double> integrate_adaptive(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol = 1e-10, int max_depth = 20);

}  // namespace polyann
