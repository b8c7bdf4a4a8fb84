#include "polyann/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <map>
#include <mutex>

#include "polyann/errors.hpp"

namespace polyann {

namespace {

// Legendre P_n and P_n' at x by the three-term recurrence.
std::pair<double, double> legendre_pair(int n, double x) {
  double p0 = 1.0, p1 = x;
  if (n == 0) return {1.0, 0.0};
  for (int j = 2; j <= n; ++j) {
    double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

GaussLegendreRule build_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Standard initial guess, then Newton.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      auto [p, dp] = legendre_pair(n, x);
      double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    auto [p, dp] = legendre_pair(n, x);
    (void)p;
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  if (n < 1) throw InvalidInputError("gauss_legendre: need at least one node");
  static std::map<int, GaussLegendreRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

namespace {

std::complex<double> panel(const std::function<std::complex<double>(double)>& f,
                           double a, double b) {
  const auto& rule = gauss_legendre(15);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  std::complex<double> sum = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

std::complex<double> refine(const std::function<std::complex<double>(double)>& f,
                            double a, double b, std::complex<double> whole,
                            double abs_tol, int depth, int max_depth) {
  double mid = 0.5 * (a + b);
  std::complex<double> left = panel(f, a, mid);
  std::complex<double> right = panel(f, mid, b);
  std::complex<double> split = left + right;
  if (std::abs(split - whole) <= abs_tol) return split;
  if (depth >= max_depth)
    throw TruncationError("integrate_adaptive: bisection depth exhausted",
                          std::abs(split - whole));
  return refine(f, a, mid, left, 0.5 * abs_tol, depth + 1, max_depth) +
         refine(f, mid, b, right, 0.5 * abs_tol, depth + 1, max_depth);
}

}  // namespace

std::complex<double> integrate_adaptive(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  return refine(f, a, b, panel(f, a, b), abs_tol, 0, max_depth);
}

}  // namespace polyann
