#include "polyann/taylor.hpp"

#include <cmath>
#include <limits>

#include "polyann/errors.hpp"
#include "polyann/quadrature.hpp"

namespace polyann {

namespace {

constexpr double kZeroThreshold = 1e-9;
constexpr std::size_t kMinCoeffs = 12;

// Top third of the index range, never including n = 0.
std::size_t window_start(std::size_t count) {
  std::size_t start = (2 * count) / 3;
  return start == 0 ? 1 : start;
}

}  // namespace

GeneralizedTaylorSeries taylor_expand(const SmoothFunction& f,
                                      const ExponentSequence& exponents,
                                      double x0, std::size_t N) {
  GeneralizedTaylorSeries out;
  out.x0 = x0;
  out.exponents = exponents;
  out.coeffs.resize(N + 1);

  if (const auto* es = dynamic_cast<const ExpSum*>(&f)) {
    // Exponential polynomials stay in the family under each factor
    // (d/dx - lambda), so walk the chain once instead of expanding the
    // operator polynomial at every order.
    ExpSum cur = *es;
    for (std::size_t n = 0; n <= N; ++n) {
      out.coeffs[n] = cur(x0);
      if (n < N) cur = cur.apply_D(exponents.at(n));
    }
  } else {
    for (std::size_t n = 0; n <= N; ++n) {
      out.coeffs[n] = generalized_derivative(f, exponents, n, x0);
    }
  }

  if (out.coeffs.size() >= kMinCoeffs) {
    double est = root_test_estimate(out.coeffs);
    out.R_star = est == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / est;
    out.radius = convergence_radius(out.coeffs, exponents.beta());
    out.sigma = sigma_estimate(out.coeffs);
  }
  return out;
}

cplx taylor_term(const GeneralizedTaylorSeries& s, std::size_t n, cplx x) {
  if (n >= s.coeffs.size()) {
    throw InvalidInputError("taylor_term: order exceeds stored coefficients");
  }
  FundamentalFunction phi(s.exponents.prefix(n));
  return s.coeffs[n] * phi.eval(x - s.x0);
}

cplx taylor_partial_sum(const GeneralizedTaylorSeries& s, std::size_t m, cplx x) {
  if (m >= s.coeffs.size()) {
    throw InvalidInputError(
        "taylor_partial_sum: order exceeds stored coefficients");
  }
  cplx acc = 0.0;
  for (std::size_t n = 0; n <= m; ++n) {
    if (s.coeffs[n] == cplx(0.0)) continue;
    FundamentalFunction phi(s.exponents.prefix(n));
    acc += s.coeffs[n] * phi.eval(x - s.x0);
  }
  return acc;
}

cplx taylor_remainder(const SmoothFunction& f, const ExponentSequence& exponents,
                      double x0, std::size_t m, double x, double abs_tol,
                      int max_depth) {
  if (x < x0) {
    throw InvalidInputError("taylor_remainder: x must satisfy x >= x0");
  }
  if (x == x0) return 0.0;

  FundamentalFunction phi(exponents.prefix(m));

  if (const auto* es = dynamic_cast<const ExpSum*>(&f)) {
    ExpSum dm1 = es->apply_generalized(exponents.prefix(m));  // D^(m+1) f
    auto integrand = [&](double t) { return dm1(t) * phi.eval(cplx(x - t)); };
    return integrate_adaptive(integrand, x0, x, abs_tol, max_depth);
  }
  auto integrand = [&](double t) {
    return generalized_derivative(f, exponents, m + 1, t) *
           phi.eval(cplx(x - t));
  };
  return integrate_adaptive(integrand, x0, x, abs_tol, max_depth);
}

double root_test_estimate(const std::vector<cplx>& coeffs) {
  if (coeffs.size() < kMinCoeffs) {
    throw InvalidInputError(
        "root_test_estimate: at least 12 coefficients required");
  }
  double est = 0.0;
  std::vector<double> log_n, log_v;
  for (std::size_t n = window_start(coeffs.size()); n < coeffs.size(); ++n) {
    double a = std::abs(coeffs[n]);
    if (a == 0.0) continue;
    double v = std::exp((std::log(a) - std::lgamma(double(n) + 1.0)) / double(n));
    est = std::max(est, v);
    log_n.push_back(std::log(double(n)));
    log_v.push_back(std::log(v));
  }
  // Tail extrapolation: the root-test values of an entire function decay
  // like a power of n, so a decisive negative log-log trend across the
  // window means the limsup is 0 even though every sample is positive.
  if (log_n.size() >= 3) {
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < log_n.size(); ++i) {
      mx += log_n[i];
      my += log_v[i];
    }
    mx /= double(log_n.size());
    my /= double(log_n.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < log_n.size(); ++i) {
      sxy += (log_n[i] - mx) * (log_v[i] - my);
      sxx += (log_n[i] - mx) * (log_n[i] - mx);
    }
    if (sxx > 0.0 && sxy / sxx <= -0.5) return 0.0;
  }
  return est < kZeroThreshold ? 0.0 : est;
}

double convergence_radius(const std::vector<cplx>& coeffs, double beta) {
  if (beta < 0.0) {
    throw InvalidInputError("convergence_radius: beta must be nonnegative");
  }
  double est = root_test_estimate(coeffs);
  double r_star =
      est == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / est;
  if (beta == 0.0) return r_star;
  return std::log1p(beta * r_star) / beta;
}

double sigma_estimate(const std::vector<cplx>& coeffs) {
  if (coeffs.size() < kMinCoeffs) {
    throw InvalidInputError("sigma_estimate: at least 12 coefficients required");
  }
  double est = 0.0;
  std::size_t start = window_start(coeffs.size());
  if (start % 2 == 1) ++start;
  for (std::size_t n = start; n < coeffs.size(); n += 2) {
    double a = std::abs(coeffs[n]);
    if (a == 0.0) continue;
    double v = std::exp((std::log(a) - std::lgamma(double(n) + 1.0)) / double(n));
    est = std::max(est, v);
  }
  return est;
}

double radius_from_sigma(double sigma, double beta) {
  if (sigma <= 0.0) return std::numeric_limits<double>::infinity();
  if (beta < 0.0) {
    throw InvalidInputError("radius_from_sigma: beta must be nonnegative");
  }
  if (beta == 0.0) return 1.0 / sigma;
  return std::log1p(beta / sigma) / beta;
}

}  // namespace polyann
