#include "polyann/fundamental.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polyann/errors.hpp"

namespace polyann {

namespace {

constexpr double kGapGuard = 1e-4;  // below this the root-based formulas lose digits

// (e^w - 1)/w, stable near w = 0.
cplx expm1_over(cplx w) {
  if (std::abs(w) < 1e-3) {
    // relative error below 1e-16 for |w| < 1e-3
    return 1.0 + w * (0.5 + w * (1.0 / 6.0 + w * (1.0 / 24.0 + w / 120.0)));
  }
  return (std::exp(w) - 1.0) / w;
}

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t j = 2; j <= n; ++j) f *= static_cast<double>(j);
  return f;
}

}  // namespace

std::vector<cplx> fundamental_taylor_coeffs(const std::vector<cplx>& lambda,
                                            std::size_t K) {
  if (lambda.empty())
    throw InvalidInputError("fundamental_taylor_coeffs: empty exponent prefix");
  const std::size_t n = lambda.size() - 1;
  if (K < n)
    throw InvalidInputError(
        "fundamental_taylor_coeffs: K must reach the Cauchy order n");
  // h[m] = h_m(lambda_0..lambda_j) after processing variable j.
  std::vector<cplx> h(K - n + 1, 0.0);
  h[0] = 1.0;
  for (std::size_t j = 0; j < lambda.size(); ++j)
    for (std::size_t m = 1; m < h.size(); ++m) h[m] += lambda[j] * h[m - 1];
  std::vector<cplx> coeffs(K + 1, 0.0);
  for (std::size_t m = 0; m < h.size(); ++m) coeffs[n + m] = h[m];
  return coeffs;
}

FundamentalFunction::FundamentalFunction(std::vector<cplx> lambda_prefix)
    : lambda_(std::move(lambda_prefix)) {
  if (lambda_.empty())
    throw InvalidInputError("FundamentalFunction: empty exponent prefix");
  for (cplx v : lambda_) max_abs_ = std::max(max_abs_, std::abs(v));
  roots_ = cluster_roots(lambda_);

  const double scale = std::max(1.0, max_abs_);
  const double guard = kGapGuard * scale;

  bool all_zero = true;
  for (cplx v : lambda_)
    if (v != cplx(0.0)) all_zero = false;

  // Arithmetic progression? Covers the all-equal case with step 0.
  bool arithmetic = true;
  cplx step = lambda_.size() > 1 ? lambda_[1] - lambda_[0] : cplx(0.0);
  for (std::size_t j = 1; j + 1 < lambda_.size(); ++j)
    if (std::abs((lambda_[j + 1] - lambda_[j]) - step) > 1e-9 * scale)
      arithmetic = false;

  double distinct_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < roots_.size(); ++i)
    for (std::size_t j = i + 1; j < roots_.size(); ++j)
      distinct_gap = std::min(distinct_gap, std::abs(roots_[i].root - roots_[j].root));

  int max_mult = 0;
  for (const auto& c : roots_) max_mult = std::max(max_mult, c.multiplicity);

  if (all_zero) {
    closed_form_ = ClosedForm::Polynomial;
  } else if (arithmetic) {
    closed_form_ = ClosedForm::Equidistant;
    equi_offset_ = lambda_[0];
    equi_step_ = step;
  } else if (max_mult == 1 && distinct_gap >= guard) {
    closed_form_ = ClosedForm::DistinctRoots;
    pf_ = partial_fractions(lambda_);
  } else if (max_mult <= 2 && distinct_gap >= guard) {
    closed_form_ = ClosedForm::RepeatedRoots;
    pf_ = partial_fractions(lambda_);
  } else {
    closed_form_ = ClosedForm::None;
  }
}

FundamentalFunction FundamentalFunction::from_sequence(
    const ExponentSequence& seq, std::size_t n) {
  return FundamentalFunction(seq.prefix(n));
}

std::vector<cplx> FundamentalFunction::taylor_coeffs(std::size_t K) const {
  return fundamental_taylor_coeffs(lambda_, K);
}

cplx FundamentalFunction::eval(cplx z, EvalStrategy strategy) const {
  // The value at 0 is Cauchy data; every strategy reports it exactly.
  if (z == cplx(0.0)) return order() == 0 ? 1.0 : 0.0;
  switch (strategy) {
    case EvalStrategy::Series:
      return eval_series(z);
    case EvalStrategy::Contour:
      return eval_contour(z);
    case EvalStrategy::ClosedFormula:
      return eval_closed_formula(z);
  }
  throw InvalidInputError("eval: unknown strategy");
}

cplx FundamentalFunction::eval(cplx z) const {
  if (z == cplx(0.0)) return order() == 0 ? 1.0 : 0.0;
  if (closed_form_ != ClosedForm::None) return eval_closed_formula(z);
  return eval_series(z);
}

cplx FundamentalFunction::eval_series(cplx z, const SeriesOptions& opts) const {
  const std::size_t n = order();
  if (z == cplx(0.0)) return n == 0 ? 1.0 : 0.0;
  const double az = std::abs(z);
  const double expM = std::exp(max_abs_ * az);

  // Rows of complete homogeneous symmetric polynomials over the prefix:
  // row[j] = h_m(lambda_0..lambda_j) for the current m.
  std::vector<cplx> row(lambda_.size(), 1.0);
  // term factor z^{n+m}/(n+m)! for m = 0
  cplx tf = 1.0;
  for (std::size_t j = 1; j <= n; ++j) tf *= z / static_cast<double>(j);
  // envelope factor |z|^n/n! * (M|z|)^m / m!, m = 0
  double env = std::pow(az, static_cast<double>(n)) / factorial(n);

  cplx acc = tf;  // m = 0 term: h_0 = 1
  for (std::size_t m = 1; m <= opts.max_terms; ++m) {
    // advance h row to order m
    cplx prev = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      row[j] = prev + lambda_[j] * row[j];
      prev = row[j];
    }
    tf *= z / static_cast<double>(n + m);
    env *= max_abs_ * az / static_cast<double>(m);
    acc += row.back() * tf;
    // The tail after this term is at most sum_{m'>m} of the envelope, which
    // the exponential majorizes.
    double tail = env * (max_abs_ * az / (m + 1.0)) * expM;
    if (tail <= opts.rel_tol * std::max(std::abs(acc), 1e-300)) return acc;
    if (max_abs_ == 0.0) return acc;  // polynomial: single term
  }
  double tail = env * expM;
  throw TruncationError("eval_series: term cap reached before tolerance", tail);
}

namespace {

cplx contour_sum(const std::vector<cplx>& lambda, double r, int N,
                 const std::function<cplx(cplx)>& numerator) {
  cplx acc = 0.0;
  for (int j = 0; j < N; ++j) {
    double t = 2.0 * std::numbers::pi * j / N;
    cplx w = r * cplx(std::cos(t), std::sin(t));
    acc += numerator(w) / symbol_eval(lambda, w) * w;
  }
  return acc / static_cast<double>(N);
}

cplx contour_eval(const std::vector<cplx>& lambda, double max_abs,
                  const ContourOptions& opts,
                  const std::function<cplx(cplx)>& numerator) {
  double r = opts.radius > 0.0 ? opts.radius : 2.0 * std::max(1.0, max_abs);
  if (r <= max_abs)
    throw ConfigurationError(
        "contour radius must exceed every exponent modulus");
  int N = opts.initial_nodes;
  cplx prev = contour_sum(lambda, r, N, numerator);
  for (int d = 0; d < opts.max_doublings; ++d) {
    N *= 2;
    cplx cur = contour_sum(lambda, r, N, numerator);
    if (std::abs(cur - prev) <= opts.tol * std::max(1.0, std::abs(cur)))
      return cur;
    prev = cur;
  }
  return prev;  // geometric convergence: the last doubling is the best we have
}

}  // namespace

cplx FundamentalFunction::eval_contour(cplx z, const ContourOptions& opts) const {
  return contour_eval(lambda_, max_abs_, opts,
                      [z](cplx w) { return std::exp(z * w); });
}

cplx contour_moment(const std::vector<cplx>& lambda, std::size_t k,
                    const ContourOptions& opts) {
  if (lambda.empty())
    throw InvalidInputError("contour_moment: empty exponent prefix");
  double max_abs = 0.0;
  for (cplx v : lambda) max_abs = std::max(max_abs, std::abs(v));
  return contour_eval(lambda, max_abs, opts, [k](cplx w) {
    cplx p = 1.0;
    for (std::size_t i = 0; i < k; ++i) p *= w;
    return p;
  });
}

cplx FundamentalFunction::eval_closed_formula(cplx z) const {
  const std::size_t n = order();
  switch (closed_form_) {
    case ClosedForm::Polynomial: {
      cplx p = 1.0;
      for (std::size_t j = 1; j <= n; ++j) p *= z / static_cast<double>(j);
      return p;
    }
    case ClosedForm::Equidistant: {
      // exp(offset z) * ((e^{step z} - 1)/step)^n / n!; step -> 0 gives
      // exp(offset z) z^n / n!.
      cplx g = equi_step_ == cplx(0.0) ? z : expm1_over(equi_step_ * z) * z;
      cplx p = std::exp(equi_offset_ * z);
      for (std::size_t j = 1; j <= n; ++j) p *= g / static_cast<double>(j);
      return p;
    }
    case ClosedForm::DistinctRoots: {
      cplx acc = 0.0;
      for (const auto& t : pf_) acc += t.a * std::exp(t.root * z);
      return acc;
    }
    case ClosedForm::RepeatedRoots: {
      cplx acc = 0.0;
      for (const auto& t : pf_) {
        if (t.multiplicity == 1)
          acc += t.a * std::exp(t.root * z);
        else
          acc += (t.b + t.c * z) * std::exp(t.root * z);
      }
      return acc;
    }
    case ClosedForm::None:
      break;
  }
  throw InvalidInputError("eval_closed_formula: no closed form available");
}

double check_recursion(const FundamentalFunction& phi_np1,
                       const FundamentalFunction& phi_n, cplx z, double h) {
  if (h <= 0.0) throw InvalidInputError("check_recursion: h must be positive");
  const auto& big = phi_np1.exponents();
  const auto& small = phi_n.exponents();
  if (big.size() != small.size() + 1 ||
      !std::equal(small.begin(), small.end(), big.begin()))
    throw InvalidInputError(
        "check_recursion: first argument must extend the second by one exponent");
  cplx lam = big.back();
  cplx deriv = (phi_np1.eval(z + h) - phi_np1.eval(z - h)) / (2.0 * h);
  return std::abs(deriv - lam * phi_np1.eval(z) - phi_n.eval(z));
}

double bound_fundamental_max(const std::vector<cplx>& lambda, double abs_z) {
  if (lambda.empty())
    throw InvalidInputError("bound_fundamental_max: empty exponent prefix");
  if (abs_z < 0) throw InvalidInputError("bound_fundamental_max: |z| < 0");
  const std::size_t n = lambda.size() - 1;
  double M = 0.0;
  for (cplx v : lambda) M = std::max(M, std::abs(v));
  if (abs_z == 0.0) return n == 0 ? 1.0 : 0.0;
  double logb = -std::lgamma(static_cast<double>(n) + 1.0) +
                static_cast<double>(n) * std::log(abs_z) + M * abs_z;
  return std::exp(logb);
}

double bound_fundamental_linear_growth(const std::vector<cplx>& lambda,
                                       double abs_z, double alpha, double beta,
                                       double eps) {
  if (lambda.empty())
    throw InvalidInputError("bound_fundamental_linear_growth: empty prefix");
  if (beta == 0.0)
    throw InvalidInputError(
        "bound_fundamental_linear_growth: beta = 0 has no linear-growth bound; "
        "use the max bound");
  if (abs_z < 0 || beta < 0 || eps < 0)
    throw InvalidInputError("bound_fundamental_linear_growth: negative input");
  const double bt = (1.0 + eps) * beta;
  for (std::size_t j = 0; j < lambda.size(); ++j)
    if (std::abs(lambda[j]) > alpha + bt * static_cast<double>(j) + 1e-12)
      throw PreconditionError(
          "bound_fundamental_linear_growth: prefix violates |lambda_j| <= "
          "alpha + (1+eps) beta j");
  const std::size_t n = lambda.size() - 1;
  if (abs_z == 0.0) return n == 0 ? 1.0 : 0.0;
  double g = std::expm1(bt * abs_z) / bt;
  double logb = -std::lgamma(static_cast<double>(n) + 1.0) + alpha * abs_z +
                static_cast<double>(n) * std::log(g);
  return std::exp(logb);
}

}  // namespace polyann
