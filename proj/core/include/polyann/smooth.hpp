#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "polyann/exponents.hpp"

namespace polyann {

// A function handle that can produce exact ordinary derivatives of any
// requested order at a point. order = 0 is the value itself.
class SmoothFunction {
public:
  virtual ~SmoothFunction() = default;
  virtual cplx derivative(std::size_t order, double x) const = 0;
  // nullopt = unlimited. Handles with a finite ceiling make the generalized
  // derivative raise CapabilityError instead of silently returning garbage.
  virtual std::optional<std::size_t> max_derivative_order() const {
    return std::nullopt;
  }
  cplx operator()(double x) const { return derivative(0, x); }
};

// Exponential polynomial sum c * x^s * e^{mu x}. Closed under
// differentiation and under the first-order factors (d/dx - lambda), which
// makes it the workhorse test function of the whole suite: constants,
// polynomials, sinusoids (complex exponents), and products all fit.
class ExpSum : public SmoothFunction {
public:
  struct Term {
    cplx coeff;
    cplx exponent;   // mu
    unsigned power;  // s
  };

  ExpSum() = default;
  explicit ExpSum(std::vector<Term> terms);

  static ExpSum constant(cplx c);
  static ExpSum exponential(cplx mu, cplx c = 1.0);          // c e^{mu x}
  static ExpSum monomial(unsigned s, cplx c = 1.0);          // c x^s
  static ExpSum polynomial(const std::vector<cplx>& coeffs); // sum c_i x^i
  static ExpSum sine(double freq);                           // sin(freq x)
  static ExpSum cosine(double freq);                         // cos(freq x)

  cplx derivative(std::size_t order, double x) const override;

  ExpSum differentiate() const;
  // (d/dx - lambda) applied symbolically.
  ExpSum apply_D(cplx lambda) const;
  // (d/dx - lambda_0)...(d/dx - lambda_{n-1}) applied symbolically.
  ExpSum apply_generalized(const std::vector<cplx>& lambda) const;

  ExpSum operator+(const ExpSum& other) const;
  ExpSum operator*(const ExpSum& other) const;
  ExpSum scaled(cplx factor) const;

  const std::vector<Term>& terms() const { return terms_; }

private:
  void compress();  // merge duplicate (exponent, power) keys, drop zeros
  std::vector<Term> terms_;
};

// Coefficients c_0..c_n of the operator polynomial
// prod_{j=0}^{n-1} (X - lambda_j) = sum_i c_i X^i, built incrementally.
std::vector<cplx> operator_poly_coeffs(const std::vector<cplx>& lambda);

// D^(n) f(x) = (d/dx - lambda_0)...(d/dx - lambda_{n-1}) f(x), expanded over
// ordinary derivatives of f. n = 0 returns f(x).
cplx generalized_derivative(const SmoothFunction& f,
                            const ExponentSequence& exponents, std::size_t n,
                            double x);

}  // namespace polyann
