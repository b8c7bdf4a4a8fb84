#include "polyann/smooth.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "polyann/errors.hpp"

namespace polyann {

ExpSum::ExpSum(std::vector<Term> terms) : terms_(std::move(terms)) {
  compress();
}

void ExpSum::compress() {
  // key on (exponent bits, power) so exactly-equal exponents merge
  std::map<std::tuple<double, double, unsigned>, cplx> merged;
  for (const auto& t : terms_)
    merged[{t.exponent.real(), t.exponent.imag(), t.power}] += t.coeff;
  terms_.clear();
  for (const auto& [key, coeff] : merged) {
    if (coeff == cplx(0.0)) continue;
    terms_.push_back({coeff, cplx(std::get<0>(key), std::get<1>(key)),
                      std::get<2>(key)});
  }
}

ExpSum ExpSum::constant(cplx c) { return ExpSum({{c, 0.0, 0}}); }

ExpSum ExpSum::exponential(cplx mu, cplx c) { return ExpSum({{c, mu, 0}}); }

ExpSum ExpSum::monomial(unsigned s, cplx c) { return ExpSum({{c, 0.0, s}}); }

ExpSum ExpSum::polynomial(const std::vector<cplx>& coeffs) {
  std::vector<Term> terms;
  for (unsigned i = 0; i < coeffs.size(); ++i)
    terms.push_back({coeffs[i], 0.0, i});
  return ExpSum(std::move(terms));
}

ExpSum ExpSum::sine(double freq) {
  const cplx i(0.0, 1.0);
  return ExpSum({{1.0 / (2.0 * i), i * freq, 0}, {-1.0 / (2.0 * i), -i * freq, 0}});
}

ExpSum ExpSum::cosine(double freq) {
  const cplx i(0.0, 1.0);
  return ExpSum({{0.5, i * freq, 0}, {0.5, -i * freq, 0}});
}

ExpSum ExpSum::differentiate() const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exponent != cplx(0.0)) out.push_back({t.coeff * t.exponent, t.exponent, t.power});
    if (t.power > 0)
      out.push_back({t.coeff * static_cast<double>(t.power), t.exponent, t.power - 1});
  }
  return ExpSum(std::move(out));
}

ExpSum ExpSum::apply_D(cplx lambda) const {
  ExpSum d = differentiate();
  std::vector<Term> out = d.terms_;
  for (const auto& t : terms_) out.push_back({-lambda * t.coeff, t.exponent, t.power});
  return ExpSum(std::move(out));
}

ExpSum ExpSum::apply_generalized(const std::vector<cplx>& lambda) const {
  ExpSum cur = *this;
  for (cplx l : lambda) cur = cur.apply_D(l);
  return cur;
}

ExpSum ExpSum::operator+(const ExpSum& other) const {
  std::vector<Term> out = terms_;
  out.insert(out.end(), other.terms_.begin(), other.terms_.end());
  return ExpSum(std::move(out));
}

ExpSum ExpSum::operator*(const ExpSum& other) const {
  std::vector<Term> out;
  for (const auto& a : terms_)
    for (const auto& b : other.terms_)
      out.push_back({a.coeff * b.coeff, a.exponent + b.exponent, a.power + b.power});
  return ExpSum(std::move(out));
}

ExpSum ExpSum::scaled(cplx factor) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff *= factor;
  return ExpSum(std::move(out));
}

cplx ExpSum::derivative(std::size_t order, double x) const {
  ExpSum cur = *this;
  for (std::size_t i = 0; i < order; ++i) cur = cur.differentiate();
  cplx acc = 0.0;
  for (const auto& t : cur.terms_) {
    cplx v = t.coeff;
    for (unsigned p = 0; p < t.power; ++p) v *= x;
    if (t.exponent != cplx(0.0)) v *= std::exp(t.exponent * x);
    acc += v;
  }
  return acc;
}

std::vector<cplx> operator_poly_coeffs(const std::vector<cplx>& lambda) {
  std::vector<cplx> c{1.0};  // empty product
  for (cplx l : lambda) {
    // multiply by (X - l)
    std::vector<cplx> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= l * c[i];
    }
    c = std::move(next);
  }
  return c;
}

cplx generalized_derivative(const SmoothFunction& f,
                            const ExponentSequence& exponents, std::size_t n,
                            double x) {
  if (n == 0) return f.derivative(0, x);
  if (auto cap = f.max_derivative_order(); cap && *cap < n)
    throw CapabilityError(
        "generalized_derivative: handle cannot supply derivative order " +
        std::to_string(n));
  std::vector<cplx> lambda(n);
  for (std::size_t j = 0; j < n; ++j) lambda[j] = exponents.at(j);
  std::vector<cplx> c = operator_poly_coeffs(lambda);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != cplx(0.0)) acc += c[i] * f.derivative(i, x);
  return acc;
}

}  // namespace polyann
