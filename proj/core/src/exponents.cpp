#include "polyann/exponents.hpp"

#include <algorithm>
#include <cmath>

#include "polyann/errors.hpp"

namespace polyann {

ExponentSequence ExponentSequence::explicit_list(std::vector<cplx> values) {
  if (values.empty())
    throw InvalidInputError("explicit exponent list must be nonempty");
  ExponentSequence s;
  s.kind_ = SequenceKind::ExplicitList;
  s.values_ = std::move(values);
  double m = 0.0;
  for (cplx v : s.values_) m = std::max(m, std::abs(v));
  s.bound_ = m;
  s.alpha_ = m;
  s.beta_ = 0.0;
  return s;
}

ExponentSequence ExponentSequence::bounded(std::function<cplx(std::size_t)> rule,
                                           double bound) {
  if (bound < 0) throw InvalidInputError("bound must be nonnegative");
  ExponentSequence s;
  s.kind_ = SequenceKind::BoundedRule;
  s.rule_ = std::move(rule);
  s.bound_ = bound;
  s.alpha_ = bound;
  s.beta_ = 0.0;
  return s;
}

ExponentSequence ExponentSequence::linear_growth(
    std::function<cplx(std::size_t)> rule, double alpha, double beta) {
  if (alpha < 0 || beta < 0)
    throw InvalidInputError("growth parameters must be nonnegative");
  ExponentSequence s;
  s.kind_ = SequenceKind::LinearGrowthRule;
  s.rule_ = std::move(rule);
  s.alpha_ = alpha;
  s.beta_ = beta;
  return s;
}

ExponentSequence ExponentSequence::zeros() {
  return bounded([](std::size_t) { return cplx(0.0); }, 0.0);
}

ExponentSequence ExponentSequence::constant(cplx value) {
  return bounded([value](std::size_t) { return value; }, std::abs(value));
}

ExponentSequence ExponentSequence::shifted_integers() {
  return linear_growth(
      [](std::size_t n) { return cplx(static_cast<double>(n) + 1.0); }, 1.0,
      1.0);
}

ExponentSequence ExponentSequence::arithmetic(cplx offset, cplx step) {
  double a = std::abs(offset), b = std::abs(step);
  if (b == 0.0) return constant(offset);
  return linear_growth(
      [offset, step](std::size_t n) {
        return offset + static_cast<double>(n) * step;
      },
      a, b);
}

cplx ExponentSequence::at(std::size_t n) const {
  if (kind_ == SequenceKind::ExplicitList) {
    if (n >= values_.size())
      throw InvalidInputError("exponent index beyond explicit list");
    return values_[n];
  }
  return rule_(n);
}

std::vector<cplx> ExponentSequence::prefix(std::size_t n) const {
  std::vector<cplx> out(n + 1);
  for (std::size_t j = 0; j <= n; ++j) out[j] = at(j);
  return out;
}

std::optional<std::size_t> ExponentSequence::length() const {
  if (kind_ == SequenceKind::ExplicitList) return values_.size();
  return std::nullopt;
}

double ExponentSequence::growth_slack(std::size_t n) const {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j <= n; ++j) {
    double cap = (kind_ == SequenceKind::LinearGrowthRule)
                     ? alpha_ + beta_ * static_cast<double>(j)
                     : bound_.value_or(alpha_);
    worst = std::max(worst, std::abs(at(j)) - cap);
  }
  return worst;
}

}  // namespace polyann
