#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace polyann {

using cplx = std::complex<double>;

enum class SequenceKind { ExplicitList, BoundedRule, LinearGrowthRule };

// A sequence of exponents lambda_0, lambda_1, ... together with its growth
// class. Bounded sequences carry sup|lambda_n|; linear-growth sequences carry
// (alpha, beta) with |lambda_n| <= alpha + beta*n. Instances are immutable.
class ExponentSequence {
public:
  static ExponentSequence explicit_list(std::vector<cplx> values);
  static ExponentSequence bounded(std::function<cplx(std::size_t)> rule,
                                  double bound);
  static ExponentSequence linear_growth(std::function<cplx(std::size_t)> rule,
                                        double alpha, double beta);

  // Common cases used throughout the tests and the CLI.
  static ExponentSequence zeros();                  // lambda_n = 0
  static ExponentSequence constant(cplx value);     // lambda_n = value
  static ExponentSequence shifted_integers();       // lambda_n = n + 1
  static ExponentSequence arithmetic(cplx offset, cplx step);  // offset + n*step

  SequenceKind kind() const { return kind_; }
  cplx at(std::size_t n) const;
  std::vector<cplx> prefix(std::size_t n) const;  // lambda_0 .. lambda_n

  double beta() const { return beta_; }
  double alpha() const { return alpha_; }
  std::optional<double> bound() const { return bound_; }
  // Length of the underlying list; nullopt for rule-backed sequences.
  std::optional<std::size_t> length() const;

  // Asserts the growth claim on the prefix lambda_0..lambda_n. Returns the
  // largest observed |lambda_j| - (claimed bound at j); <= 0 when satisfied.
  double growth_slack(std::size_t n) const;

private:
  ExponentSequence() = default;
  SequenceKind kind_ = SequenceKind::ExplicitList;
  std::vector<cplx> values_;
  std::function<cplx(std::size_t)> rule_;
  double beta_ = 0.0;
  double alpha_ = 0.0;
  std::optional<double> bound_;
};

}  // namespace polyann
