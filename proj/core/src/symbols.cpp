#include "polyann/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyann/errors.hpp"

namespace polyann {

namespace {

bool integer_valued(const std::vector<cplx>& lambda) {
  for (cplx v : lambda) {
    if (v.imag() != 0.0) return false;
    if (v.real() != std::round(v.real())) return false;
  }
  return true;
}

}  // namespace

std::vector<RootCluster> cluster_roots(const std::vector<cplx>& lambda,
                                       double tol) {
  double scale = 1.0;
  for (cplx v : lambda) scale = std::max(scale, std::abs(v));
  const bool exact = integer_valued(lambda);
  const double eps = exact ? 0.0 : tol * scale;

  std::vector<RootCluster> clusters;
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    RootCluster* home = nullptr;
    for (auto& c : clusters) {
      if (std::abs(lambda[j] - c.root) <= eps) {
        home = &c;
        break;
      }
    }
    if (!home) {
      clusters.push_back({lambda[j], 0, {}});
      home = &clusters.back();
    }
    home->multiplicity += 1;
    home->indices.push_back(j);
  }
  return clusters;
}

cplx symbol_eval(const std::vector<cplx>& lambda, cplx z) {
  cplx q = 1.0;
  for (cplx v : lambda) q *= (z - v);
  return q;
}

cplx symbol_derivative_at_root(const std::vector<cplx>& lambda, std::size_t j) {
  if (j >= lambda.size())
    throw InvalidInputError("symbol_derivative_at_root: index out of range");
  cplx q = 1.0;
  for (std::size_t s = 0; s < lambda.size(); ++s)
    if (s != j) q *= (lambda[j] - lambda[s]);
  return q;
}

double min_root_gap(const std::vector<cplx>& lambda) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = i + 1; j < lambda.size(); ++j)
      gap = std::min(gap, std::abs(lambda[i] - lambda[j]));
  return gap;
}

std::vector<PartialFractionTerm> partial_fractions(
    const std::vector<cplx>& lambda, double tol) {
  auto clusters = cluster_roots(lambda, tol);
  std::vector<PartialFractionTerm> terms;
  terms.reserve(clusters.size());
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    const auto& c = clusters[i];
    if (c.multiplicity > 2)
      throw InvalidInputError(
          "partial_fractions: root multiplicity above 2 is unsupported");
    // P(z) = q(z) with this cluster's factor removed, evaluated at the root.
    cplx P = 1.0;
    cplx logdiff = 0.0;  // P'(root)/P(root) = sum mult_s/(root - root_s)
    for (std::size_t s = 0; s < clusters.size(); ++s) {
      if (s == i) continue;
      cplx diff = c.root - clusters[s].root;
      for (int m = 0; m < clusters[s].multiplicity; ++m) P *= diff;
      logdiff += static_cast<double>(clusters[s].multiplicity) / diff;
    }
    PartialFractionTerm t;
    t.root = c.root;
    t.multiplicity = c.multiplicity;
    if (c.multiplicity == 1) {
      t.a = 1.0 / P;
    } else {
      t.c = 1.0 / P;
      t.b = -t.c * logdiff;
    }
    terms.push_back(t);
  }
  return terms;
}

}  // namespace polyann
