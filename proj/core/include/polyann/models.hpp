#pragma once

#include <string>
#include <vector>

#include "polyann/harmonics.hpp"

namespace polyann {

enum class ModelFamily { Harmonic, Power, Exponential, Eigen };

// One harmonic building block alpha r^k Y_{k,l} + beta r^{-k-d+2} Y_{k,l}.
struct HarmonicTerm {
  int k = 0;
  int l = 1;
  double alpha = 0.0;
  double beta = 0.0;
};

// A concrete function on an annulus with closed-form Laplacian iterates and
// radial derivatives. These are the only inputs the extension machinery
// accepts: it needs exact high-order data, not black-box point values.
class AnnularModel {
public:
  // Sum of harmonic terms; log_coeff adds beta_0 log r (d = 2 only, the
  // degree-0 second solution).
  static AnnularModel harmonic(int d, double r0, double r1,
                               std::vector<HarmonicTerm> terms,
                               double log_coeff = 0.0);
  // |x|^{2 alpha} r^k Y_{k,l}(theta) = r^{2 alpha + k} Y_{k,l}(theta).
  static AnnularModel power(int d, double r0, double r1, double alpha, int k,
                            int l);
  // e^{a . x}.
  static AnnularModel exponential(int d, double r0, double r1, const Vec3& a);
  // Laplace eigenfunction with real eigenvalue: e^{sqrt(lambda) u.x} for
  // lambda > 0, cos(sqrt(-lambda) u.x) for lambda < 0, constant 1 for
  // lambda = 0; u is normalized internally.
  static AnnularModel eigen(int d, double r0, double r1, double lambda,
                            const Vec3& direction);

  ModelFamily family() const { return family_; }
  int dimension() const { return d_; }
  double r0() const { return r0_; }
  double r1() const { return r1_; }
  // Upper bound on the polyharmonic type the family is known to satisfy.
  double tau_claimed() const;

  double eval(const Vec3& x) const { return laplacian_iterate(0, x); }
  // Delta^p f(x), by the family's closed form.
  double laplacian_iterate(int p, const Vec3& x) const;
  // d/dr [Delta^p f](r theta) at r = |x|, theta = x/|x|.
  double radial_derivative(int p, const Vec3& x) const;

  // Parameter access for serialization and tests.
  const std::vector<HarmonicTerm>& harmonic_terms() const { return terms_; }
  double log_coeff() const { return log_coeff_; }
  double power_alpha() const { return alpha_; }
  int power_k() const { return k_; }
  int power_l() const { return l_; }
  const Vec3& exp_vector() const { return a_; }
  double eigen_lambda() const { return lambda_; }
  const Vec3& eigen_direction() const { return a_; }

private:
  AnnularModel(ModelFamily f, int d, double r0, double r1);
  void check_inside(const Vec3& x) const;

  ModelFamily family_;
  int d_;
  double r0_, r1_;
  std::vector<HarmonicTerm> terms_;  // harmonic
  double log_coeff_ = 0.0;           // harmonic, d = 2
  double alpha_ = 0.0;               // power
  int k_ = 0, l_ = 1;                // power
  Vec3 a_{};                         // exponential direction / eigen direction
  double lambda_ = 0.0;              // eigen
  mutable std::vector<HarmonicBasis> basis_cache_;
  const HarmonicBasis& basis(int k) const;
};

// c_{alpha,p}: the closed-form coefficient of Delta^p applied to
// r^{2 alpha + k} Y_k, i.e. prod_{j<p} (2a-2j)(2a+d-2+2k-2j). Vanishes
// exactly on the integer lattice alpha in {0..p-1} u {1-d/2-k+j : j <= p-1}.
double power_family_coefficient(double alpha, int k, int d, int p);

// t_p = (max_K |Delta^p f| / (2p)!)^{1/(2p)} for p = 1..p_max, the max taken
// over a tensor sample grid of the closed sub-annulus [a,b] of the model's
// annulus. The tail of the sequence estimates the polyharmonic type.
std::vector<double> estimate_type(const AnnularModel& m, double a, double b,
                                  int p_max);

// JSON round-trip. Schema:
// {"family": "harmonic"|"power"|"exponential"|"eigen", "d": int,
//  "r0": num, "r1": num, "parameters": {...}} with parameters per family:
//  harmonic: {"terms": [{"k","l","alpha","beta"}...], "log_coeff": num}
//  power: {"alpha": num, "k": int, "l": int}
//  exponential: {"a": [num...]}
//  eigen: {"lambda": num, "direction": [num...]}
AnnularModel model_from_json(const std::string& text);
AnnularModel load_model(const std::string& path);
std::string model_to_json(const AnnularModel& m);

}  // namespace polyann
