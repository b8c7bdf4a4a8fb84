#pragma once

#include <array>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "polyann/exponents.hpp"

namespace polyann {

// Points of R^d / C^d for d <= 3; unused trailing components stay 0.
using Vec3 = std::array<double, 3>;
using CVec3 = std::array<cplx, 3>;

// Polynomial in up to three variables, stored as expanded monomials. The
// basis functions below keep this representation because the angular
// parametrization of the sphere does not extend to complex arguments,
// while a polynomial evaluates anywhere.
class MonomialPoly {
public:
  struct Term {
    double coeff;
    std::array<int, 3> exp;
  };

  MonomialPoly() = default;
  static MonomialPoly constant(double c);
  static MonomialPoly variable(int axis);  // x, y or z

  MonomialPoly operator+(const MonomialPoly& o) const;
  MonomialPoly operator*(const MonomialPoly& o) const;
  MonomialPoly scaled(double f) const;
  MonomialPoly pow(int e) const;

  double eval(const Vec3& p) const;
  cplx eval(const CVec3& p) const;

  const std::vector<Term>& terms() const { return terms_; }

private:
  void compress();
  std::vector<Term> terms_;
};

// Orthonormal real basis of degree-k spherical harmonics on S^{d-1},
// d in {2,3}. Each member is held as the solid harmonic polynomial
// r^k Y_{k,l}, so on the unit sphere it evaluates to Y_{k,l} directly and
// it extends to complex vectors without change.
class HarmonicBasis {
public:
  HarmonicBasis(int d, int k);

  int dimension() const { return d_; }
  int degree() const { return k_; }
  int count() const { return int(solid_.size()); }  // a_k
  double omega() const;                             // area of S^{d-1}

  // l = 1..a_k. theta must lie on the unit sphere.
  double eval(int l, const Vec3& theta) const;
  // Solid harmonic r^k Y_{k,l} at an arbitrary complex vector.
  cplx eval_solid(int l, const CVec3& z) const;

  const MonomialPoly& solid(int l) const;

private:
  int d_, k_;
  std::vector<MonomialPoly> solid_;
};

// Quadrature rule on S^{d-1}: equally spaced angles for d=2, Gauss-Legendre
// latitudes x equally spaced longitudes for d=3. Sized for exact integration
// of products of harmonics up to degree K_max.
struct SphereRule {
  int d = 2;
  int K_max = 0;
  std::vector<Vec3> points;     // unit vectors
  std::vector<double> weights;  // sum to omega(d)
};

SphereRule sphere_rule(int d, int K_max);

// Bases for k = 0..K_max plus the matching quadrature rule.
class SphericalContext {
public:
  SphericalContext(int d, int K_max);
  int dimension() const { return d_; }
  int max_degree() const { return kmax_; }
  const HarmonicBasis& basis(int k) const;
  const SphereRule& rule() const { return rule_; }

private:
  int d_, kmax_;
  SphereRule rule_;
  std::vector<HarmonicBasis> bases_;
};

using RadialFunction = std::function<double(const Vec3&)>;

// Coefficient integral of f against Y_{k,l} over the sphere of radius r.
// r must lie strictly inside (r0, r1).
cplx flc(const SphericalContext& ctx, const RadialFunction& f, int k, int l,
         double r, double r0, double r1);

// lhs = quadrature of |f(r theta)|^2, rhs = sum of |coefficients|^2 through
// degree K_max. Equal for band-limited f.
std::pair<double, double> parseval_check(const SphericalContext& ctx,
                                         const RadialFunction& f, double r,
                                         double r0, double r1);

// Action of the radial operator attached to degree k on r^mu:
// returns (mu(mu-1) + (d-1)mu - k(k+d-2), mu - 2). The coefficient vanishes
// exactly when mu is k or -k-d+2.
std::pair<cplx, cplx> apply_Lk_power(cplx mu, int k, int d);

// The exponent sequence lambda_{2j} = k+2j, lambda_{2j+1} = -k-d+2+2j, as a
// linear-growth sequence (alpha = k+d-2, beta = 1).
ExponentSequence exponent_sequence_for(int k, int d);

// Even-d bookkeeping: an odd index n carries a log term exactly when its
// exponent collides with an even-index exponent, i.e. lambda_n - k is a
// nonnegative even integer. Odd d never collides.
bool is_log_index(int k, int d, std::size_t n);
// The colliding even index 2l with the same exponent; only valid when
// is_log_index(k, d, n).
std::size_t collision_partner(int k, int d, std::size_t n);

// lhs = sum_l |r^k Y_{k,l}(z)|^2 over the degree-k basis, rhs =
// (a_k/omega) L_plus(z)^{2k}. The bound lhs <= rhs holds on all of C^d with
// equality on the real sphere.
std::pair<double, double> harmonic_addition_bound(const SphericalContext& ctx,
                                                  const CVec3& z, int k);

}  // namespace polyann
