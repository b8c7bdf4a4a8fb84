#pragma once

#include <array>
#include <complex>

#include "polyann/exponents.hpp"
#include "polyann/harmonics.hpp"

namespace polyann {

// Geometry of a complex vector z: the quadric q(z) = z_1^2 + ... + z_d^2,
// the Hermitian norm square, and the two radii
//   L_pm = sqrt(|z|^2 pm sqrt(|z|^4 - |q|^2)).
// For real z both radii collapse to the Euclidean norm.
struct LiePoint {
  CVec3 z{};
  int d = 2;
  cplx q = 0.0;
  double norm_sq = 0.0;
  double L_plus = 0.0;
  double L_minus = 0.0;
};

LiePoint lie_point(const CVec3& z, int d);

// Numeric thickness of the branch cut (-infinity, 0] of the half-power and
// logarithm of q.
inline constexpr double kCutImagTol = 1e-12;

inline bool on_log_cut(cplx q) {
  return q.real() <= 0.0 && std::abs(q.imag()) <= kCutImagTol;
}

// r0 < L_minus and L_plus < r1; with exclude_cut also q(z) off the cut.
bool lie_annulus_contains(const LiePoint& p, double r0, double r1,
                          bool exclude_cut);

}  // namespace polyann
