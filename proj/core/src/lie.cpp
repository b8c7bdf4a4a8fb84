#include "polyann/lie.hpp"

#include <cmath>

#include "polyann/errors.hpp"

namespace polyann {

LiePoint lie_point(const CVec3& z, int d) {
  if (d != 2 && d != 3) {
    throw InvalidInputError("lie_point: only d = 2 and d = 3 are supported");
  }
  LiePoint p;
  p.z = z;
  p.d = d;
  for (int i = 0; i < d; ++i) {
    p.q += z[std::size_t(i)] * z[std::size_t(i)];
    p.norm_sq += std::norm(z[std::size_t(i)]);
  }
  // |z|^4 - |q|^2 >= 0 holds exactly in real arithmetic; tiny negative
  // values are rounding and clamp to zero.
  double inner = p.norm_sq * p.norm_sq - std::norm(p.q);
  if (inner < 0.0) inner = 0.0;
  double root = std::sqrt(inner);
  p.L_plus = std::sqrt(p.norm_sq + root);
  p.L_minus = std::sqrt(std::max(0.0, p.norm_sq - root));
  return p;
}

bool lie_annulus_contains(const LiePoint& p, double r0, double r1,
                          bool exclude_cut) {
  if (!(0.0 <= r0 && r0 < r1)) {
    throw InvalidInputError("lie_annulus_contains: need 0 <= r0 < r1");
  }
  if (!(r0 < p.L_minus && p.L_plus < r1)) return false;
  if (exclude_cut && on_log_cut(p.q)) return false;
  return true;
}

}  // namespace polyann
