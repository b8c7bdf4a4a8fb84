#pragma once

#include <complex>
#include <random>
#include <vector>

// Shared RNG plumbing for the test binaries. Every suite seeds its own
// mt19937 so runs are reproducible and independent of test order.

namespace testutil {

using cplx = std::complex<double>;

inline double uniform(std::mt19937& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline cplx random_complex(std::mt19937& rng, double box) {
  return {uniform(rng, -box, box), uniform(rng, -box, box)};
}

inline cplx random_real_as_complex(std::mt19937& rng, double box) {
  return {uniform(rng, -box, box), 0.0};
}

inline std::vector<cplx> random_prefix(std::mt19937& rng, std::size_t len,
                                       double box, bool complex_entries) {
  std::vector<cplx> out(len);
  for (auto& v : out) {
    v = complex_entries ? random_complex(rng, box)
                        : random_real_as_complex(rng, box);
  }
  return out;
}

inline cplx random_point_in_disc(std::mt19937& rng, double radius) {
  for (;;) {
    cplx z = random_complex(rng, radius);
    if (std::abs(z) <= radius) return z;
  }
}

}  // namespace testutil
