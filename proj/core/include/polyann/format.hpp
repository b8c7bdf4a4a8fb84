#pragma once

#include <complex>
#include <string>

namespace polyann {

// Shortest decimal string that round-trips to the same double. Used for all
// file output so artifacts are byte-stable across runs and platforms with
// IEEE doubles. NaN/inf spell as "nan"/"inf"/"-inf".
std::string format_double(double x);

// "a+bi" / "a-bi" with both parts in shortest form.
std::string format_complex(std::complex<double> z);

}  // namespace polyann
