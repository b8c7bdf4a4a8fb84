#include "polyann/format.hpp"

#include <charconv>
#include <cmath>

namespace polyann {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string format_complex(std::complex<double> z) {
  std::string s = format_double(z.real());
  double im = z.imag();
  if (std::signbit(im) && !std::isnan(im)) {
    s += '-';
    s += format_double(-im);
  } else {
    s += '+';
    s += format_double(im);
  }
  s += 'i';
  return s;
}

}  // namespace polyann
