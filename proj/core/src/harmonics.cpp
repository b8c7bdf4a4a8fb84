#include "polyann/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "polyann/errors.hpp"
#include "polyann/lie.hpp"
#include "polyann/quadrature.hpp"

namespace polyann {

namespace {

constexpr double kPi = std::numbers::pi;

// Coefficient vectors (index = power) of the Legendre polynomials, built by
// the three-term recurrence.
std::vector<double> legendre_coeffs(int k) {
  std::vector<double> pm1 = {1.0};     // P_0
  if (k == 0) return pm1;
  std::vector<double> p = {0.0, 1.0};  // P_1
  for (int j = 1; j < k; ++j) {
    std::vector<double> next(j + 2, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += (2.0 * j + 1.0) * p[i] / (j + 1.0);
    }
    for (std::size_t i = 0; i < pm1.size(); ++i) {
      next[i] -= double(j) * pm1[i] / (j + 1.0);
    }
    pm1 = std::move(p);
    p = std::move(next);
  }
  return p;
}

std::vector<double> differentiate(std::vector<double> c, int times) {
  for (int t = 0; t < times; ++t) {
    if (c.size() <= 1) return {0.0};
    std::vector<double> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = double(i) * c[i];
    c = std::move(d);
  }
  return c;
}

// Real and imaginary parts of (x + i y)^m as polynomials.
std::pair<MonomialPoly, MonomialPoly> complex_power(int m) {
  MonomialPoly re = MonomialPoly::constant(1.0);
  MonomialPoly im = MonomialPoly::constant(0.0);
  MonomialPoly x = MonomialPoly::variable(0);
  MonomialPoly y = MonomialPoly::variable(1);
  for (int i = 0; i < m; ++i) {
    MonomialPoly nre = x * re + y.scaled(-1.0) * im;
    MonomialPoly nim = x * im + y * re;
    re = std::move(nre);
    im = std::move(nim);
  }
  return {re, im};
}

// sqrt((2k+1)/(4 pi) * (k-m)!/(k+m)!)
double d3_norm(int k, int m) {
  double ratio = 1.0;
  for (int i = k - m + 1; i <= k + m; ++i) ratio /= double(i);
  return std::sqrt((2.0 * k + 1.0) / (4.0 * kPi) * ratio);
}

std::vector<MonomialPoly> build_d2(int k) {
  if (k == 0) {
    return {MonomialPoly::constant(1.0 / std::sqrt(2.0 * kPi))};
  }
  auto [re, im] = complex_power(k);
  double n = 1.0 / std::sqrt(kPi);
  return {re.scaled(n), im.scaled(n)};
}

std::vector<MonomialPoly> build_d3(int k) {
  std::vector<MonomialPoly> out;
  out.reserve(2 * k + 1);
  auto pk = legendre_coeffs(k);
  MonomialPoly r2 = MonomialPoly::variable(0) * MonomialPoly::variable(0) +
                    MonomialPoly::variable(1) * MonomialPoly::variable(1) +
                    MonomialPoly::variable(2) * MonomialPoly::variable(2);
  MonomialPoly zvar = MonomialPoly::variable(2);

  // Radial part for order m: sum_j g_j z^j r^{k-m-j} with g the m-th
  // derivative of P_k; k-m-j is even wherever g_j is nonzero.
  auto radial = [&](int m) {
    auto g = differentiate(pk, m);
    MonomialPoly acc = MonomialPoly::constant(0.0);
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j] == 0.0) continue;
      int rest = k - m - int(j);
      acc = acc + (zvar.pow(int(j)) * r2.pow(rest / 2)).scaled(g[j]);
    }
    return acc;
  };

  out.push_back(radial(0).scaled(d3_norm(k, 0)));
  for (int m = 1; m <= k; ++m) {
    auto [re, im] = complex_power(m);
    MonomialPoly rad = radial(m);
    double n = std::sqrt(2.0) * d3_norm(k, m);
    out.push_back((re * rad).scaled(n));
    out.push_back((im * rad).scaled(n));
  }
  return out;
}

}  // namespace

MonomialPoly MonomialPoly::constant(double c) {
  MonomialPoly p;
  if (c != 0.0) p.terms_.push_back({c, {0, 0, 0}});
  return p;
}

MonomialPoly MonomialPoly::variable(int axis) {
  if (axis < 0 || axis > 2) {
    throw InvalidInputError("MonomialPoly::variable: axis out of range");
  }
  MonomialPoly p;
  std::array<int, 3> e{0, 0, 0};
  e[std::size_t(axis)] = 1;
  p.terms_.push_back({1.0, e});
  return p;
}

void MonomialPoly::compress() {
  std::map<std::array<int, 3>, double> acc;
  for (const auto& t : terms_) acc[t.exp] += t.coeff;
  terms_.clear();
  for (const auto& [e, c] : acc) {
    if (c != 0.0) terms_.push_back({c, e});
  }
}

MonomialPoly MonomialPoly::operator+(const MonomialPoly& o) const {
  MonomialPoly out;
  out.terms_ = terms_;
  out.terms_.insert(out.terms_.end(), o.terms_.begin(), o.terms_.end());
  out.compress();
  return out;
}

MonomialPoly MonomialPoly::operator*(const MonomialPoly& o) const {
  MonomialPoly out;
  out.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      out.terms_.push_back({a.coeff * b.coeff,
                            {a.exp[0] + b.exp[0], a.exp[1] + b.exp[1],
                             a.exp[2] + b.exp[2]}});
    }
  }
  out.compress();
  return out;
}

MonomialPoly MonomialPoly::scaled(double f) const {
  MonomialPoly out = *this;
  for (auto& t : out.terms_) t.coeff *= f;
  return out;
}

MonomialPoly MonomialPoly::pow(int e) const {
  if (e < 0) throw InvalidInputError("MonomialPoly::pow: negative exponent");
  MonomialPoly out = MonomialPoly::constant(1.0);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

double MonomialPoly::eval(const Vec3& p) const {
  double acc = 0.0;
  for (const auto& t : terms_) {
    double v = t.coeff;
    for (int a = 0; a < 3; ++a) {
      for (int i = 0; i < t.exp[std::size_t(a)]; ++i) v *= p[std::size_t(a)];
    }
    acc += v;
  }
  return acc;
}

cplx MonomialPoly::eval(const CVec3& p) const {
  cplx acc = 0.0;
  for (const auto& t : terms_) {
    cplx v = t.coeff;
    for (int a = 0; a < 3; ++a) {
      for (int i = 0; i < t.exp[std::size_t(a)]; ++i) v *= p[std::size_t(a)];
    }
    acc += v;
  }
  return acc;
}

HarmonicBasis::HarmonicBasis(int d, int k) : d_(d), k_(k) {
  if (d != 2 && d != 3) {
    throw InvalidInputError("HarmonicBasis: only d = 2 and d = 3 are supported");
  }
  if (k < 0) throw InvalidInputError("HarmonicBasis: negative degree");
  solid_ = d == 2 ? build_d2(k) : build_d3(k);
}

double HarmonicBasis::omega() const { return d_ == 2 ? 2.0 * kPi : 4.0 * kPi; }

double HarmonicBasis::eval(int l, const Vec3& theta) const {
  return solid(l).eval(theta);
}

cplx HarmonicBasis::eval_solid(int l, const CVec3& z) const {
  return solid(l).eval(z);
}

const MonomialPoly& HarmonicBasis::solid(int l) const {
  if (l < 1 || l > count()) {
    throw InvalidInputError("HarmonicBasis: basis index out of range");
  }
  return solid_[std::size_t(l - 1)];
}

SphereRule sphere_rule(int d, int K_max) {
  if (d != 2 && d != 3) {
    throw InvalidInputError("sphere_rule: only d = 2 and d = 3 are supported");
  }
  if (K_max < 0) throw InvalidInputError("sphere_rule: negative degree cap");
  SphereRule rule;
  rule.d = d;
  rule.K_max = K_max;
  if (d == 2) {
    int m = 4 * (K_max + 1);
    double w = 2.0 * kPi / m;
    for (int i = 0; i < m; ++i) {
      double phi = 2.0 * kPi * i / m;
      rule.points.push_back({std::cos(phi), std::sin(phi), 0.0});
      rule.weights.push_back(w);
    }
  } else {
    int nlat = K_max + 1;
    int nlon = 2 * (K_max + 1) + 1;
    const auto& gl = gauss_legendre(nlat);
    double wlon = 2.0 * kPi / nlon;
    for (int i = 0; i < nlat; ++i) {
      double u = gl.nodes[std::size_t(i)];  // cos(latitude)
      double s = std::sqrt(std::max(0.0, 1.0 - u * u));
      for (int j = 0; j < nlon; ++j) {
        double phi = 2.0 * kPi * j / nlon;
        rule.points.push_back({s * std::cos(phi), s * std::sin(phi), u});
        rule.weights.push_back(gl.weights[std::size_t(i)] * wlon);
      }
    }
  }
  return rule;
}

SphericalContext::SphericalContext(int d, int K_max)
    : d_(d), kmax_(K_max), rule_(sphere_rule(d, K_max)) {
  bases_.reserve(std::size_t(K_max) + 1);
  for (int k = 0; k <= K_max; ++k) bases_.emplace_back(d, k);
}

const HarmonicBasis& SphericalContext::basis(int k) const {
  if (k < 0 || k > kmax_) {
    throw InvalidInputError("SphericalContext: degree outside table");
  }
  return bases_[std::size_t(k)];
}

cplx flc(const SphericalContext& ctx, const RadialFunction& f, int k, int l,
         double r, double r0, double r1) {
  if (!(r0 < r && r < r1)) {
    throw InvalidInputError("flc: radius outside the open annulus");
  }
  const auto& basis = ctx.basis(k);
  const auto& rule = ctx.rule();
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.points.size(); ++i) {
    const Vec3& th = rule.points[i];
    Vec3 x{r * th[0], r * th[1], r * th[2]};
    acc += rule.weights[i] * f(x) * basis.eval(l, th);
  }
  return {acc, 0.0};
}

std::pair<double, double> parseval_check(const SphericalContext& ctx,
                                         const RadialFunction& f, double r,
                                         double r0, double r1) {
  const auto& rule = ctx.rule();
  double lhs = 0.0;
  for (std::size_t i = 0; i < rule.points.size(); ++i) {
    const Vec3& th = rule.points[i];
    Vec3 x{r * th[0], r * th[1], r * th[2]};
    double v = f(x);
    lhs += rule.weights[i] * v * v;
  }
  double rhs = 0.0;
  for (int k = 0; k <= ctx.max_degree(); ++k) {
    for (int l = 1; l <= ctx.basis(k).count(); ++l) {
      rhs += std::norm(flc(ctx, f, k, l, r, r0, r1));
    }
  }
  return {lhs, rhs};
}

std::pair<cplx, cplx> apply_Lk_power(cplx mu, int k, int d) {
  cplx coeff = mu * (mu - 1.0) + double(d - 1) * mu - double(k) * double(k + d - 2);
  return {coeff, mu - 2.0};
}

ExponentSequence exponent_sequence_for(int k, int d) {
  if (k < 0 || d < 2) {
    throw InvalidInputError("exponent_sequence_for: need k >= 0 and d >= 2");
  }
  auto rule = [k, d](std::size_t n) -> cplx {
    if (n % 2 == 0) return {double(k) + double(n), 0.0};
    return {double(-k - d + 2) + double(n) - 1.0, 0.0};
  };
  return ExponentSequence::linear_growth(rule, double(k + d - 2), 1.0);
}

bool is_log_index(int k, int d, std::size_t n) {
  if (d % 2 != 0 || n % 2 == 0) return false;
  // lambda_n = -k-d+2 + (n-1); collides with an even index iff
  // lambda_n - k is a nonnegative even integer.
  long diff = long(n) - 1 - 2 * long(k) - long(d) + 2;
  return diff >= 0 && diff % 2 == 0;
}

std::size_t collision_partner(int k, int d, std::size_t n) {
  if (!is_log_index(k, d, n)) {
    throw InvalidInputError("collision_partner: index carries no collision");
  }
  long diff = long(n) - 1 - 2 * long(k) - long(d) + 2;  // = lambda_n - k = 2l
  return std::size_t(diff);  // even index 2l with lambda_{2l} = k + 2l
}

std::pair<double, double> harmonic_addition_bound(const SphericalContext& ctx,
                                                  const CVec3& z, int k) {
  const auto& basis = ctx.basis(k);
  double lhs = 0.0;
  for (int l = 1; l <= basis.count(); ++l) {
    lhs += std::norm(basis.eval_solid(l, z));
  }
  LiePoint p = lie_point(z, ctx.dimension());
  double rhs = double(basis.count()) / basis.omega() *
               std::pow(p.L_plus, 2.0 * k);
  return {lhs, rhs};
}

}  // namespace polyann
