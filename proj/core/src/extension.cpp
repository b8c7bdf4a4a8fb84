#include "polyann/extension.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include <json.hpp>

#include "polyann/errors.hpp"
#include "polyann/fundamental.hpp"
#include "polyann/symbols.hpp"

namespace polyann {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Growth rate with the safety margin used by every tail bound: 5% above a
// positive claimed rate, a small absolute floor when the claim is zero and
// the derivatives only carry quadrature noise.
double padded_rate(double tau) { return tau > 0.0 ? 1.05 * tau : 1e-3; }

// Largest harmonic degree the model's closed form contains; 0 for the
// families that are analytic in the angle, whose coefficients decay fast
// enough for the quadrature margin to absorb.
int angular_band(const AnnularModel& m) {
  switch (m.family()) {
    case ModelFamily::Harmonic: {
      int band = 0;
      for (const auto& t : m.harmonic_terms()) band = std::max(band, t.k);
      return band;
    }
    case ModelFamily::Power:
      return m.power_k();
    default:
      return 0;
  }
}

// Delta^p f and d/dr Delta^p f sampled on the sphere of radius r at the
// quadrature points, p = 0..P. Sampling once and reusing across (k, l)
// slots is what keeps building a full extension cheap.
struct RadialSamples {
  std::vector<std::vector<double>> lap;
  std::vector<std::vector<double>> rad;
};

RadialSamples sample_iterates(const AnnularModel& m, const SphereRule& rule,
                              double r, int P) {
  RadialSamples s;
  s.lap.assign(std::size_t(P) + 1, {});
  s.rad.assign(std::size_t(P) + 1, {});
  for (int p = 0; p <= P; ++p) {
    auto& F = s.lap[std::size_t(p)];
    auto& G = s.rad[std::size_t(p)];
    F.resize(rule.points.size());
    G.resize(rule.points.size());
    for (std::size_t i = 0; i < rule.points.size(); ++i) {
      const Vec3& th = rule.points[i];
      Vec3 x{r * th[0], r * th[1], r * th[2]};
      F[i] = m.laplacian_iterate(p, x);
      G[i] = m.radial_derivative(p, x);
    }
  }
  return s;
}

LogCoefficientJet jet_from_samples(const AnnularModel& m,
                                   const HarmonicBasis& basis,
                                   const SphereRule& rule,
                                   const RadialSamples& s, int l, double v0,
                                   std::size_t N) {
  LogCoefficientJet jet;
  jet.k = basis.degree();
  jet.l = l;
  jet.d = m.dimension();
  jet.v0 = v0;
  jet.tau = m.tau_claimed();
  jet.exponents = exponent_sequence_for(jet.k, jet.d);
  jet.derivs.assign(N + 1, cplx(0.0));

  std::vector<double> Y(rule.points.size());
  for (std::size_t i = 0; i < rule.points.size(); ++i) {
    Y[i] = basis.eval(l, rule.points[i]);
  }

  for (std::size_t p = 0; 2 * p <= N; ++p) {
    double cp = 0.0;
    double gp = 0.0;
    const auto& F = s.lap[p];
    const auto& G = s.rad[p];
    for (std::size_t i = 0; i < rule.points.size(); ++i) {
      cp += rule.weights[i] * F[i] * Y[i];
      gp += rule.weights[i] * G[i] * Y[i];
    }
    // Even orders: the composed first-order factors collapse onto the
    // iterated Laplacian, picking up e^{2pv}. The next odd order applies
    // one more factor (d/dv - lambda_{2p}); d/dv acts on e^{2pv} times a
    // function of r = e^v, whence the product rule below with the exact
    // radial derivative standing in for d/dr.
    cplx even = std::exp(2.0 * double(p) * v0) * cp;
    jet.derivs[2 * p] = even;
    if (2 * p + 1 <= N) {
      cplx lam = jet.exponents.at(2 * p);
      jet.derivs[2 * p + 1] = 2.0 * double(p) * even +
                              std::exp((2.0 * double(p) + 1.0) * v0) * gp -
                              lam * even;
    }
  }
  return jet;
}

// log of the fitted constant in |derivs[n]| <= C n! rho^n; -infinity when
// every derivative vanishes.
double log_fit_constant(const std::vector<cplx>& derivs, double log_rho) {
  double lc = -kInf;
  for (std::size_t n = 0; n < derivs.size(); ++n) {
    double a = std::abs(derivs[n]);
    if (a == 0.0) continue;
    lc = std::max(lc, std::log(a) - std::lgamma(double(n) + 1.0) -
                          double(n) * log_rho);
  }
  return lc;
}

// Geometric bound on everything the coefficient sums drop beyond the last
// derivative order: |derivs[n]| <= C n! rho_v^n together with
// |q_n'(lambda_j)| >= n!/2^n gives terms bounded by C rho^n with
// rho = 2 e^{v0} (tau + pad). The even-dimension partial-fraction
// coefficients obey the weaker 2^n/(n-2)! bound, which costs an extra
// n(n-1) factor, absorbed into 2 M(M-1)/(1-rho)^3 at M = N+1.
double coeff_tail_bound(const LogCoefficientJet& jet,
                        const std::vector<cplx>& lambda, std::size_t flat,
                        bool even_dim) {
  const std::size_t N = jet.derivs.size() - 1;
  double rho_v = std::exp(jet.v0) * padded_rate(jet.tau);
  double lc = log_fit_constant(jet.derivs, std::log(rho_v));
  if (lc == -kInf) return 0.0;
  double rho = 2.0 * rho_v;
  if (!(rho < 1.0)) return kInf;
  double pre = 0.0;
  for (std::size_t j = 0; j < flat; ++j) {
    pre = std::max(pre, (-lambda[j] * jet.v0).real());
  }
  double M = double(N + 1);
  double lt = lc + pre + M * std::log(rho) - std::log1p(-rho);
  if (even_dim) {
    lt += std::log(2.0) + std::log(M) + std::log(M - 1.0) -
          2.0 * std::log1p(-rho);
  }
  return std::exp(lt);
}

// Root-test radius, in the z variable, of sum_j c_j w^j with w = z^2.
// Entries below 1e-13 of the peak are treated as quadrature roundoff. The
// fitted geometric ratio of the surviving tail decides: decay steeper than
// e^{-1/2} per index reads as super-geometric (a terminating or entire
// part) and reports +infinity.
double split_radius(const std::vector<double>& mag) {
  double peak = 0.0;
  for (double v : mag) peak = std::max(peak, v);
  if (peak == 0.0) return kInf;
  std::vector<std::size_t> idx;
  for (std::size_t j = 1; j < mag.size(); ++j) {
    if (mag[j] > 1e-13 * peak) idx.push_back(j);
  }
  if (idx.size() < 4) return kInf;
  std::size_t take = std::max<std::size_t>(4, idx.size() / 2);
  std::size_t first = idx.size() - take;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t t = first; t < idx.size(); ++t) {
    double x = double(idx[t]);
    double y = std::log(mag[idx[t]]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = double(take);
  double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  if (slope <= -0.5) return kInf;
  return std::sqrt(std::exp(-slope));
}

int checked_degree(int K_max) {
  if (K_max < 0) {
    throw InvalidInputError("AnnularExtension: K_max must be nonnegative");
  }
  return K_max;
}

}  // namespace

LogCoefficientJet log_jet(const AnnularModel& m, int k, int l, double v0,
                          std::size_t N) {
  if (k < 0) throw InvalidInputError("log_jet: degree must be nonnegative");
  if (!(v0 > std::log(m.r0()) && v0 < std::log(m.r1()))) {
    throw InvalidInputError(
        "log_jet: exp(v0) must lie strictly inside the annulus");
  }
  HarmonicBasis basis(m.dimension(), k);
  if (l < 1 || l > basis.count()) {
    throw InvalidInputError("log_jet: order l out of range for this degree");
  }
  SphereRule rule =
      sphere_rule(m.dimension(), std::max(k, angular_band(m)) + 16);
  RadialSamples samples = sample_iterates(m, rule, std::exp(v0), int(N / 2));
  return jet_from_samples(m, basis, rule, samples, l, v0, N);
}

LogSeriesValue taylor_in_log(const LogCoefficientJet& jet, cplx v) {
  LogSeriesValue out;
  if (jet.derivs.empty()) return out;
  const std::size_t N = jet.derivs.size() - 1;
  const cplx w = v - jet.v0;

  cplx acc = 0.0;
  for (std::size_t n = 0; n <= N; ++n) {
    FundamentalFunction phi =
        FundamentalFunction::from_sequence(jet.exponents, n);
    acc += jet.derivs[n] * phi.eval(w);
  }
  out.value = acc;

  // Tail: |derivs[n]| <= C n! rho_v^n and |Phi_n(w)| <= |w|^n e^{M|w|}/n!
  // with M <= alpha + beta n give a geometric series in g.
  double rho_v = std::exp(jet.v0) * padded_rate(jet.tau);
  double lc = log_fit_constant(jet.derivs, std::log(rho_v));
  double aw = std::abs(w);
  double alpha = 0.0;
  double beta = 0.0;
  switch (jet.exponents.kind()) {
    case SequenceKind::LinearGrowthRule:
      alpha = jet.exponents.alpha();
      beta = jet.exponents.beta();
      break;
    case SequenceKind::BoundedRule:
      alpha = jet.exponents.bound().value_or(0.0);
      break;
    case SequenceKind::ExplicitList: {
      for (const cplx& lam : jet.exponents.prefix(N)) {
        alpha = std::max(alpha, std::abs(lam));
      }
      break;
    }
  }
  double g = rho_v * aw * std::exp(beta * aw);
  if (lc == -kInf || aw == 0.0) {
    out.tail_estimate = 0.0;
  } else if (!(g < 1.0)) {
    out.tail_estimate = kInf;
  } else {
    out.tail_estimate = std::exp(lc + alpha * aw +
                                 double(N + 1) * std::log(g) - std::log1p(-g));
  }

  if (jet.tau > 0.0) {
    double disc = std::log1p(1.0 / (std::exp(jet.v0) * jet.tau));
    out.outside_guaranteed_disc = !(aw < disc);
  }
  return out;
}

ExtensionSeries extension_coeffs(const LogCoefficientJet& jet, std::size_t J,
                                 double tail_tol) {
  if (jet.d % 2 == 0) {
    throw WrongBranchError(
        "extension_coeffs: even dimension collides exponents; use "
        "extension_coeffs_even");
  }
  if (jet.derivs.empty()) {
    throw InvalidInputError("extension_coeffs: jet has no derivatives");
  }
  const std::size_t N = jet.derivs.size() - 1;
  const std::size_t flat = 2 * J + 2;
  const std::vector<cplx> lambda = jet.exponents.prefix(std::max(N, flat - 1));

  ExtensionSeries out;
  out.k = jet.k;
  out.l = jet.l;
  out.d = jet.d;
  out.v0 = jet.v0;
  out.exponents = jet.exponents;
  out.coeffs_even.assign(J + 1, cplx(0.0));
  out.coeffs_odd.assign(J + 1, cplx(0.0));
  out.log_flags.assign(J + 1, false);

  for (std::size_t j = 0; j < flat && j <= N; ++j) {
    const cplx lj = lambda[j];
    cplx qd = 1.0;
    for (std::size_t i = 0; i < j; ++i) qd *= lj - lambda[i];
    cplx sum = 0.0;
    for (std::size_t n = j; n <= N; ++n) {
      if (n > j) qd *= lj - lambda[n];
      if (qd == cplx(0.0)) {
        throw InternalError(
            "extension_coeffs: repeated exponent in an odd-dimension "
            "sequence");
      }
      sum += jet.derivs[n] / qd;
    }
    cplx a = std::exp(-lj * jet.v0) * sum;
    if (j % 2 == 0) {
      out.coeffs_even[j / 2] = a;
    } else {
      out.coeffs_odd[j / 2] = a;
    }
  }

  out.trunc_error = coeff_tail_bound(jet, lambda, flat, false);
  if (out.trunc_error > tail_tol) {
    throw TruncationError(
        "extension_coeffs: tail bound above the requested tolerance; "
        "increase the derivative order N",
        out.trunc_error);
  }
  return out;
}

ExtensionSeries extension_coeffs_even(const LogCoefficientJet& jet,
                                      std::size_t J, double tail_tol) {
  if (jet.d % 2 != 0) {
    throw WrongBranchError(
        "extension_coeffs_even: odd dimension has distinct exponents; use "
        "extension_coeffs");
  }
  if (jet.derivs.empty()) {
    throw InvalidInputError("extension_coeffs_even: jet has no derivatives");
  }
  const std::size_t N = jet.derivs.size() - 1;
  const std::size_t flat = 2 * J + 2;
  const std::size_t width = std::max(N, flat - 1) + 1;
  const std::vector<cplx> lambda = jet.exponents.prefix(width - 1);

  // Per-exponent accumulators, keyed by the first (even) index of each
  // root cluster: B collects the pure-exponential coefficients, C the ones
  // attached to the v e^{lambda v} basis element of a double root.
  std::vector<cplx> B(width, cplx(0.0));
  std::vector<cplx> C(width, cplx(0.0));

  for (std::size_t n = 0; n <= N; ++n) {
    const std::vector<cplx> prefix(lambda.begin(),
                                   lambda.begin() + std::ptrdiff_t(n) + 1);
    const auto clusters = cluster_roots(prefix);
    for (const auto& c : clusters) {
      if (c.multiplicity > 2) {
        throw InternalError(
            "extension_coeffs_even: exponent multiplicity above two");
      }
    }
    const auto pf = partial_fractions(prefix);
    if (pf.size() != clusters.size()) {
      throw InternalError(
          "extension_coeffs_even: partial fractions out of step with the "
          "root clusters");
    }
    // 2^n/(n-2)!, the bound every partial-fraction coefficient of 1/q_n
    // obeys for n >= 2 (orders 0 and 1 are unconstrained).
    const double bound =
        n >= 2 ? std::exp(double(n) * std::log(2.0) - std::lgamma(double(n) - 1.0))
               : kInf;
    const double slack = bound * (1.0 + 1e-9);
    for (std::size_t c = 0; c < pf.size(); ++c) {
      const std::size_t i0 = clusters[c].indices.front();
      if (std::abs(pf[c].root - clusters[c].root) > 1e-12) {
        throw InternalError(
            "extension_coeffs_even: partial fractions out of step with the "
            "root clusters");
      }
      if (pf[c].multiplicity == 1) {
        if (std::abs(pf[c].a) > slack) {
          throw InternalError(
              "extension_coeffs_even: residue exceeds its growth bound");
        }
        B[i0] += jet.derivs[n] * pf[c].a;
      } else {
        if (std::abs(pf[c].b) > slack || std::abs(pf[c].c) > slack) {
          throw InternalError(
              "extension_coeffs_even: residue exceeds its growth bound");
        }
        B[i0] += jet.derivs[n] * pf[c].b;
        C[i0] += jet.derivs[n] * pf[c].c;
      }
    }
  }

  ExtensionSeries out;
  out.k = jet.k;
  out.l = jet.l;
  out.d = jet.d;
  out.v0 = jet.v0;
  out.exponents = jet.exponents;
  out.coeffs_even.assign(J + 1, cplx(0.0));
  out.coeffs_odd.assign(J + 1, cplx(0.0));
  out.log_flags.assign(J + 1, false);

  // The accumulators describe the expansion in v - v0; shifting to v turns
  // B e^{L(v-v0)} + C (v-v0) e^{L(v-v0)} into
  // e^{-L v0} [(B - v0 C) e^{Lv} + C v e^{Lv}].
  for (std::size_t j = 0; j < flat; ++j) {
    const cplx pre = std::exp(-lambda[j] * jet.v0);
    cplx a;
    bool flag = false;
    if (is_log_index(jet.k, jet.d, j)) {
      a = pre * C[collision_partner(jet.k, jet.d, j)];
      flag = true;
    } else {
      a = pre * (B[j] - jet.v0 * C[j]);
    }
    if (j % 2 == 0) {
      out.coeffs_even[j / 2] = a;
    } else {
      out.coeffs_odd[j / 2] = a;
      out.log_flags[j / 2] = flag;
    }
  }

  out.trunc_error = coeff_tail_bound(jet, lambda, flat, true);
  if (out.trunc_error > tail_tol) {
    throw TruncationError(
        "extension_coeffs_even: tail bound above the requested tolerance; "
        "increase the derivative order N",
        out.trunc_error);
  }
  return out;
}

cplx eval_Fkl(const ExtensionSeries& s, cplx z) {
  if (z == cplx(0.0)) {
    throw DomainError("eval_Fkl: the coefficient series is singular at 0",
                      "origin");
  }
  if (s.d % 2 == 0 && on_log_cut(z)) {
    throw DomainError("eval_Fkl: log factors need a branch off (-inf, 0]",
                      "cut");
  }
  const cplx lz = std::log(z);
  cplx acc = 0.0;
  const std::size_t flat = s.coeffs_even.size() + s.coeffs_odd.size();
  for (std::size_t j = 0; j < flat; ++j) {
    const std::size_t i = j / 2;
    if (j % 2 == 0) {
      if (i < s.coeffs_even.size()) {
        acc += s.coeffs_even[i] * std::pow(z, s.exponents.at(j));
      }
    } else if (i < s.coeffs_odd.size()) {
      cplx t = s.coeffs_odd[i] * std::pow(z, s.exponents.at(j));
      if (i < s.log_flags.size() && s.log_flags[i]) t *= lz;
      acc += t;
    }
  }
  return acc;
}

LaurentSplit laurent_split(const ExtensionSeries& s) {
  LaurentSplit out;
  out.k = s.k;
  out.d = s.d;
  out.f1_coeffs = s.coeffs_even;
  out.f2_coeffs = s.coeffs_odd;
  if (s.d % 2 == 0) {
    out.f2_log_coeffs.assign(s.coeffs_odd.size(), cplx(0.0));
    for (std::size_t i = 0; i < s.coeffs_odd.size(); ++i) {
      if (i < s.log_flags.size() && s.log_flags[i]) {
        out.f2_log_coeffs[i] = out.f2_coeffs[i];
        out.f2_coeffs[i] = cplx(0.0);
      }
    }
  }

  std::vector<double> mag(out.f1_coeffs.size());
  for (std::size_t i = 0; i < mag.size(); ++i) {
    mag[i] = std::abs(out.f1_coeffs[i]);
  }
  out.radius_f1 = split_radius(mag);

  mag.assign(out.f2_coeffs.size(), 0.0);
  for (std::size_t i = 0; i < mag.size(); ++i) {
    mag[i] = std::abs(out.f2_coeffs[i]);
    if (i < out.f2_log_coeffs.size()) {
      mag[i] = std::max(mag[i], std::abs(out.f2_log_coeffs[i]));
    }
  }
  out.radius_f2 = split_radius(mag);
  return out;
}

AnnularExtension::AnnularExtension(const AnnularModel& m, int K_max,
                                   std::size_t J, std::size_t N,
                                   std::optional<double> v0)
    : d_(m.dimension()),
      kmax_(checked_degree(K_max)),
      r0_(m.r0()),
      tau_(m.tau_claimed()),
      ctx_(m.dimension(), checked_degree(K_max)) {
  r_out_ = tau_ > 0.0 ? std::min(m.r1(), 1.0 / (2.0 * tau_)) : m.r1();
  if (v0) {
    v0_ = *v0;
  } else {
    // Log-midpoint of the certified domain; when the growth rate already
    // swallows the whole annulus, fall back to the annulus midpoint so the
    // coefficients are still well defined.
    double hi = r_out_ > r0_ ? r_out_ : m.r1();
    v0_ = 0.5 * (std::log(r0_) + std::log(hi));
  }
  if (!(v0_ > std::log(m.r0()) && v0_ < std::log(m.r1()))) {
    throw InvalidInputError(
        "AnnularExtension: exp(v0) must lie strictly inside the annulus");
  }

  SphereRule rule =
      sphere_rule(d_, std::max(K_max, angular_band(m)) + 16);
  RadialSamples samples =
      sample_iterates(m, rule, std::exp(v0_), int(N / 2));

  series_.resize(std::size_t(K_max) + 1);
  for (int k = 0; k <= K_max; ++k) {
    const HarmonicBasis& basis = ctx_.basis(k);
    auto& row = series_[std::size_t(k)];
    row.reserve(std::size_t(basis.count()));
    for (int l = 1; l <= basis.count(); ++l) {
      LogCoefficientJet jet =
          jet_from_samples(m, basis, rule, samples, l, v0_, N);
      row.push_back(d_ % 2 == 0 ? extension_coeffs_even(jet, J)
                                : extension_coeffs(jet, J));
    }
  }
}

int AnnularExtension::order_count(int k) const {
  if (k < 0 || k > kmax_) {
    throw InvalidInputError("order_count: degree out of range");
  }
  return int(series_[std::size_t(k)].size());
}

const ExtensionSeries& AnnularExtension::series(int k, int l) const {
  if (k < 0 || k > kmax_) {
    throw InvalidInputError("series: degree out of range");
  }
  const auto& row = series_[std::size_t(k)];
  if (l < 1 || std::size_t(l) > row.size()) {
    throw InvalidInputError("series: order out of range for this degree");
  }
  return row[std::size_t(l) - 1];
}

cplx AnnularExtension::eval(const CVec3& z) const {
  const LiePoint p = lie_point(z, d_);
  if (!(p.L_minus > r0_)) {
    throw DomainError("eval: point reaches the inner radius", "L-");
  }
  if (!(p.L_plus < r_out_)) {
    throw DomainError("eval: point reaches the certified outer radius", "L+");
  }
  if (on_log_cut(p.q)) {
    throw DomainError("eval: q(z) lies on the branch cut (-inf, 0]", "cut");
  }

  const cplx q = p.q;
  const std::size_t Jn =
      series_.empty() || series_[0].empty()
          ? 1
          : series_[0][0].coeffs_even.size();
  // q^e for e in [-kmax_, Jn-1], shared by every slot.
  std::vector<cplx> qp(std::size_t(kmax_) + Jn);
  const std::size_t zero = std::size_t(kmax_);
  qp[zero] = 1.0;
  for (std::size_t i = zero + 1; i < qp.size(); ++i) qp[i] = qp[i - 1] * q;
  for (std::size_t i = zero; i-- > 0;) qp[i] = qp[i + 1] / q;

  const cplx lq = std::log(q);
  const cplx halfpow =
      d_ % 2 == 1 ? std::exp(cplx(double(2 - d_) / 2.0) * lq) : cplx(1.0);
  const cplx halflog = 0.5 * lq;

  cplx f1 = 0.0;
  cplx f2 = 0.0;
  for (int k = 0; k <= kmax_; ++k) {
    const HarmonicBasis& basis = ctx_.basis(k);
    for (int l = 1; l <= basis.count(); ++l) {
      const ExtensionSeries& s = series_[std::size_t(k)][std::size_t(l) - 1];
      const cplx Y = basis.eval_solid(l, z);
      cplx s1 = 0.0;
      for (std::size_t j = 0; j < s.coeffs_even.size(); ++j) {
        s1 += s.coeffs_even[j] * qp[zero + j];
      }
      cplx s2 = 0.0;
      for (std::size_t j = 0; j < s.coeffs_odd.size(); ++j) {
        cplx t = s.coeffs_odd[j] * qp[zero + j - std::size_t(k)];
        if (j < s.log_flags.size() && s.log_flags[j]) t *= halflog;
        s2 += t;
      }
      f1 += s1 * Y;
      f2 += s2 * Y;
    }
  }
  return f1 + halfpow * f2;
}

cplx eval_extension(const AnnularModel& m, const CVec3& z, int K_max,
                    std::size_t J) {
  return AnnularExtension(m, K_max, J).eval(z);
}

std::string extension_to_json(const AnnularExtension& ext) {
  nlohmann::json arr = nlohmann::json::array();
  for (int k = 0; k <= ext.max_degree(); ++k) {
    for (int l = 1; l <= ext.order_count(k); ++l) {
      const ExtensionSeries& s = ext.series(k, l);
      const std::size_t flat = s.coeffs_even.size() + s.coeffs_odd.size();
      for (std::size_t j = 0; j < flat; ++j) {
        const std::size_t i = j / 2;
        cplx a;
        bool flag = false;
        if (j % 2 == 0) {
          if (i >= s.coeffs_even.size()) continue;
          a = s.coeffs_even[i];
        } else {
          if (i >= s.coeffs_odd.size()) continue;
          a = s.coeffs_odd[i];
          flag = i < s.log_flags.size() && s.log_flags[i];
        }
        arr.push_back({{"k", k},
                       {"l", l},
                       {"j", j},
                       {"re", a.real()},
                       {"im", a.imag()},
                       {"log_flag", flag}});
      }
    }
  }
  return arr.dump(2);
}

}  // namespace polyann
