#include "polyann/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "polyann/errors.hpp"
#include "polyann/extension.hpp"
#include "polyann/format.hpp"
#include "polyann/harmonics.hpp"
#include "polyann/taylor.hpp"

namespace polyann {

namespace {

constexpr double kResidualTol = 1e-9;
constexpr int kScanPoints = 256;

struct ZeroSearch {
  bool found = false;
  double xi = 0.0;
  double residual = 0.0;
};

// 256-point scan for a sign change of g, then bisection. The witness is
// kept strictly inside (a, b); without a bracket, reports the best interior
// scan point so the caller can still show how close the search got.
ZeroSearch scan_and_bisect(const std::function<double(double)>& g, double a,
                           double b) {
  ZeroSearch out;
  double best_x = 0.5 * (a + b);
  double best_abs = std::numeric_limits<double>::infinity();
  double lo = a;
  double glo = g(a);
  bool bracketed = false;
  double hi = b;
  for (int i = 1; i <= kScanPoints; ++i) {
    const double x = a + (b - a) * double(i) / double(kScanPoints);
    const double gx = g(x);
    if (i < kScanPoints && std::abs(gx) < best_abs) {
      best_abs = std::abs(gx);
      best_x = x;
    }
    if (gx == 0.0 && i < kScanPoints) {
      out.found = true;
      out.xi = x;
      out.residual = 0.0;
      return out;
    }
    if (glo * gx < 0.0) {
      bracketed = true;
      hi = x;
      break;
    }
    lo = x;
    glo = gx;
  }
  if (!bracketed) {
    out.found = false;
    out.xi = best_x;
    out.residual = best_abs;
    return out;
  }
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double gm = g(mid);
    if (gm == 0.0) break;
    if (glo * gm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      glo = gm;
    }
  }
  out.found = true;
  out.xi = mid;
  out.residual = std::abs(g(mid));
  return out;
}

void require_interval(double a, double b) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw InvalidInputError("witness interval needs finite a < b");
}

std::string describe(std::initializer_list<std::pair<const char*, double>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, value] : kv) {
    if (!first) os << " ";
    first = false;
    os << name << "=" << format_double(value);
  }
  return os.str();
}

double rel_excess(double lhs, double rhs) {
  const double scale = std::max(std::abs(rhs), 1e-300);
  return std::max(0.0, (lhs - rhs) / scale);
}

}  // namespace

WitnessReport rolle_point(const TestFunction& fn, double lambda, double a,
                          double b) {
  require_interval(a, b);
  if (!fn.f || !fn.df)
    throw InvalidInputError("rolle_point needs f and its derivative");
  const double wa = std::exp(-lambda * a) * fn.f(a);
  const double wb = std::exp(-lambda * b) * fn.f(b);
  if (std::abs(wa - wb) > 1e-10)
    throw PreconditionError(
        "rolle_point: weighted endpoint values disagree beyond 1e-10");

  WitnessReport rep;
  rep.theorem_id = "weighted_rolle";
  rep.inputs = describe({{"lambda", lambda}, {"a", a}, {"b", b}});
  rep.tolerance = kResidualTol;
  auto g = [&](double x) { return fn.df(x) - lambda * fn.f(x); };
  const ZeroSearch zs = scan_and_bisect(g, a, b);
  rep.witness = {zs.xi};
  rep.residual = zs.residual;
  rep.passed = zs.residual <= rep.tolerance;
  return rep;
}

WitnessReport mean_value_point(const TestFunction& fn, double lambda, double a,
                               double b) {
  require_interval(a, b);
  if (!fn.f || !fn.df)
    throw InvalidInputError("mean_value_point needs f and its derivative");
  if (lambda == 0.0)
    throw InvalidInputError("mean_value_point needs nonzero lambda");
  const double ea = std::exp(lambda * a);
  const double eb = std::exp(lambda * b);
  const double target = lambda * (ea * fn.f(b) - eb * fn.f(a)) / (eb - ea);

  WitnessReport rep;
  rep.theorem_id = "weighted_mean_value";
  rep.inputs = describe({{"lambda", lambda}, {"a", a}, {"b", b}});
  rep.tolerance = kResidualTol;
  auto g = [&](double x) { return fn.df(x) - lambda * fn.f(x) - target; };
  const ZeroSearch zs = scan_and_bisect(g, a, b);
  rep.witness = {zs.xi};
  rep.residual = zs.residual;
  rep.passed = zs.residual <= rep.tolerance;
  return rep;
}

WitnessReport exp_ratio_bound(double lambda, double a, double b) {
  require_interval(a, b);
  if (lambda == 0.0)
    throw InvalidInputError("exp_ratio_bound needs nonzero lambda");
  const double h = b - a;
  // Divide through by e^{lambda a} so only the length enters.
  const double e = std::exp(lambda * h);
  const double lhs = std::abs(lambda * (1.0 + e) / (1.0 - e));
  const double rhs = 2.0 * std::exp(std::abs(lambda) * h) / h;

  WitnessReport rep;
  rep.theorem_id = "exp_ratio_bound";
  rep.inputs = describe({{"lambda", lambda}, {"a", a}, {"b", b}});
  rep.tolerance = kResidualTol;
  rep.witness = {lhs, rhs};
  rep.residual = rel_excess(lhs, rhs);
  rep.passed = rep.residual <= rep.tolerance;
  return rep;
}

WitnessReport check_odd_derivative_bound(const TestFunction& fn,
                                         double lambda0, double lambda1,
                                         double a, double b) {
  require_interval(a, b);
  if (!fn.f || !fn.df || !fn.ddf)
    throw InvalidInputError(
        "check_odd_derivative_bound needs f with two derivatives");
  const double h = b - a;
  const double lhs = std::abs(fn.df(a) - lambda0 * fn.f(a));

  const double endpoint = std::max(std::abs(fn.f(a)), std::abs(fn.f(b)));
  // D_{l1} D_{l0} f = f'' - (l0 + l1) f' + l0 l1 f, maximised on a grid;
  // the grid maximum only underestimates, which tightens the bound.
  double mixed = 0.0;
  for (int i = 0; i <= kScanPoints; ++i) {
    const double x = a + h * double(i) / double(kScanPoints);
    const double v = fn.ddf(x) - (lambda0 + lambda1) * fn.df(x) +
                     lambda0 * lambda1 * fn.f(x);
    mixed = std::max(mixed, std::abs(v));
  }
  const double rhs =
      4.0 * std::exp((std::abs(lambda0) + std::abs(lambda1)) * h) / h *
          endpoint +
      2.0 * mixed * h * std::exp(std::abs(lambda1) * h);

  WitnessReport rep;
  rep.theorem_id = "odd_derivative_endpoint_bound";
  rep.inputs = describe(
      {{"lambda0", lambda0}, {"lambda1", lambda1}, {"a", a}, {"b", b}});
  rep.tolerance = kResidualTol;
  rep.witness = {lhs, rhs};
  rep.residual = rel_excess(lhs, rhs);
  for (double lam : {lambda0, lambda1}) {
    if (lam == 0.0) continue;
    rep.residual = std::max(rep.residual, exp_ratio_bound(lam, a, b).residual);
  }
  rep.passed = rep.residual <= rep.tolerance;
  return rep;
}

WitnessReport check_even_to_odd(const AnnularModel& m, int k, int l, double v0,
                                double delta, int n_max) {
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw InvalidInputError("check_even_to_odd needs positive delta");
  if (n_max < 0) throw InvalidInputError("check_even_to_odd needs n_max >= 0");
  if (!(std::exp(v0 + 2.0 * delta) < m.r1()) || !(std::exp(v0) > m.r0()))
    throw InvalidInputError(
        "check_even_to_odd needs exp([v0, v0+2 delta]) inside the annulus");

  const int N = 2 * n_max + 2;
  const int half = 64;
  const int total = 2 * half;
  std::vector<std::vector<cplx>> D(std::size_t(total) + 1);
  for (int i = 0; i <= total; ++i) {
    const double v = v0 + delta * double(i) / double(half);
    D[std::size_t(i)] = log_jet(m, k, l, v, std::size_t(N)).derivs;
  }

  const ExponentSequence seq = exponent_sequence_for(k, m.dimension());
  double residual = 0.0;
  for (int mm = 0; mm <= n_max; ++mm) {
    const double lam =
        std::abs(seq.at(std::size_t(2 * mm))) +
        std::abs(seq.at(std::size_t(2 * mm + 1)));
    const double front =
        2.0 * std::max(2.0 / delta, delta) * std::exp(lam * delta);
    double max_even = 0.0;
    double max_even_next = 0.0;
    for (int i = 0; i <= total; ++i) {
      max_even =
          std::max(max_even, std::abs(D[std::size_t(i)][std::size_t(2 * mm)]));
      max_even_next = std::max(
          max_even_next, std::abs(D[std::size_t(i)][std::size_t(2 * mm + 2)]));
    }
    const double rhs = front * (max_even + max_even_next);
    for (int i = 0; i <= half; ++i) {
      const double lhs = std::abs(D[std::size_t(i)][std::size_t(2 * mm + 1)]);
      residual = std::max(residual, rel_excess(lhs, rhs));
    }
  }

  const double sigma = sigma_estimate(D[0]);
  const double eps = sigma > 0.0 ? 0.05 * sigma : 1e-3;
  double c2 = 0.0;
  for (int i = 0; i <= half; ++i) {
    for (int n = 1; n <= N; n += 2) {
      const double denom =
          std::exp(std::lgamma(double(n) + 1.0) + n * std::log(sigma + eps));
      c2 = std::max(c2, std::abs(D[std::size_t(i)][std::size_t(n)]) / denom);
    }
  }

  WitnessReport rep;
  rep.theorem_id = "even_to_odd_envelope";
  rep.inputs = describe({{"k", double(k)},
                         {"l", double(l)},
                         {"v0", v0},
                         {"delta", delta},
                         {"n_max", double(n_max)}});
  rep.tolerance = kResidualTol;
  rep.witness = {sigma, c2};
  rep.residual = residual;
  rep.passed = residual <= rep.tolerance && std::isfinite(c2);
  return rep;
}

std::string witness_reports_to_json(
    const std::vector<WitnessReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& rep : reports) {
    nlohmann::json rec;
    rec["theorem_id"] = rep.theorem_id;
    rec["inputs"] = rep.inputs;
    rec["witness"] = rep.witness;
    rec["residual"] = rep.residual;
    rec["tolerance"] = rep.tolerance;
    rec["passed"] = rep.passed;
    arr.push_back(rec);
  }
  return arr.dump(2);
}

}  // namespace polyann
