#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <json.hpp>

#include "helpers.hpp"
#include "polyann/errors.hpp"
#include "polyann/extension.hpp"
#include "polyann/harmonics.hpp"
#include "polyann/models.hpp"
#include "polyann/symbols.hpp"

using namespace polyann;

namespace {

// Generalized derivatives of e^{mu v} at v0: applying (d/dv - lambda) turns
// e^{mu v} into (mu - lambda) e^{mu v}, so order n carries the running
// product of (mu - lambda_i), i < n. Oracle for every pure-power slot.
cplx pure_power_deriv(cplx mu, const ExponentSequence& seq, std::size_t n,
                      double v0) {
  cplx prod = 1.0;
  for (std::size_t i = 0; i < n; ++i) prod *= mu - seq.at(i);
  return prod * std::exp(mu * v0);
}

// q_n'(lambda_j) as a bare product, independent of the coefficient code.
cplx qprime(const std::vector<cplx>& lambda, std::size_t n, std::size_t j) {
  cplx prod = 1.0;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i != j) prod *= lambda[j] - lambda[i];
  }
  return prod;
}

Vec3 random_annulus_point(std::mt19937& rng, int d, double lo, double hi) {
  std::normal_distribution<double> g(0.0, 1.0);
  for (;;) {
    Vec3 u{g(rng), g(rng), d == 3 ? g(rng) : 0.0};
    double n = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
    if (n < 1e-6) continue;
    double r = testutil::uniform(rng, lo, hi);
    return {r * u[0] / n, r * u[1] / n, r * u[2] / n};
  }
}

double max_abs_excluding(const std::vector<cplx>& v, std::size_t skip) {
  double mx = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != skip) mx = std::max(mx, std::abs(v[i]));
  }
  return mx;
}

double max_abs(const std::vector<cplx>& v) {
  return max_abs_excluding(v, v.size());
}

}  // namespace

TEST_CASE("log_jet terminates on pure harmonic slots") {
  // alpha branch: e^{kv} is annihilated by its own first-order factor.
  auto m = AnnularModel::harmonic(3, 0.5, 2.0, {{2, 1, 1.0, 0.0}}, 0.0);
  auto jet = log_jet(m, 2, 1, 0.0, 12);
  REQUIRE(jet.derivs.size() == 13);
  CHECK(std::abs(jet.derivs[0] - 1.0) <= 1e-12);
  for (std::size_t n = 1; n < jet.derivs.size(); ++n) {
    CHECK(std::abs(jet.derivs[n]) <= 1e-12);
  }
  CHECK(jet.k == 2);
  CHECK(jet.tau == 0.0);

  // beta branch: e^{(-k-d+2)v} survives exactly one factor.
  auto mb = AnnularModel::harmonic(3, 0.5, 2.0, {{1, 2, 0.0, 1.0}}, 0.0);
  double v0 = 0.3;
  auto jb = log_jet(mb, 1, 2, v0, 10);
  double d0 = std::exp(-2.0 * v0);  // exponent -k-d+2 = -2
  CHECK(std::abs(jb.derivs[0] - d0) <= 1e-12);
  CHECK(std::abs(jb.derivs[1] - (-3.0) * d0) <= 1e-12);  // (lambda_1-lambda_0) d0
  for (std::size_t n = 2; n < jb.derivs.size(); ++n) {
    CHECK(std::abs(jb.derivs[n]) <= 1e-12);
  }
}

TEST_CASE("log_jet agrees with the coefficient quadrature order by order") {
  auto m = AnnularModel::exponential(2, 1.0, 2.0, {0.8, 0.3, 0.0});
  double r = 1.4;
  double v0 = std::log(r);
  SphericalContext ctx(2, 1 + 16);  // same rule size log_jet picks for k=1
  auto jet = log_jet(m, 1, 1, v0, 8);

  auto f0 = [&](const Vec3& x) { return m.eval(x); };
  auto f1 = [&](const Vec3& x) { return m.laplacian_iterate(1, x); };
  auto f2 = [&](const Vec3& x) { return m.laplacian_iterate(2, x); };
  CHECK(std::abs(jet.derivs[0] - flc(ctx, f0, 1, 1, r, 1.0, 2.0)) <= 1e-13);
  CHECK(std::abs(jet.derivs[2] -
                 std::exp(2.0 * v0) * flc(ctx, f1, 1, 1, r, 1.0, 2.0)) <=
        1e-13);
  CHECK(std::abs(jet.derivs[4] -
                 std::exp(4.0 * v0) * flc(ctx, f2, 1, 1, r, 1.0, 2.0)) <=
        1e-12);

  // Odd orders: one extra factor (d/dv - lambda_{2p}) through the product
  // rule, with the exact radial derivative.
  auto g1 = [&](const Vec3& x) { return m.radial_derivative(1, x); };
  cplx want = 2.0 * jet.derivs[2] +
              std::exp(3.0 * v0) * flc(ctx, g1, 1, 1, r, 1.0, 2.0) -
              jet.exponents.at(2) * jet.derivs[2];
  CHECK(std::abs(jet.derivs[3] - want) <= 1e-12);
}

TEST_CASE("log_jet matches the product oracle on power slots") {
  // f_{k,l}(r) = r^{2 alpha + k}, so the jet is the running product of
  // (mu - lambda_i) against e^{mu v0}.
  auto m = AnnularModel::power(3, 0.5, 2.0, 1.3, 2, 2);
  double v0 = 0.2;
  cplx mu = 2.0 * 1.3 + 2.0;
  auto jet = log_jet(m, 2, 2, v0, 12);
  for (std::size_t n = 0; n < jet.derivs.size(); ++n) {
    cplx want = pure_power_deriv(mu, jet.exponents, n, v0);
    CHECK(std::abs(jet.derivs[n] - want) <= 1e-12 * std::abs(want) + 1e-13);
  }
  CHECK(jet.tau == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("log_jet derivative growth stays factorial-geometric") {
  // For the plane-wave family the iterated Laplacian reproduces f, so the
  // even orders are exactly geometric in e^{2v0} and the normalized roots
  // (|D_n|/n!)^{1/n} must decay toward zero.
  auto m = AnnularModel::exponential(2, 1.0, 2.0, {0.8, 0.3, 0.0});
  auto jet = log_jet(m, 1, 1, std::log(1.4), 40);
  double prev = 1e300;
  for (int n = 10; n <= 40; n += 6) {
    double t = std::pow(std::abs(jet.derivs[std::size_t(n)]), 1.0 / n) /
               std::exp(std::lgamma(n + 1.0) / n);
    CHECK(t < prev);
    prev = t;
  }
  CHECK(prev <= 0.12);
}

TEST_CASE("log_jet validates its inputs") {
  auto m = AnnularModel::harmonic(3, 0.5, 2.0, {{1, 1, 1.0, 0.0}}, 0.0);
  CHECK_THROWS_AS(log_jet(m, 1, 1, std::log(0.4), 8), InvalidInputError);
  CHECK_THROWS_AS(log_jet(m, 1, 1, std::log(2.0), 8), InvalidInputError);
  CHECK_THROWS_AS(log_jet(m, -1, 1, 0.0, 8), InvalidInputError);
  CHECK_THROWS_AS(log_jet(m, 1, 0, 0.0, 8), InvalidInputError);
  CHECK_THROWS_AS(log_jet(m, 1, 4, 0.0, 8), InvalidInputError);
}

TEST_CASE("taylor_in_log reproduces coefficients on the real axis") {
  auto m = AnnularModel::exponential(2, 1.0, 2.0, {0.8, 0.3, 0.0});
  double v0 = std::log(1.4);
  auto jet = log_jet(m, 1, 1, v0, 40);
  SphericalContext ctx(2, 1 + 16);
  auto f = [&](const Vec3& x) { return m.eval(x); };
  for (double r : {1.2, 1.3, 1.5, 1.7}) {
    auto got = taylor_in_log(jet, std::log(r));
    cplx want = flc(ctx, f, 1, 1, r, 1.0, 2.0);
    CHECK(std::abs(got.value - want) <= 1e-10);
    CHECK(!got.outside_guaranteed_disc);  // tau = 0 never flags
  }
}

TEST_CASE("taylor_in_log continues power slots to complex points") {
  auto m = AnnularModel::power(3, 0.5, 2.0, 1.3, 2, 2);
  double v0 = 0.2;
  cplx mu = 2.0 * 1.3 + 2.0;
  auto jet = log_jet(m, 2, 2, v0, 40);

  cplx v = v0 + cplx(0.0, 0.2);
  auto got = taylor_in_log(jet, v);
  cplx want = std::exp(mu * v);
  CHECK(std::abs(got.value - want) <= 1e-9);
  // Inside the guaranteed disc ln(1 + 1/(e^{v0} tau)) ~ 0.343.
  CHECK(!got.outside_guaranteed_disc);
  // The reported tail really bounds the truncation.
  CHECK(std::abs(got.value - want) <= got.tail_estimate);
  CHECK(got.tail_estimate <= 1e-5);

  auto far = taylor_in_log(jet, v0 + 0.5);
  CHECK(far.outside_guaranteed_disc);
}

TEST_CASE("taylor_in_log sums a synthetic alternating-factorial jet to 1") {
  // Against lambda_n = n + 1 the constant function has generalized
  // derivatives (-1)^n n!, and the series recovers 1 inside |v| < ln 2.
  LogCoefficientJet jet;
  jet.k = 0;
  jet.l = 1;
  jet.d = 3;
  jet.v0 = 0.0;
  jet.tau = 0.0;
  jet.exponents = ExponentSequence::shifted_integers();
  jet.derivs.resize(41);
  double sign = 1.0;
  for (std::size_t n = 0; n < jet.derivs.size(); ++n) {
    jet.derivs[n] = sign * std::exp(std::lgamma(double(n) + 1.0));
    sign = -sign;
  }
  auto got = taylor_in_log(jet, 0.5);
  CHECK(std::abs(got.value - 1.0) <= 1e-6);
  CHECK(std::abs(got.value - 1.0) <= got.tail_estimate);
  CHECK(!got.outside_guaranteed_disc);
}

TEST_CASE("extension_coeffs recovers harmonic coefficients exactly") {
  auto m1 = AnnularModel::harmonic(3, 0.5, 2.0, {{1, 1, 1.0, 0.0}}, 0.0);
  auto s1 = extension_coeffs(log_jet(m1, 1, 1, 0.0, 40), 20);
  REQUIRE(s1.coeffs_even.size() == 21);
  REQUIRE(s1.coeffs_odd.size() == 21);
  CHECK(std::abs(s1.coeffs_even[0] - 1.0) <= 1e-10);
  CHECK(max_abs_excluding(s1.coeffs_even, 0) <= 1e-10);
  CHECK(max_abs(s1.coeffs_odd) <= 1e-10);
  for (bool f : s1.log_flags) CHECK(!f);

  // Nonzero expansion point exercises the e^{-lambda v0} unfolding.
  auto m2 = AnnularModel::harmonic(3, 0.5, 2.0, {{1, 1, 2.0, 0.5}}, 0.0);
  auto s2 = extension_coeffs(log_jet(m2, 1, 1, 0.25, 40), 20);
  CHECK(std::abs(s2.coeffs_even[0] - 2.0) <= 1e-12);
  CHECK(std::abs(s2.coeffs_odd[0] - 0.5) <= 1e-12);
  CHECK(max_abs_excluding(s2.coeffs_even, 0) <= 1e-12);
  CHECK(max_abs_excluding(s2.coeffs_odd, 0) <= 1e-12);
  CHECK(s2.trunc_error <= 1e-50);
}

TEST_CASE("extension_coeffs is independent of the expansion point") {
  auto m = AnnularModel::exponential(2, 1.0, 2.0, {0.8, 0.3, 0.0});
  // d = 2 goes through the even-dimension branch.
  double v0 = std::log(1.3);
  for (int k = 0; k <= 2; ++k) {
    auto a = extension_coeffs_even(log_jet(m, k, 1, v0, 40), 20);
    auto b = extension_coeffs_even(log_jet(m, k, 1, v0 + 0.2, 40), 20);
    double mx = 0.0;
    for (std::size_t j = 0; j < a.coeffs_even.size(); ++j) {
      mx = std::max(mx, std::abs(a.coeffs_even[j] - b.coeffs_even[j]));
    }
    for (std::size_t j = 0; j < a.coeffs_odd.size(); ++j) {
      mx = std::max(mx, std::abs(a.coeffs_odd[j] - b.coeffs_odd[j]));
    }
    CHECK(mx <= 1e-12);
  }

  auto me = AnnularModel::eigen(3, 0.5, 2.0, 2.25, {0.6, 0.8, 0.0});
  auto a = extension_coeffs(log_jet(me, 1, 2, 0.0, 40), 20);
  auto b = extension_coeffs(log_jet(me, 1, 2, 0.2, 40), 20);
  double mx = 0.0;
  for (std::size_t j = 0; j < a.coeffs_even.size(); ++j) {
    mx = std::max(mx, std::abs(a.coeffs_even[j] - b.coeffs_even[j]));
    mx = std::max(mx, std::abs(a.coeffs_odd[j] - b.coeffs_odd[j]));
  }
  CHECK(mx <= 1e-12);
}

TEST_CASE("extension coefficient roots shrink for growth-free models") {
  // Entire-type models must show a root-test trend toward zero: the
  // certified radius is infinite, so |a_{2j}|^{1/2j} has to decay.
  auto m = AnnularModel::exponential(2, 1.0, 2.0, {0.8, 0.3, 0.0});
  auto s = extension_coeffs_even(log_jet(m, 1, 1, std::log(1.4), 40), 20);
  double prev = 1e300;
  for (std::size_t j = 4; j <= 20; j += 4) {
    double t = std::pow(std::abs(s.coeffs_even[j]), 1.0 / (2.0 * double(j)));
    CHECK(t < prev);
    prev = t;
  }
  CHECK(prev <= 0.1);
  CHECK(s.trunc_error <= 1e-20);
}

TEST_CASE("prefix symbol derivatives respect the factorial lower bound") {
  for (int k = 0; k <= 3; ++k) {
    auto seq = exponent_sequence_for(k, 3);
    auto lambda = seq.prefix(14);
    for (std::size_t n = 0; n <= 14; ++n) {
      double floor = std::exp(std::lgamma(double(n) + 1.0) -
                              double(n) * std::log(2.0));
      for (std::size_t j = 0; j <= n; ++j) {
        CHECK(std::abs(qprime(lambda, n, j)) >= floor * (1.0 - 1e-12));
      }
    }
  }
  // Frozen spot value: n = 10 floor is 10!/2^10 = 3543.75.
  auto lambda = exponent_sequence_for(0, 3).prefix(10);
  for (std::size_t j = 0; j <= 10; ++j) {
    CHECK(std::abs(qprime(lambda, 10, j)) >= 3543.75 * (1.0 - 1e-12));
  }
}

TEST_CASE("partial fractions of a double-root symbol match the residues") {
  // 1/(z (z-2)^2) = (1/4)/z + (-1/4)/(z-2) + (1/2)/(z-2)^2.
  auto pf = partial_fractions({0.0, 2.0, 2.0});
  REQUIRE(pf.size() == 2);
  REQUIRE(pf[0].multiplicity == 1);
  REQUIRE(pf[1].multiplicity == 2);
  CHECK(std::abs(pf[0].a - 0.25) <= 1e-12);
  CHECK(std::abs(pf[1].b - (-0.25)) <= 1e-12);
  CHECK(std::abs(pf[1].c - 0.5) <= 1e-12);
  // First-order part against the second-order one: |b| <= (n-1)|c|.
  CHECK(std::abs(pf[1].b) <= 1.0 * std::abs(pf[1].c) + 1e-12);
}

TEST_CASE("even-dimension residues respect the weakened factorial bound") {
  for (int k = 0; k <= 3; ++k) {
    auto lambda = exponent_sequence_for(k, 2).prefix(14);
    for (std::size_t n = 2; n <= 14; ++n) {
      std::vector<cplx> prefix(lambda.begin(),
                               lambda.begin() + std::ptrdiff_t(n) + 1);
      double bound = std::exp(double(n) * std::log(2.0) -
                              std::lgamma(double(n) - 1.0));
      for (const auto& t : partial_fractions(prefix)) {
        CHECK(std::abs(t.a) <= bound * (1.0 + 1e-12));
        CHECK(std::abs(t.b) <= bound * (1.0 + 1e-12));
        CHECK(std::abs(t.c) <= bound * (1.0 + 1e-12));
      }
    }
  }
}

TEST_CASE("extension_coeffs_even recovers the log slot in the plane") {
  auto m = AnnularModel::harmonic(
      2, 0.5, 2.0, {{0, 1, 0.7, 0.0}, {2, 1, 0.4, 0.25}}, 0.35);
  auto s = extension_coeffs_even(log_jet(m, 0, 1, 0.15, 40), 20);
  CHECK(std::abs(s.coeffs_even[0] - 0.7) <= 1e-12);
  CHECK(std::abs(s.coeffs_odd[0] - 0.35) <= 1e-12);
  CHECK(s.log_flags[0]);  // degree-0 second solution is log r
  CHECK(max_abs_excluding(s.coeffs_even, 0) <= 1e-12);
  CHECK(max_abs_excluding(s.coeffs_odd, 0) <= 1e-12);

  auto sk = extension_coeffs_even(log_jet(m, 2, 1, 0.15, 40), 20);
  CHECK(std::abs(sk.coeffs_even[0] - 0.4) <= 1e-12);
  CHECK(std::abs(sk.coeffs_odd[0] - 0.25) <= 1e-12);
  CHECK(!sk.log_flags[0]);  // r^{-2} does not collide at degree 2
}

TEST_CASE("coefficient rearrangement routines reject the wrong parity") {
  auto m2 = AnnularModel::harmonic(2, 0.5, 2.0, {{1, 1, 1.0, 0.0}}, 0.0);
  auto m3 = AnnularModel::harmonic(3, 0.5, 2.0, {{1, 1, 1.0, 0.0}}, 0.0);
  auto j2 = log_jet(m2, 1, 1, 0.0, 8);
  auto j3 = log_jet(m3, 1, 1, 0.0, 8);
  CHECK_THROWS_AS(extension_coeffs(j2, 4), WrongBranchError);
  CHECK_THROWS_AS(extension_coeffs_even(j3, 4), WrongBranchError);
}

TEST_CASE("tail tolerance converts an unachieved bound into an error") {
  // The power family's growth rate makes the geometric argument fail at
  // every admissible expansion point, so the bound is infinite.
  auto mp = AnnularModel::power(3, 0.5, 2.0, 2.0, 1, 1);
  auto jp = log_jet(mp, 1, 1, 0.1, 40);
  CHECK(extension_coeffs(jp, 20).trunc_error ==
        std::numeric_limits<double>::infinity());
  try {
    extension_coeffs(jp, 20, 1e6);
    FAIL("expected TruncationError");
  } catch (const TruncationError& e) {
    CHECK(e.achieved_bound == std::numeric_limits<double>::infinity());
  }

  // A growth-free model has a tiny but positive bound.
  auto me = AnnularModel::exponential(2, 1.0, 2.0, {0.8, 0.3, 0.0});
  auto je = log_jet(me, 1, 1, std::log(1.4), 40);
  try {
    extension_coeffs_even(je, 20, 1e-40);
    FAIL("expected TruncationError");
  } catch (const TruncationError& e) {
    CHECK(e.achieved_bound > 0.0);
    CHECK(e.achieved_bound <= 1e-20);
  }
}

TEST_CASE("eval_Fkl reproduces closed-form slots at complex points") {
  auto m3 = AnnularModel::harmonic(3, 0.5, 2.0, {{3, 1, 1.0, 0.0}}, 0.0);
  auto s3 = extension_coeffs(log_jet(m3, 3, 1, 0.0, 40), 20);
  cplx z(1.0, 1.0);
  CHECK(std::abs(eval_Fkl(s3, z) - std::pow(z, 3)) <= 1e-12);

  auto m = AnnularModel::harmonic(3, 0.5, 2.0, {{1, 1, 2.0, 0.5}}, 0.0);
  auto s = extension_coeffs(log_jet(m, 1, 1, 0.0, 40), 20);
  cplx zi(0.0, 0.8);
  CHECK(std::abs(eval_Fkl(s, zi) - (2.0 * zi + 0.5 / (zi * zi))) <= 1e-12);
  // Odd dimension has integer exponents only: the negative real axis is
  // fine there.
  cplx zr(-1.2, 0.0);
  CHECK(std::abs(eval_Fkl(s, zr) - (2.0 * zr + 0.5 / (zr * zr))) <= 1e-12);
}

TEST_CASE("eval_Fkl matches the quadrature coefficients on real radii") {
  auto m = AnnularModel::exponential(2, 1.0, 2.0, {0.8, 0.3, 0.0});
  SphericalContext ctx(2, 2 + 16);
  for (int k = 0; k <= 2; ++k) {
    auto s = extension_coeffs_even(log_jet(m, k, 1, std::log(1.4), 40), 20);
    auto f = [&](const Vec3& x) { return m.eval(x); };
    for (double r : {1.1, 1.5, 1.9}) {
      cplx want = flc(ctx, f, k, 1, r, 1.0, 2.0);
      CHECK(std::abs(eval_Fkl(s, r) - want) <= 1e-10);
    }
  }
}

TEST_CASE("eval_Fkl rejects the origin and the even-dimension cut") {
  auto m2 = AnnularModel::harmonic(2, 0.5, 2.0, {{0, 1, 0.7, 0.0}}, 0.35);
  auto s2 = extension_coeffs_even(log_jet(m2, 0, 1, 0.0, 20), 10);
  try {
    eval_Fkl(s2, cplx(0.0));
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(e.constraint == "origin");
  }
  try {
    eval_Fkl(s2, cplx(-0.5, 0.0));
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(e.constraint == "cut");
  }
  // Slightly off the cut is allowed and continuous with the upper branch.
  CHECK(std::isfinite(std::abs(eval_Fkl(s2, cplx(-0.5, 1e-6)))));
}

TEST_CASE("rearranged series and log-variable series agree in the overlap") {
  auto mh = AnnularModel::harmonic(3, 0.5, 2.0, {{1, 1, 2.0, 0.5}}, 0.0);
  auto me = AnnularModel::exponential(2, 1.0, 2.0, {0.8, 0.3, 0.0});
  auto mg = AnnularModel::eigen(3, 0.5, 2.0, 2.25, {0.6, 0.8, 0.0});

  auto jh = log_jet(mh, 1, 1, 0.25, 40);
  auto sh = extension_coeffs(jh, 20);
  for (double r : {0.7, 1.0, 1.6}) {
    CHECK(std::abs(eval_Fkl(sh, r) - taylor_in_log(jh, std::log(r)).value) <=
          1e-10);
  }

  auto je = log_jet(me, 1, 1, std::log(1.4), 40);
  auto se = extension_coeffs_even(je, 20);
  for (double r : {1.2, 1.3, 1.6}) {
    CHECK(std::abs(eval_Fkl(se, r) - taylor_in_log(je, std::log(r)).value) <=
          1e-10);
  }

  auto jg = log_jet(mg, 0, 1, 0.2, 40);
  auto sg = extension_coeffs(jg, 20);
  for (double r : {1.1, 1.35, 1.5}) {
    CHECK(std::abs(eval_Fkl(sg, r) - taylor_in_log(jg, std::log(r)).value) <=
          1e-10);
  }
}

TEST_CASE("laurent_split separates the two power series and their radii") {
  // Harmonic slot: both parts terminate.
  auto mh = AnnularModel::harmonic(3, 0.5, 2.0, {{1, 1, 2.0, 0.5}}, 0.0);
  auto sh = extension_coeffs(log_jet(mh, 1, 1, 0.0, 40), 20);
  auto ph = laurent_split(sh);
  CHECK(std::abs(ph.f1_coeffs[0] - 2.0) <= 1e-12);
  CHECK(std::abs(ph.f2_coeffs[0] - 0.5) <= 1e-12);
  CHECK(ph.radius_f1 == std::numeric_limits<double>::infinity());
  CHECK(ph.radius_f2 == std::numeric_limits<double>::infinity());
  CHECK(ph.f2_log_coeffs.empty());

  // Power slot with an integer exponent: one monomial, landing at index
  // j = alpha of the nonsingular part.
  auto mp = AnnularModel::power(3, 0.5, 2.0, 2.0, 1, 1);
  auto sp = extension_coeffs(log_jet(mp, 1, 1, 0.1, 40), 20);
  auto pp = laurent_split(sp);
  CHECK(std::abs(pp.f1_coeffs[2] - 1.0) <= 1e-12);
  double rest = 0.0;
  for (std::size_t j = 0; j < pp.f1_coeffs.size(); ++j) {
    if (j != 2) rest = std::max(rest, std::abs(pp.f1_coeffs[j]));
  }
  for (const cplx& c : pp.f2_coeffs) rest = std::max(rest, std::abs(c));
  CHECK(rest <= 1e-12);
  CHECK(pp.radius_f1 == std::numeric_limits<double>::infinity());

  // Growth-free model: both radii report infinite.
  auto me = AnnularModel::exponential(2, 1.0, 2.0, {0.8, 0.3, 0.0});
  auto se = extension_coeffs_even(log_jet(me, 1, 1, std::log(1.4), 40), 20);
  auto pe = laurent_split(se);
  CHECK(pe.radius_f1 == std::numeric_limits<double>::infinity());
  CHECK(pe.radius_f2 == std::numeric_limits<double>::infinity());

  // Even dimension segregates the log-flagged slot.
  auto ml = AnnularModel::harmonic(2, 0.5, 2.0, {{0, 1, 0.7, 0.0}}, 0.35);
  auto sl = extension_coeffs_even(log_jet(ml, 0, 1, 0.0, 40), 20);
  auto pl = laurent_split(sl);
  REQUIRE(!pl.f2_log_coeffs.empty());
  CHECK(std::abs(pl.f2_log_coeffs[0] - 0.35) <= 1e-12);
  CHECK(std::abs(pl.f2_coeffs[0]) == 0.0);
}

TEST_CASE("assembled extension restricts to the model on the annulus") {
  std::mt19937 rng(42);

  auto mh = AnnularModel::harmonic(
      3, 0.5, 2.0, {{0, 1, 0.3, 0.2}, {1, 2, 1.0, 0.4}, {2, 3, 0.25, 0.1}},
      0.0);
  AnnularExtension eh(mh, 12, 20);
  CHECK(eh.r_out() == doctest::Approx(2.0));
  for (int i = 0; i < 50; ++i) {
    Vec3 x = random_annulus_point(rng, 3, 0.55, 1.9);
    cplx F = eh.eval({cplx(x[0]), cplx(x[1]), cplx(x[2])});
    CHECK(std::abs(F.real() - mh.eval(x)) <= 1e-9);
    CHECK(std::abs(F.imag()) <= 1e-12);
  }

  auto me = AnnularModel::exponential(2, 1.0, 2.0, {0.8, 0.3, 0.0});
  AnnularExtension ee(me, 12, 20);
  for (int i = 0; i < 50; ++i) {
    Vec3 x = random_annulus_point(rng, 2, 1.05, 1.95);
    cplx F = ee.eval({cplx(x[0]), cplx(x[1]), cplx(0.0)});
    CHECK(std::abs(F.real() - me.eval(x)) <= 1e-8);
  }

  auto mg = AnnularModel::eigen(3, 0.5, 2.0, 2.25, {0.6, 0.8, 0.0});
  AnnularExtension eg(mg, 12, 20);
  for (int i = 0; i < 50; ++i) {
    Vec3 x = random_annulus_point(rng, 3, 0.55, 1.9);
    cplx F = eg.eval({cplx(x[0]), cplx(x[1]), cplx(x[2])});
    CHECK(std::abs(F.real() - mg.eval(x)) <= 1e-6);
  }
}

TEST_CASE("assembled extension matches the closed-form continuation") {
  // alpha r^k Y + beta r^{-k-1} Y continues to alpha (r^k Y)(z) +
  // beta q^{-(2k+1)/2} (r^k Y)(z); checking against that oracle validates
  // the whole q-power bookkeeping.
  std::mt19937 rng(7);
  auto m = AnnularModel::harmonic(
      3, 0.5, 2.0, {{0, 1, 0.3, 0.2}, {1, 2, 1.0, 0.4}, {2, 3, 0.25, 0.1}},
      0.0);
  AnnularExtension ext(m, 12, 20);
  HarmonicBasis b0(3, 0), b1(3, 1), b2(3, 2);
  double conj_err = 0.0;
  double oracle_err = 0.0;
  for (int i = 0; i < 20; ++i) {
    Vec3 x = random_annulus_point(rng, 3, 1.1, 1.3);
    CVec3 z{cplx(x[0], testutil::uniform(rng, -0.05, 0.05)),
            cplx(x[1], testutil::uniform(rng, -0.05, 0.05)),
            cplx(x[2], testutil::uniform(rng, -0.05, 0.05))};
    CVec3 zc{std::conj(z[0]), std::conj(z[1]), std::conj(z[2])};
    cplx F = ext.eval(z);
    conj_err = std::max(conj_err, std::abs(ext.eval(zc) - std::conj(F)));

    cplx q = z[0] * z[0] + z[1] * z[1] + z[2] * z[2];
    auto qpow = [&](double e) { return std::exp(e * std::log(q)); };
    cplx want = 0.3 * b0.eval_solid(1, z) + 0.2 * qpow(-0.5) * b0.eval_solid(1, z) +
                1.0 * b1.eval_solid(2, z) + 0.4 * qpow(-1.5) * b1.eval_solid(2, z) +
                0.25 * b2.eval_solid(3, z) + 0.1 * qpow(-2.5) * b2.eval_solid(3, z);
    oracle_err = std::max(oracle_err, std::abs(F - want));
  }
  CHECK(conj_err <= 1e-12);
  CHECK(oracle_err <= 1e-10);
}

TEST_CASE("assembled extension continues harmonic polynomials exactly") {
  // A solid harmonic is a polynomial; its only analytic continuation is
  // the same polynomial read at complex arguments.
  auto m = AnnularModel::harmonic(3, 0.5, 2.0, {{2, 2, 1.0, 0.0}}, 0.0);
  AnnularExtension ext(m, 6, 10);
  HarmonicBasis b(3, 2);
  CVec3 z{cplx(0.9, 0.2), cplx(-0.4, 0.1), cplx(0.7, -0.15)};
  CHECK(std::abs(ext.eval(z) - b.eval_solid(2, z)) <= 1e-12);
}

TEST_CASE("assembled extension reports the violated domain constraint") {
  auto m = AnnularModel::harmonic(3, 0.5, 2.0, {{1, 1, 1.0, 0.5}}, 0.0);
  AnnularExtension ext(m, 4, 8);
  auto expect = [&](const CVec3& z, const std::string& which) {
    try {
      ext.eval(z);
      FAIL("expected a DomainError");
    } catch (const DomainError& e) {
      CHECK(e.constraint == which);
    }
  };
  expect({cplx(0.4), cplx(0.0), cplx(0.0)}, "L-");
  expect({cplx(2.5), cplx(0.0), cplx(0.0)}, "L+");
  // L_pm = 1.3 / 1.1 sit inside the annulus but q = -1.43 is on the cut.
  expect({cplx(0.0, 1.2), cplx(0.1), cplx(0.0)}, "cut");
  // Isotropic directions collapse L_minus to 0.
  expect({cplx(1.0), cplx(0.0, 1.0), cplx(0.0)}, "L-");
}

TEST_CASE("growth-limited models shrink the certified outer radius") {
  // tau = 1/r0 = 2 caps the domain at 1/(2 tau) = 0.25 < r0: empty.
  auto mp = AnnularModel::power(3, 0.5, 2.0, 2.0, 1, 1);
  AnnularExtension ext(mp, 4, 8);
  CHECK(ext.r_out() == doctest::Approx(0.25));
  try {
    ext.eval({cplx(1.0), cplx(0.0), cplx(0.0)});
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(e.constraint == "L+");
  }
}

TEST_CASE("extension constructor validates degree and expansion point") {
  auto m = AnnularModel::harmonic(3, 0.5, 2.0, {{1, 1, 1.0, 0.0}}, 0.0);
  CHECK_THROWS_AS(AnnularExtension(m, -1, 8), InvalidInputError);
  CHECK_THROWS_AS(AnnularExtension(m, 4, 8, 40, std::log(0.3)),
                  InvalidInputError);
  CHECK_THROWS_AS(AnnularExtension(m, 4, 8, 40, std::log(2.5)),
                  InvalidInputError);
  AnnularExtension ok(m, 4, 8, 40, std::log(0.7));
  CHECK(ok.v0() == doctest::Approx(std::log(0.7)));

  CHECK(ok.order_count(0) == 1);
  CHECK(ok.order_count(2) == 5);  // 2k+1 in three dimensions
  CHECK_THROWS_AS(ok.order_count(5), InvalidInputError);
  CHECK_THROWS_AS(ok.series(0, 2), InvalidInputError);
  CHECK_THROWS_AS(ok.series(-1, 1), InvalidInputError);
}

TEST_CASE("one-call evaluation wraps the assembled extension") {
  auto m = AnnularModel::harmonic(3, 0.5, 2.0, {{1, 1, 2.0, 0.5}}, 0.0);
  CVec3 z{cplx(1.1, 0.02), cplx(0.3), cplx(-0.2)};
  AnnularExtension ext(m, 6, 10);
  CHECK(std::abs(eval_extension(m, z, 6, 10) - ext.eval(z)) == 0.0);
}

TEST_CASE("coefficient dump is complete, ordered and deterministic") {
  auto m = AnnularModel::harmonic(
      2, 0.5, 2.0, {{0, 1, 0.7, 0.0}, {2, 1, 0.4, 0.25}}, 0.35);
  AnnularExtension ext(m, 2, 3, 8);
  std::string text = extension_to_json(ext);
  auto arr = nlohmann::json::parse(text);
  REQUIRE(arr.is_array());
  // a_0 + a_1 + a_2 slots in the plane = 1 + 2 + 2, each with 2J+2 records.
  CHECK(arr.size() == std::size_t(5 * 8));
  const auto& first = arr[0];
  CHECK(first["k"] == 0);
  CHECK(first["l"] == 1);
  CHECK(first["j"] == 0);
  CHECK(std::abs(double(first["re"]) - 0.7) <= 1e-12);
  CHECK(double(first["im"]) == 0.0);
  CHECK(!bool(first["log_flag"]));
  CHECK(bool(arr[1]["log_flag"]));  // the degree-0 log slot
  CHECK(std::abs(double(arr[1]["re"]) - 0.35) <= 1e-12);

  // Rebuilding from the same inputs reproduces the bytes.
  AnnularExtension again(m, 2, 3, 8);
  CHECK(extension_to_json(again) == text);
}
