#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "polyann/errors.hpp"
#include "polyann/harmonics.hpp"
#include "polyann/models.hpp"

using namespace polyann;

namespace {

// Second-order central Laplacian: 2d+1 stencil points (7 in 3-D). The step
// balances O(h^2) truncation against cancellation noise ~eps/h^2, so the
// fixtures below keep coefficients and radii in a range where both stay
// well under the tolerances asserted.
double fd_laplacian(const std::function<double(const Vec3&)>& f, const Vec3& x,
                    int d, double h) {
  double center = f(x);
  double acc = 0.0;
  for (int i = 0; i < d; ++i) {
    Vec3 hi = x, lo = x;
    hi[std::size_t(i)] += h;
    lo[std::size_t(i)] -= h;
    acc += f(hi) - 2.0 * center + f(lo);
  }
  return acc / (h * h);
}

double fd_radial(const std::function<double(const Vec3&)>& f, const Vec3& x,
                 int d, double h) {
  double r = 0.0;
  for (int i = 0; i < d; ++i) r += x[std::size_t(i)] * x[std::size_t(i)];
  r = std::sqrt(r);
  Vec3 hi{}, lo{};
  for (int i = 0; i < d; ++i) {
    hi[std::size_t(i)] = x[std::size_t(i)] * (r + h) / r;
    lo[std::size_t(i)] = x[std::size_t(i)] * (r - h) / r;
  }
  return (f(hi) - f(lo)) / (2.0 * h);
}

Vec3 random_point(std::mt19937& rng, int d, double rmin, double rmax) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    Vec3 v{};
    double n2 = 0.0;
    for (int i = 0; i < d; ++i) {
      v[std::size_t(i)] = gauss(rng);
      n2 += v[std::size_t(i)] * v[std::size_t(i)];
    }
    if (n2 < 1e-12) continue;
    double r = testutil::uniform(rng, rmin, rmax);
    double s = r / std::sqrt(n2);
    for (int i = 0; i < d; ++i) v[std::size_t(i)] *= s;
    return v;
  }
}

// Direct product, written independently of the library's loop.
double coeff_oracle(double alpha, int k, int d, int p) {
  double acc = 1.0;
  for (int j = 0; j < p; ++j) {
    acc *= (2.0 * alpha - 2.0 * j);
    acc *= (2.0 * alpha + double(d) - 2.0 + 2.0 * k - 2.0 * j);
  }
  return acc;
}

}  // namespace

TEST_CASE("factories validate their inputs") {
  CHECK_THROWS_AS(AnnularModel::harmonic(4, 0.5, 2.0, {}), InvalidInputError);
  CHECK_THROWS_AS(AnnularModel::harmonic(3, 0.0, 2.0, {}), InvalidInputError);
  CHECK_THROWS_AS(AnnularModel::harmonic(3, 2.0, 0.5, {}), InvalidInputError);
  CHECK_THROWS_AS(AnnularModel::harmonic(3, 0.5, 2.0, {}, 0.3),
                  InvalidInputError);
  CHECK_THROWS_AS(
      AnnularModel::harmonic(2, 0.5, 2.0, {{0, 1, 1.0, 0.5}}),
      InvalidInputError);
  CHECK_THROWS_AS(
      AnnularModel::harmonic(3, 0.5, 2.0, {{-1, 1, 1.0, 0.0}}),
      InvalidInputError);
  CHECK_THROWS_AS(AnnularModel::power(3, 0.5, 2.0, 1.0, 1, 0),
                  InvalidInputError);
  CHECK_THROWS_AS(AnnularModel::power(3, 0.5, 2.0, 1.0, 1, 4),
                  InvalidInputError);
  CHECK_THROWS_AS(AnnularModel::exponential(2, 0.5, 2.0, {1.0, 0.0, 0.5}),
                  InvalidInputError);
  CHECK_THROWS_AS(AnnularModel::eigen(3, 0.5, 2.0, 1.0, {0.0, 0.0, 0.0}),
                  InvalidInputError);

  auto m = AnnularModel::exponential(3, 0.5, 2.0, {1.0, 0.0, 0.0});
  CHECK_THROWS_AS(m.laplacian_iterate(-1, {1.0, 0.0, 0.0}), InvalidInputError);
  CHECK_THROWS_AS(m.radial_derivative(-1, {1.0, 0.0, 0.0}), InvalidInputError);
  CHECK_THROWS_AS(m.eval({0.25, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(m.eval({2.5, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(m.eval({0.5, 0.0, 0.0}), DomainError);  // boundary excluded
}

TEST_CASE("harmonic family is annihilated by the Laplacian") {
  std::mt19937 rng(61001);
  // Coefficients and radii kept small enough that the 7-point stencil's
  // truncation error stays an order of magnitude under the tolerance.
  auto m3 = AnnularModel::harmonic(3, 0.6, 2.0,
                                   {{0, 1, 0.4, 0.5},
                                    {1, 2, -0.3, 0.4},
                                    {2, 4, 0.25, 0.2}});
  auto m2 = AnnularModel::harmonic(2, 0.6, 2.0,
                                   {{0, 1, 0.4, 0.0},
                                    {1, 1, 0.5, -0.3},
                                    {2, 2, -0.25, 0.3}},
                                   0.35);
  const double h = 6e-5;
  for (int t = 0; t < 25; ++t) {
    Vec3 x3 = random_point(rng, 3, 1.1, 1.5);
    double fd = fd_laplacian([&](const Vec3& y) { return m3.eval(y); }, x3, 3, h);
    CHECK(std::abs(fd) <= 1e-6);
    Vec3 x2 = random_point(rng, 2, 1.1, 1.5);
    fd = fd_laplacian([&](const Vec3& y) { return m2.eval(y); }, x2, 2, h);
    CHECK(std::abs(fd) <= 1e-6);
    CHECK(m3.laplacian_iterate(1, x3) == 0.0);
    CHECK(m3.laplacian_iterate(4, x3) == 0.0);
    CHECK(m2.laplacian_iterate(1, x2) == 0.0);
  }
}

TEST_CASE("harmonic family radial data matches angular projections") {
  auto m = AnnularModel::harmonic(3, 0.5, 2.0, {{2, 3, 3.0, 0.5}});
  SphericalContext ctx(3, 6);
  RadialFunction f = [&](const Vec3& x) { return m.eval(x); };
  // alpha r^k + beta r^{-k-d+2} at r = 1.2.
  double expected = 3.0 * 1.44 + 0.5 * std::pow(1.2, -3.0);
  cplx got = flc(ctx, f, 2, 3, 1.2, 0.5, 2.0);
  CHECK(std::abs(got - cplx(expected)) <= 1e-10);
  // Other basis slots see nothing.
  CHECK(std::abs(flc(ctx, f, 2, 1, 1.2, 0.5, 2.0)) <= 1e-10);
  CHECK(std::abs(flc(ctx, f, 1, 1, 1.2, 0.5, 2.0)) <= 1e-10);
  CHECK(std::abs(flc(ctx, f, 4, 2, 1.2, 0.5, 2.0)) <= 1e-10);

  // d = 2 with the log branch: projection onto Y_{0,1} is
  // (alpha + log_coeff log r) / Y_{0,1}-normalization already folded in.
  auto m2 = AnnularModel::harmonic(2, 0.5, 2.0,
                                   {{0, 1, 0.7, 0.0}, {3, 2, 0.2, 0.1}}, 0.6);
  SphericalContext ctx2(2, 6);
  RadialFunction f2 = [&](const Vec3& x) { return m2.eval(x); };
  double want = 0.7 + 0.6 * std::log(1.3);
  CHECK(std::abs(flc(ctx2, f2, 0, 1, 1.3, 0.5, 2.0) - cplx(want)) <= 1e-10);
  double want3 = 0.2 * std::pow(1.3, 3.0) + 0.1 * std::pow(1.3, -3.0);
  CHECK(std::abs(flc(ctx2, f2, 3, 2, 1.3, 0.5, 2.0) - cplx(want3)) <= 1e-10);
}

TEST_CASE("power family Laplacian iterates follow the coefficient product") {
  // Degree-raising fixture: alpha = 0.5, k = 1, d = 3 gives
  // c_{0.5,1} = (2a)(2a + d - 2 + 2k) = 1 * 4 = 4, so one Laplacian maps
  // |x| * Y_1(x) to 4 |x|^{-1} Y_1(x) with Y_1 the solid degree-1 harmonic.
  CHECK(power_family_coefficient(0.5, 1, 3, 1) == 4.0);
  HarmonicBasis b31(3, 1);
  for (int l = 1; l <= 3; ++l) {
    auto m = AnnularModel::power(3, 0.5, 3.0, 0.5, 1, l);
    Vec3 x{0.9, -0.4, 1.1};
    double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    CVec3 z{cplx(x[0]), cplx(x[1]), cplx(x[2])};
    double expected = 4.0 / r * b31.eval_solid(l, z).real();
    CHECK(m.laplacian_iterate(1, x) == doctest::Approx(expected).epsilon(1e-13));
    // And the finite-difference Laplacian agrees with the closed form.
    double fd =
        fd_laplacian([&](const Vec3& y) { return m.eval(y); }, x, 3, 6e-5);
    CHECK(std::abs(fd - expected) <= 1e-6);
  }
}

TEST_CASE("power family coefficient vanishes exactly on the integer lattice") {
  for (int d : {2, 3}) {
    for (int k = 0; k <= 3; ++k) {
      for (int p = 1; p <= 6; ++p) {
        // First branch: alpha in {0, ..., p-1}.
        for (int j = 0; j < p; ++j) {
          CHECK(power_family_coefficient(double(j), k, d, p) == 0.0);
        }
        // Second branch: alpha = 1 - d/2 - k + j for j <= p-1.
        for (int j = 0; j < p; ++j) {
          double alpha = 1.0 - double(d) / 2.0 - k + j;
          CHECK(power_family_coefficient(alpha, k, d, p) == 0.0);
        }
        // Off-lattice alpha: 0.37 is neither an integer nor a half-integer,
        // so no factor can vanish.
        CHECK(power_family_coefficient(0.37, k, d, p) != 0.0);
        CHECK(power_family_coefficient(-2.63, k, d, p) != 0.0);
      }
    }
  }
  // The second branch stops at j = p-1: for odd d the candidate
  // alpha = 1 - d/2 - k + p is a half-integer missed by both branches.
  for (int k = 0; k <= 3; ++k) {
    for (int p = 1; p <= 6; ++p) {
      double alpha = 1.0 - 1.5 - k + p;
      CHECK(power_family_coefficient(alpha, k, 3, p) != 0.0);
    }
  }
  // Finite-order degenerate case: |x| Y_0 in d = 3 is annihilated by the
  // second Laplacian (1/r is harmonic), hence c_{0.5,p} = 0 for p >= 2.
  CHECK(power_family_coefficient(0.5, 0, 3, 1) == 2.0);
  for (int p = 2; p <= 8; ++p) {
    CHECK(power_family_coefficient(0.5, 0, 3, p) == 0.0);
  }
  // Random spot agreement with the direct product.
  std::mt19937 rng(61002);
  for (int t = 0; t < 200; ++t) {
    double alpha = testutil::uniform(rng, -4.0, 4.0);
    int k = testutil::uniform_int(rng, 0, 4);
    int d = 2 + testutil::uniform_int(rng, 0, 1);
    int p = testutil::uniform_int(rng, 0, 6);
    double want = coeff_oracle(alpha, k, d, p);
    CHECK(power_family_coefficient(alpha, k, d, p) ==
          doctest::Approx(want).epsilon(1e-14));
  }
}

TEST_CASE("exponential and eigen families scale exactly under the Laplacian") {
  auto m = AnnularModel::exponential(3, 0.5, 2.0, {1.0, 0.0, 0.0});
  CHECK(m.laplacian_iterate(3, {1.0, 1.0, 0.0}) == std::exp(1.0));

  std::mt19937 rng(61003);
  for (int t = 0; t < 20; ++t) {
    int d = 2 + testutil::uniform_int(rng, 0, 1);
    Vec3 a{testutil::uniform(rng, -1.2, 1.2), testutil::uniform(rng, -1.2, 1.2),
           d == 3 ? testutil::uniform(rng, -1.2, 1.2) : 0.0};
    double a2 = a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
    if (a2 < 0.25) continue;
    auto me = AnnularModel::exponential(d, 0.5, 2.0, a);
    Vec3 x = random_point(rng, d, 0.8, 1.8);
    double f0 = me.eval(x);
    for (int p = 1; p <= 6; ++p) {
      CHECK(me.laplacian_iterate(p, x) ==
            doctest::Approx(std::pow(a2, p) * f0).epsilon(1e-14));
    }
    double fd = fd_laplacian([&](const Vec3& y) { return me.eval(y); }, x, d,
                             6e-5);
    CHECK(std::abs(fd - a2 * f0) <= 1e-5 * std::abs(a2 * f0) + 1e-7);
  }

  for (double lambda : {2.25, -1.44}) {
    auto mg = AnnularModel::eigen(3, 0.5, 2.0, lambda, {3.0, 4.0, 0.0});
    CHECK(mg.eigen_direction()[0] == 3.0 / 5.0);
    CHECK(mg.eigen_direction()[1] == 4.0 / 5.0);
    for (int t = 0; t < 10; ++t) {
      Vec3 x = random_point(rng, 3, 0.8, 1.8);
      double f0 = mg.eval(x);
      for (int p = 1; p <= 5; ++p) {
        CHECK(mg.laplacian_iterate(p, x) ==
              doctest::Approx(std::pow(lambda, p) * f0).epsilon(1e-13));
      }
      double fd = fd_laplacian([&](const Vec3& y) { return mg.eval(y); }, x, 3,
                               6e-5);
      CHECK(std::abs(fd - lambda * f0) <= 1e-6 * std::abs(lambda) + 1e-6);
    }
  }

  auto mz = AnnularModel::eigen(2, 0.5, 2.0, 0.0, {1.0, 0.0, 0.0});
  CHECK(mz.eval({1.0, 0.3, 0.0}) == 1.0);
  CHECK(mz.laplacian_iterate(1, {1.0, 0.3, 0.0}) == 0.0);
  CHECK(mz.laplacian_iterate(7, {1.0, 0.3, 0.0}) == 0.0);
}

TEST_CASE("iterated Laplacians are consistent one order up") {
  // Finite-difference Laplacian of Delta^p f against the closed-form
  // Delta^{p+1} f, relative tolerance 1e-5. Sample points are resampled
  // away from nodal surfaces so the relative comparison is meaningful.
  std::mt19937 rng(61004);
  const double h = 5e-5;

  auto check_family = [&](const AnnularModel& m, int points) {
    for (int p = 0; p <= 3; ++p) {
      for (int t = 0; t < points; ++t) {
        Vec3 x{};
        double closed = 0.0;
        for (int guard = 0; guard < 200; ++guard) {
          x = random_point(rng, m.dimension(), 1.0, 1.5);
          closed = m.laplacian_iterate(p + 1, x);
          double scale = std::abs(m.laplacian_iterate(p, x));
          if (std::abs(closed) > 0.05 * std::max(scale, 1e-3)) break;
        }
        double fd = fd_laplacian(
            [&](const Vec3& y) { return m.laplacian_iterate(p, y); }, x,
            m.dimension(), h);
        CHECK(std::abs(fd - closed) <= 1e-5 * std::abs(closed));
      }
    }
  };

  check_family(AnnularModel::power(3, 0.5, 2.0, 1.3, 1, 2), 13);
  check_family(AnnularModel::power(2, 0.5, 2.0, 0.9, 2, 2), 13);
  check_family(AnnularModel::exponential(3, 0.5, 2.0, {0.8, -0.5, 0.3}), 13);
  check_family(AnnularModel::eigen(3, 0.5, 2.0, 1.69, {0.0, 1.0, 0.0}), 13);
  check_family(AnnularModel::eigen(2, 0.5, 2.0, -1.21, {1.0, 1.0, 0.0}), 13);
}

TEST_CASE("radial derivatives match centered differences") {
  std::mt19937 rng(61005);
  const double h = 1e-5;

  auto check_family = [&](const AnnularModel& m) {
    for (int p = 0; p <= 3; ++p) {
      for (int t = 0; t < 10; ++t) {
        Vec3 x = random_point(rng, m.dimension(), 1.0, 1.6);
        double fd = fd_radial(
            [&](const Vec3& y) { return m.laplacian_iterate(p, y); }, x,
            m.dimension(), h);
        CHECK(std::abs(fd - m.radial_derivative(p, x)) <= 1e-6);
      }
    }
  };

  check_family(AnnularModel::harmonic(
      3, 0.5, 2.0, {{0, 1, 0.4, 0.5}, {1, 3, -0.3, 0.4}, {2, 5, 0.25, 0.2}}));
  check_family(AnnularModel::harmonic(
      2, 0.5, 2.0, {{0, 1, 0.4, 0.0}, {2, 2, -0.25, 0.3}}, 0.35));
  check_family(AnnularModel::power(3, 0.5, 2.2, 1.1, 1, 2));
  check_family(AnnularModel::power(2, 0.5, 2.2, 0.7, 2, 1));
  check_family(AnnularModel::exponential(3, 0.5, 2.2, {0.8, -0.5, 0.3}));
  check_family(AnnularModel::eigen(3, 0.5, 2.2, 1.69, {1.0, 2.0, -2.0}));
  check_family(AnnularModel::eigen(2, 0.5, 2.2, -1.21, {1.0, 1.0, 0.0}));
  check_family(AnnularModel::eigen(2, 0.5, 2.2, 0.0, {1.0, 0.0, 0.0}));

  // The harmonic power rule, spelled out for a single alpha r^k term.
  auto mk = AnnularModel::harmonic(3, 0.5, 2.0, {{2, 3, 0.7, 0.0}});
  HarmonicBasis b(3, 2);
  Vec3 x{0.8, 0.9, -0.6};
  double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  Vec3 th{x[0] / r, x[1] / r, x[2] / r};
  double want = 0.7 * 2.0 * r * b.eval(3, th);
  CHECK(mk.radial_derivative(0, x) == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("type estimates certify order zero for harmonic and exponential") {
  auto mh = AnnularModel::harmonic(3, 0.5, 2.5,
                                   {{0, 1, 1.0, 0.5}, {2, 2, 0.3, 0.1}});
  auto th = estimate_type(mh, 1.0, 2.0, 30);
  REQUIRE(th.size() == 30);
  for (double t : th) CHECK(t == 0.0);

  auto me = AnnularModel::exponential(2, 0.5, 2.5, {1.0, 0.0, 0.0});
  auto te = estimate_type(me, 1.0, 2.0, 30);
  REQUIRE(te.size() == 30);
  // Closed form: max over [1,2] x S^1 of |Delta^p f| is e^2, attained at a
  // grid point, so t_p = (e^2 / (2p)!)^{1/2p} exactly.
  for (int p = 1; p <= 30; ++p) {
    double want = std::exp((2.0 - std::lgamma(2.0 * p + 1.0)) / (2.0 * p));
    CHECK(te[std::size_t(p - 1)] == doctest::Approx(want).epsilon(1e-12));
  }
  for (std::size_t i = 1; i < te.size(); ++i) CHECK(te[i] < te[i - 1]);
  CHECK(te.back() <= 0.2);
  CHECK(te.back() < 0.25);

  auto me3 = AnnularModel::exponential(3, 0.5, 2.5, {0.0, 0.0, 1.0});
  auto te3 = estimate_type(me3, 1.0, 2.0, 30);
  for (std::size_t i = 1; i < te3.size(); ++i) CHECK(te3[i] < te3[i - 1]);
  CHECK(te3.back() <= 0.2);
}

TEST_CASE("type estimate of a genuinely infinite-order power model") {
  // f = |x|^{-3/2} Y_0 on (0.5, 3): every Laplacian iterate survives
  // (alpha = -0.75 avoids the vanishing lattice), the maximum over [1,2]
  // sits at the inner radius, and t_p climbs toward 1/a = 1 from below.
  auto m = AnnularModel::power(3, 0.5, 3.0, -0.75, 0, 1);
  CHECK(m.tau_claimed() == 2.0);
  auto t = estimate_type(m, 1.0, 2.0, 30);
  REQUIRE(t.size() == 30);
  CHECK(t[9] < t[19]);
  CHECK(t[19] < t[29]);
  CHECK(t[29] <= 1.0);
  CHECK(std::abs(t[29] - 1.0) <= 0.15);

  CHECK_THROWS_AS(estimate_type(m, 0.4, 2.0, 30), InvalidInputError);
  CHECK_THROWS_AS(estimate_type(m, 1.0, 3.2, 30), InvalidInputError);
  CHECK_THROWS_AS(estimate_type(m, 2.0, 1.0, 30), InvalidInputError);
  CHECK_THROWS_AS(estimate_type(m, 1.0, 2.0, 4), InvalidInputError);
}

TEST_CASE("model JSON round-trips byte for byte") {
  std::vector<AnnularModel> models;
  models.push_back(AnnularModel::harmonic(
      2, 0.5, 2.0, {{0, 1, 1.5, 0.0}, {2, 2, -0.25, 0.3}}, 0.4));
  models.push_back(AnnularModel::power(3, 0.5, 3.0, -0.75, 2, 4));
  models.push_back(AnnularModel::exponential(3, 0.4, 1.9, {0.3, -0.2, 0.9}));
  models.push_back(AnnularModel::eigen(2, 0.5, 2.0, -1.21, {1.0, 1.0, 0.0}));

  for (const auto& m : models) {
    std::string text = model_to_json(m);
    AnnularModel back = model_from_json(text);
    CHECK(back.family() == m.family());
    CHECK(back.dimension() == m.dimension());
    CHECK(back.r0() == m.r0());
    CHECK(back.r1() == m.r1());
    CHECK(model_to_json(back) == text);
  }

  AnnularModel h = model_from_json(model_to_json(models[0]));
  REQUIRE(h.harmonic_terms().size() == 2);
  CHECK(h.harmonic_terms()[1].alpha == -0.25);
  CHECK(h.log_coeff() == 0.4);
  AnnularModel p = model_from_json(model_to_json(models[1]));
  CHECK(p.power_alpha() == -0.75);
  CHECK(p.power_k() == 2);
  CHECK(p.power_l() == 4);
  AnnularModel e = model_from_json(model_to_json(models[2]));
  CHECK(e.exp_vector()[2] == 0.9);
  AnnularModel g = model_from_json(model_to_json(models[3]));
  CHECK(g.eigen_lambda() == -1.21);
  CHECK(g.eigen_direction()[0] == doctest::Approx(std::sqrt(0.5)));

  // Values survive the trip, not just parameters.
  Vec3 x{1.1, -0.4, 0.7};
  CHECK(model_from_json(model_to_json(models[2])).laplacian_iterate(2, x) ==
        models[2].laplacian_iterate(2, x));
}

TEST_CASE("model JSON rejects malformed input") {
  CHECK_THROWS_AS(model_from_json("not json"), InvalidInputError);
  CHECK_THROWS_AS(model_from_json("{}"), InvalidInputError);
  CHECK_THROWS_AS(
      model_from_json(R"({"family":"spline","d":2,"r0":0.5,"r1":2.0,)"
                      R"("parameters":{}})"),
      InvalidInputError);
  CHECK_THROWS_AS(
      model_from_json(R"({"family":"exponential","d":3,"r0":0.5,"r1":2.0,)"
                      R"("parameters":{"a":[1.0,0.0]}})"),
      InvalidInputError);
  CHECK_THROWS_AS(
      model_from_json(R"({"family":"power","d":3,"r0":0.5,"r1":2.0,)"
                      R"("parameters":{"alpha":1.0}})"),
      InvalidInputError);
  CHECK_THROWS_AS(load_model("/nonexistent/path/model.json"),
                  ConfigurationError);

  auto m = AnnularModel::eigen(3, 0.5, 2.0, 2.25, {0.0, 1.0, 0.0});
  const char* path = "polyann_test_model_roundtrip.json";
  {
    std::ofstream out(path);
    out << model_to_json(m);
  }
  AnnularModel back = load_model(path);
  CHECK(back.eigen_lambda() == 2.25);
  CHECK(model_to_json(back) == model_to_json(m));
  std::remove(path);
}

TEST_CASE("claimed type bounds") {
  CHECK(AnnularModel::power(3, 0.5, 2.0, 1.0, 0, 1).tau_claimed() == 2.0);
  CHECK(AnnularModel::power(2, 0.25, 2.0, 1.0, 0, 1).tau_claimed() == 4.0);
  CHECK(AnnularModel::harmonic(3, 0.5, 2.0, {}).tau_claimed() == 0.0);
  CHECK(AnnularModel::exponential(3, 0.5, 2.0, {1.0, 0.0, 0.0}).tau_claimed() ==
        0.0);
  CHECK(AnnularModel::eigen(3, 0.5, 2.0, 1.0, {1.0, 0.0, 0.0}).tau_claimed() ==
        0.0);
}
