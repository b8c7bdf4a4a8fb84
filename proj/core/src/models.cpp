#include "polyann/models.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "polyann/errors.hpp"

namespace polyann {

namespace {

double dot(const Vec3& a, const Vec3& b, int d) {
  double acc = 0.0;
  for (int i = 0; i < d; ++i) acc += a[std::size_t(i)] * b[std::size_t(i)];
  return acc;
}

double radius_of(const Vec3& x, int d) {
  return std::sqrt(dot(x, x, d));
}

}  // namespace

AnnularModel::AnnularModel(ModelFamily f, int d, double r0, double r1)
    : family_(f), d_(d), r0_(r0), r1_(r1) {
  if (d != 2 && d != 3) {
    throw InvalidInputError("AnnularModel: only d = 2 and d = 3 are supported");
  }
  if (!(0.0 < r0 && r0 < r1)) {
    throw InvalidInputError("AnnularModel: need 0 < r0 < r1");
  }
}

AnnularModel AnnularModel::harmonic(int d, double r0, double r1,
                                    std::vector<HarmonicTerm> terms,
                                    double log_coeff) {
  AnnularModel m(ModelFamily::Harmonic, d, r0, r1);
  if (log_coeff != 0.0 && d != 2) {
    throw InvalidInputError("AnnularModel: log term exists only for d = 2");
  }
  int kmax = 0;
  for (const auto& t : terms) {
    if (t.k < 0) throw InvalidInputError("AnnularModel: negative degree");
    if (d == 2 && t.k == 0 && t.beta != 0.0) {
      throw InvalidInputError(
          "AnnularModel: for d = 2, k = 0 the second solution is the log "
          "term; use log_coeff");
    }
    kmax = std::max(kmax, t.k);
  }
  m.terms_ = std::move(terms);
  m.log_coeff_ = log_coeff;
  for (int k = 0; k <= kmax; ++k) m.basis_cache_.emplace_back(d, k);
  return m;
}

AnnularModel AnnularModel::power(int d, double r0, double r1, double alpha,
                                 int k, int l) {
  AnnularModel m(ModelFamily::Power, d, r0, r1);
  if (k < 0) throw InvalidInputError("AnnularModel: negative degree");
  m.alpha_ = alpha;
  m.k_ = k;
  m.l_ = l;
  for (int kk = 0; kk <= k; ++kk) m.basis_cache_.emplace_back(d, kk);
  if (l < 1 || l > m.basis_cache_.back().count()) {
    throw InvalidInputError("AnnularModel: basis index out of range");
  }
  return m;
}

AnnularModel AnnularModel::exponential(int d, double r0, double r1,
                                       const Vec3& a) {
  AnnularModel m(ModelFamily::Exponential, d, r0, r1);
  m.a_ = a;
  if (d == 2 && a[2] != 0.0) {
    throw InvalidInputError("AnnularModel: third component must be 0 for d=2");
  }
  return m;
}

AnnularModel AnnularModel::eigen(int d, double r0, double r1, double lambda,
                                 const Vec3& direction) {
  AnnularModel m(ModelFamily::Eigen, d, r0, r1);
  double n = radius_of(direction, d);
  if (n == 0.0) {
    throw InvalidInputError("AnnularModel: eigen direction must be nonzero");
  }
  // Skip the division when the input is already unit length so that
  // normalization is idempotent and serialization round-trips bytewise.
  double scale = std::abs(n - 1.0) <= 8 * std::numeric_limits<double>::epsilon()
                     ? 1.0
                     : n;
  for (int i = 0; i < d; ++i) {
    m.a_[std::size_t(i)] = direction[std::size_t(i)] / scale;
  }
  m.lambda_ = lambda;
  return m;
}

const HarmonicBasis& AnnularModel::basis(int k) const {
  while (int(basis_cache_.size()) <= k) {
    basis_cache_.emplace_back(d_, int(basis_cache_.size()));
  }
  return basis_cache_[std::size_t(k)];
}

void AnnularModel::check_inside(const Vec3& x) const {
  double r = radius_of(x, d_);
  if (!(r0_ < r && r < r1_)) {
    throw DomainError("AnnularModel: point outside the annulus", "annulus");
  }
}

double AnnularModel::tau_claimed() const {
  return family_ == ModelFamily::Power ? 1.0 / r0_ : 0.0;
}

double AnnularModel::laplacian_iterate(int p, const Vec3& x) const {
  if (p < 0) throw InvalidInputError("laplacian_iterate: negative order");
  check_inside(x);
  double r = radius_of(x, d_);
  switch (family_) {
    case ModelFamily::Harmonic: {
      if (p >= 1) return 0.0;
      Vec3 th{x[0] / r, x[1] / r, x[2] / r};
      double acc = 0.0;
      for (const auto& t : terms_) {
        double radial = t.alpha * std::pow(r, double(t.k)) +
                        t.beta * std::pow(r, double(-t.k - d_ + 2));
        acc += radial * basis(t.k).eval(t.l, th);
      }
      if (log_coeff_ != 0.0) {
        acc += log_coeff_ * std::log(r) * basis(0).eval(1, th);
      }
      return acc;
    }
    case ModelFamily::Power: {
      double c = power_family_coefficient(alpha_, k_, d_, p);
      if (c == 0.0) return 0.0;
      Vec3 th{x[0] / r, x[1] / r, x[2] / r};
      return c * std::pow(r, 2 * alpha_ - 2 * p + k_) * basis(k_).eval(l_, th);
    }
    case ModelFamily::Exponential: {
      double a2 = dot(a_, a_, d_);
      return std::pow(a2, double(p)) * std::exp(dot(a_, x, d_));
    }
    case ModelFamily::Eigen: {
      double lp = std::pow(lambda_, double(p));
      if (lambda_ > 0.0) {
        return lp * std::exp(std::sqrt(lambda_) * dot(a_, x, d_));
      }
      if (lambda_ < 0.0) {
        return lp * std::cos(std::sqrt(-lambda_) * dot(a_, x, d_));
      }
      return p == 0 ? 1.0 : 0.0;
    }
  }
  throw InternalError("laplacian_iterate: unknown family");
}

double AnnularModel::radial_derivative(int p, const Vec3& x) const {
  if (p < 0) throw InvalidInputError("radial_derivative: negative order");
  check_inside(x);
  double r = radius_of(x, d_);
  Vec3 th{x[0] / r, x[1] / r, x[2] / r};
  switch (family_) {
    case ModelFamily::Harmonic: {
      if (p >= 1) return 0.0;
      double acc = 0.0;
      for (const auto& t : terms_) {
        double radial =
            t.alpha * t.k * std::pow(r, double(t.k - 1)) +
            t.beta * double(-t.k - d_ + 2) * std::pow(r, double(-t.k - d_ + 1));
        acc += radial * basis(t.k).eval(t.l, th);
      }
      if (log_coeff_ != 0.0) acc += log_coeff_ / r * basis(0).eval(1, th);
      return acc;
    }
    case ModelFamily::Power: {
      double c = power_family_coefficient(alpha_, k_, d_, p);
      if (c == 0.0) return 0.0;
      double mu = 2 * alpha_ - 2 * p + k_;
      return c * mu * std::pow(r, mu - 1.0) * basis(k_).eval(l_, th);
    }
    case ModelFamily::Exponential: {
      double a2 = dot(a_, a_, d_);
      double proj = dot(a_, th, d_);
      return std::pow(a2, double(p)) * proj * std::exp(r * proj);
    }
    case ModelFamily::Eigen: {
      double lp = std::pow(lambda_, double(p));
      double proj = dot(a_, th, d_);
      if (lambda_ > 0.0) {
        double s = std::sqrt(lambda_);
        return lp * s * proj * std::exp(s * r * proj);
      }
      if (lambda_ < 0.0) {
        double w = std::sqrt(-lambda_);
        return -lp * w * proj * std::sin(w * r * proj);
      }
      return 0.0;
    }
  }
  throw InternalError("radial_derivative: unknown family");
}

double power_family_coefficient(double alpha, int k, int d, int p) {
  double acc = 1.0;
  for (int j = 0; j < p; ++j) {
    acc *= (2 * alpha - 2 * j) * (2 * alpha + d - 2 + 2 * k - 2 * j);
  }
  return acc;
}

std::vector<double> estimate_type(const AnnularModel& m, double a, double b,
                                  int p_max) {
  if (!(m.r0() < a && a < b && b < m.r1())) {
    throw InvalidInputError("estimate_type: need r0 < a < b < r1");
  }
  if (p_max < 5) throw InvalidInputError("estimate_type: need p_max >= 5");

  // Tensor sample grid of the closed sub-annulus.
  std::vector<Vec3> grid;
  const int nr = 32;
  if (m.dimension() == 2) {
    const int na = 64;
    for (int i = 0; i < nr; ++i) {
      double r = a + (b - a) * i / (nr - 1);
      for (int j = 0; j < na; ++j) {
        double phi = 2.0 * std::numbers::pi * j / na;
        grid.push_back({r * std::cos(phi), r * std::sin(phi), 0.0});
      }
    }
  } else {
    const int npol = 32, naz = 64;
    for (int i = 0; i < nr; ++i) {
      double r = a + (b - a) * i / (nr - 1);
      for (int ip = 0; ip < npol; ++ip) {
        double t = std::numbers::pi * (ip + 0.5) / npol;
        for (int j = 0; j < naz; ++j) {
          double phi = 2.0 * std::numbers::pi * j / naz;
          grid.push_back({r * std::sin(t) * std::cos(phi),
                          r * std::sin(t) * std::sin(phi), r * std::cos(t)});
        }
      }
    }
  }

  std::vector<double> out;
  out.reserve(std::size_t(p_max));
  for (int p = 1; p <= p_max; ++p) {
    double mx = 0.0;
    for (const auto& x : grid) {
      mx = std::max(mx, std::abs(m.laplacian_iterate(p, x)));
    }
    double tp = mx == 0.0
                    ? 0.0
                    : std::exp((std::log(mx) - std::lgamma(2.0 * p + 1.0)) /
                               (2.0 * p));
    out.push_back(tp);
  }
  return out;
}

namespace {

using nlohmann::json;

ModelFamily family_from_string(const std::string& s) {
  if (s == "harmonic") return ModelFamily::Harmonic;
  if (s == "power") return ModelFamily::Power;
  if (s == "exponential") return ModelFamily::Exponential;
  if (s == "eigen") return ModelFamily::Eigen;
  throw InvalidInputError("model_from_json: unknown family '" + s + "'");
}

Vec3 vec_from_json(const json& j, int d) {
  if (!j.is_array() || int(j.size()) != d) {
    throw InvalidInputError("model_from_json: vector length must equal d");
  }
  Vec3 v{};
  for (int i = 0; i < d; ++i) v[std::size_t(i)] = j[std::size_t(i)].get<double>();
  return v;
}

}  // namespace

AnnularModel model_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("model_from_json: ") + e.what());
  }
  try {
    ModelFamily fam = family_from_string(j.at("family").get<std::string>());
    int d = j.at("d").get<int>();
    double r0 = j.at("r0").get<double>();
    double r1 = j.at("r1").get<double>();
    const json& p = j.at("parameters");
    switch (fam) {
      case ModelFamily::Harmonic: {
        std::vector<HarmonicTerm> terms;
        for (const auto& t : p.at("terms")) {
          terms.push_back({t.at("k").get<int>(), t.at("l").get<int>(),
                           t.at("alpha").get<double>(),
                           t.at("beta").get<double>()});
        }
        double lc = p.value("log_coeff", 0.0);
        return AnnularModel::harmonic(d, r0, r1, std::move(terms), lc);
      }
      case ModelFamily::Power:
        return AnnularModel::power(d, r0, r1, p.at("alpha").get<double>(),
                                   p.at("k").get<int>(), p.at("l").get<int>());
      case ModelFamily::Exponential:
        return AnnularModel::exponential(d, r0, r1, vec_from_json(p.at("a"), d));
      case ModelFamily::Eigen:
        return AnnularModel::eigen(d, r0, r1, p.at("lambda").get<double>(),
                                   vec_from_json(p.at("direction"), d));
    }
    throw InternalError("model_from_json: unreachable");
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("model_from_json: ") + e.what());
  }
}

AnnularModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError("load_model: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return model_from_json(ss.str());
}

std::string model_to_json(const AnnularModel& m) {
  json j;
  j["d"] = m.dimension();
  j["r0"] = m.r0();
  j["r1"] = m.r1();
  json p;
  switch (m.family()) {
    case ModelFamily::Harmonic: {
      j["family"] = "harmonic";
      json terms = json::array();
      for (const auto& t : m.harmonic_terms()) {
        terms.push_back(
            {{"k", t.k}, {"l", t.l}, {"alpha", t.alpha}, {"beta", t.beta}});
      }
      p["terms"] = terms;
      p["log_coeff"] = m.log_coeff();
      break;
    }
    case ModelFamily::Power:
      j["family"] = "power";
      p["alpha"] = m.power_alpha();
      p["k"] = m.power_k();
      p["l"] = m.power_l();
      break;
    case ModelFamily::Exponential: {
      j["family"] = "exponential";
      json a = json::array();
      for (int i = 0; i < m.dimension(); ++i) a.push_back(m.exp_vector()[std::size_t(i)]);
      p["a"] = a;
      break;
    }
    case ModelFamily::Eigen: {
      j["family"] = "eigen";
      p["lambda"] = m.eigen_lambda();
      json dir = json::array();
      for (int i = 0; i < m.dimension(); ++i) {
        dir.push_back(m.eigen_direction()[std::size_t(i)]);
      }
      p["direction"] = dir;
      break;
    }
  }
  j["parameters"] = p;
  return j.dump(2);
}

}  // namespace polyann
