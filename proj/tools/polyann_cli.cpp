#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyann/criteria.hpp"
#include "polyann/errors.hpp"
#include "polyann/extension.hpp"
#include "polyann/format.hpp"
#include "polyann/fundamental.hpp"
#include "polyann/harmonics.hpp"
#include "polyann/lie.hpp"
#include "polyann/models.hpp"
#include "polyann/smooth.hpp"
#include "polyann/taylor.hpp"
#include "polyann/witness.hpp"

namespace {

using json = nlohmann::json;
using namespace polyann;

struct Knobs {
  long N = 40;
  long J = 20;
  long K_max = 12;
  long quad_nodes = 512;
  double tol = 1e-12;
  long threads = 1;
};

struct RunConfig {
  std::string command;
  json body;  // parsed config file, {} when none given
  std::string out_path;
  std::string format = "csv";
  Knobs knobs;
};

// Non-finite doubles have no JSON number representation; spell them the same
// way the CSV writer does so both formats stay machine-comparable.
json json_num(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

cplx parse_cplx(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw ConfigurationError("complex values are numbers or [re, im] pairs");
}

std::vector<cplx> parse_cplx_list(const json& v) {
  if (!v.is_array() || v.empty())
    throw ConfigurationError("expected a nonempty array of complex values");
  std::vector<cplx> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(parse_cplx(e));
  return out;
}

struct GridSpec {
  double from = 0.0;
  double to = 1.0;
  long count = 21;
};

GridSpec parse_grid(const json& v, const char* what) {
  if (!v.is_object())
    throw ConfigurationError(std::string(what) +
                             " grid needs {from, to, count}");
  GridSpec g;
  g.from = v.at("from").get<double>();
  g.to = v.at("to").get<double>();
  g.count = v.at("count").get<long>();
  if (g.count < 1 || !(g.from <= g.to))
    throw ConfigurationError(std::string(what) +
                             " grid needs from <= to and count >= 1");
  return g;
}

double grid_at(const GridSpec& g, long i) {
  if (g.count == 1) return g.from;
  return g.from + (g.to - g.from) * double(i) / double(g.count - 1);
}

ExponentSequence parse_exponents(const json& spec) {
  if (!spec.is_object() || !spec.contains("rule"))
    throw ConfigurationError("exponents need an object with a \"rule\" field");
  const std::string rule = spec.at("rule").get<std::string>();
  if (rule == "zeros") return ExponentSequence::zeros();
  if (rule == "constant") return ExponentSequence::constant(parse_cplx(spec.at("value")));
  if (rule == "shifted_integers") return ExponentSequence::shifted_integers();
  if (rule == "arithmetic")
    return ExponentSequence::arithmetic(parse_cplx(spec.at("offset")),
                                        parse_cplx(spec.at("step")));
  if (rule == "explicit")
    return ExponentSequence::explicit_list(parse_cplx_list(spec.at("values")));
  if (rule == "spherical")
    return exponent_sequence_for(spec.at("k").get<int>(),
                                 spec.at("d").get<int>());
  throw ConfigurationError("unknown exponent rule \"" + rule + "\"");
}

ExpSum parse_function(const json& spec) {
  if (spec.is_object() && spec.contains("constant"))
    return ExpSum::constant(parse_cplx(spec.at("constant")));
  if (spec.is_object() && spec.contains("exponential")) {
    const json& e = spec.at("exponential");
    return ExpSum::exponential(parse_cplx(e.at("mu")),
                               e.contains("coeff") ? parse_cplx(e.at("coeff"))
                                                   : cplx(1.0, 0.0));
  }
  if (spec.is_object() && spec.contains("terms")) {
    std::vector<ExpSum::Term> terms;
    for (const auto& t : spec.at("terms")) {
      terms.push_back({parse_cplx(t.at("coeff")), parse_cplx(t.at("exponent")),
                       t.at("power").get<unsigned>()});
    }
    return ExpSum(std::move(terms));
  }
  throw ConfigurationError(
      "function needs one of: constant, exponential, terms");
}

AnnularModel parse_model(const json& body) {
  if (!body.contains("model"))
    throw ConfigurationError("this command needs a \"model\" section");
  return model_from_json(body.at("model").dump());
}

// CSV cell for an optional value; absent values stay empty so the column
// count is stable.
std::string cell(std::optional<double> v) {
  return v ? format_double(*v) : std::string();
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigurationError("cannot open output path " + cfg.out_path);
  out << text;
  out.flush();
  if (!out) throw ConfigurationError("failed writing output to " + cfg.out_path);
}

// ---- fundamental -----------------------------------------------------------

int run_fundamental(const RunConfig& cfg) {
  if (!cfg.body.contains("lambda"))
    throw ConfigurationError("fundamental needs a \"lambda\" exponent list");
  const auto lam = parse_cplx_list(cfg.body.at("lambda"));
  const GridSpec grid = cfg.body.contains("grid")
                            ? parse_grid(cfg.body.at("grid"), "fundamental")
                            : GridSpec{-1.0, 1.0, 21};
  const double imag =
      cfg.body.contains("imag") ? cfg.body.at("imag").get<double>() : 0.0;

  const FundamentalFunction phi(lam);
  SeriesOptions sopt;
  sopt.rel_tol = cfg.knobs.tol;
  ContourOptions copt;
  copt.initial_nodes = int(cfg.knobs.quad_nodes);
  copt.tol = cfg.knobs.tol;

  struct Row {
    cplx z, series, contour;
    std::optional<cplx> closed;
    double dev;
  };
  std::vector<Row> rows;
  for (long i = 0; i < grid.count; ++i) {
    Row r;
    r.z = {grid_at(grid, i), imag};
    r.series = phi.eval_series(r.z, sopt);
    r.contour = phi.eval_contour(r.z, copt);
    if (phi.closed_form() != ClosedForm::None)
      r.closed = phi.eval_closed_formula(r.z);
    double scale = std::max(1.0, std::max(std::abs(r.series), std::abs(r.contour)));
    double dev = std::abs(r.series - r.contour);
    if (r.closed) {
      scale = std::max(scale, std::abs(*r.closed));
      dev = std::max(dev, std::abs(r.series - *r.closed));
      dev = std::max(dev, std::abs(r.contour - *r.closed));
    }
    r.dev = dev / scale;
    rows.push_back(r);
  }

  if (cfg.format == "json") {
    json out;
    out["order"] = lam.size() - 1;
    json lj = json::array();
    for (cplx l : lam) lj.push_back({json_num(l.real()), json_num(l.imag())});
    out["lambda"] = lj;
    out["tol"] = json_num(cfg.knobs.tol);
    json points = json::array();
    for (const auto& r : rows) {
      json p;
      p["z"] = {json_num(r.z.real()), json_num(r.z.imag())};
      p["series"] = {json_num(r.series.real()), json_num(r.series.imag())};
      p["contour"] = {json_num(r.contour.real()), json_num(r.contour.imag())};
      if (r.closed)
        p["closed"] = {json_num(r.closed->real()), json_num(r.closed->imag())};
      p["max_deviation"] = json_num(r.dev);
      points.push_back(p);
    }
    out["points"] = points;
    emit(cfg, out.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "# command=fundamental order=" << lam.size() - 1
       << " tol=" << format_double(cfg.knobs.tol)
       << " contour_nodes=" << cfg.knobs.quad_nodes << "\n";
    os << "z_re,z_im,series_re,series_im,contour_re,contour_im,closed_re,"
          "closed_im,max_deviation\n";
    for (const auto& r : rows) {
      os << format_double(r.z.real()) << "," << format_double(r.z.imag()) << ","
         << format_double(r.series.real()) << ","
         << format_double(r.series.imag()) << ","
         << format_double(r.contour.real()) << ","
         << format_double(r.contour.imag()) << ","
         << cell(r.closed ? std::optional<double>(r.closed->real())
                          : std::nullopt)
         << ","
         << cell(r.closed ? std::optional<double>(r.closed->imag())
                          : std::nullopt)
         << "," << format_double(r.dev) << "\n";
    }
    emit(cfg, os.str());
  }
  return 0;
}

// ---- expand ----------------------------------------------------------------

int run_expand(const RunConfig& cfg) {
  if (!cfg.body.contains("function") || !cfg.body.contains("exponents"))
    throw ConfigurationError("expand needs \"function\" and \"exponents\"");
  const ExpSum f = parse_function(cfg.body.at("function"));
  const ExponentSequence seq = parse_exponents(cfg.body.at("exponents"));
  const double x0 =
      cfg.body.contains("x0") ? cfg.body.at("x0").get<double>() : 0.0;
  const auto s = taylor_expand(f, seq, x0, std::size_t(cfg.knobs.N));

  const double rstar = s.R_star.value_or(
      std::numeric_limits<double>::quiet_NaN());
  const double radius =
      s.radius.value_or(std::numeric_limits<double>::quiet_NaN());
  const double sigma =
      s.sigma.value_or(std::numeric_limits<double>::quiet_NaN());

  if (cfg.format == "json") {
    json out;
    out["x0"] = json_num(x0);
    out["N"] = cfg.knobs.N;
    out["R_star"] = json_num(rstar);
    out["radius"] = json_num(radius);
    out["sigma"] = json_num(sigma);
    json coeffs = json::array();
    for (cplx a : s.coeffs)
      coeffs.push_back({json_num(a.real()), json_num(a.imag())});
    out["coefficients"] = coeffs;
    emit(cfg, out.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "# command=expand x0=" << format_double(x0) << " N=" << cfg.knobs.N
       << " R_star=" << format_double(rstar)
       << " radius=" << format_double(radius)
       << " sigma=" << format_double(sigma) << "\n";
    os << "n,coeff_re,coeff_im\n";
    for (std::size_t n = 0; n < s.coeffs.size(); ++n) {
      os << n << "," << format_double(s.coeffs[n].real()) << ","
         << format_double(s.coeffs[n].imag()) << "\n";
    }
    emit(cfg, os.str());
  }
  return 0;
}

// ---- radius ----------------------------------------------------------------

int run_radius(const RunConfig& cfg) {
  if (!cfg.body.contains("coeffs"))
    throw ConfigurationError("radius needs a \"coeffs\" array");
  const auto coeffs = parse_cplx_list(cfg.body.at("coeffs"));
  const double beta =
      cfg.body.contains("beta") ? cfg.body.at("beta").get<double>() : 0.0;
  if (beta < 0.0) throw ConfigurationError("beta must be nonnegative");
  const double rstar = convergence_radius(coeffs, 0.0);
  const double radius = convergence_radius(coeffs, beta);

  if (cfg.format == "json") {
    json out;
    out["beta"] = json_num(beta);
    out["R_star"] = json_num(rstar);
    out["radius"] = json_num(radius);
    emit(cfg, out.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "# command=radius n_coeffs=" << coeffs.size()
       << " beta=" << format_double(beta) << "\n";
    os << "R_star,radius\n";
    os << format_double(rstar) << "," << format_double(radius) << "\n";
    emit(cfg, os.str());
  }
  return 0;
}

// ---- flc -------------------------------------------------------------------

int run_flc(const RunConfig& cfg) {
  const AnnularModel m = parse_model(cfg.body);
  const int k = cfg.body.value("k", 0);
  const int l = cfg.body.value("l", 1);
  const GridSpec grid =
      cfg.body.contains("grid")
          ? parse_grid(cfg.body.at("grid"), "flc")
          : GridSpec{m.r0() * 1.1, m.r1() * 0.9, 17};
  const int degree = int(std::max(long(k), cfg.knobs.K_max));
  const SphericalContext ctx(m.dimension(), degree);
  const RadialFunction f = [&m](const Vec3& x) { return m.eval(x); };

  std::ostringstream os;
  json points = json::array();
  for (long i = 0; i < grid.count; ++i) {
    const double r = grid_at(grid, i);
    const cplx v = flc(ctx, f, k, l, r, m.r0(), m.r1());
    if (cfg.format == "json") {
      points.push_back(
          {json_num(r), json_num(v.real()), json_num(v.imag())});
    } else {
      os << format_double(r) << "," << format_double(v.real()) << ","
         << format_double(v.imag()) << "\n";
    }
  }

  if (cfg.format == "json") {
    json out;
    out["k"] = k;
    out["l"] = l;
    out["d"] = m.dimension();
    out["quad_degree"] = degree;
    out["points"] = points;
    emit(cfg, out.dump(2) + "\n");
  } else {
    std::ostringstream head;
    head << "# command=flc d=" << m.dimension() << " k=" << k << " l=" << l
         << " quad_degree=" << degree << "\n";
    head << "r,coeff_re,coeff_im\n";
    emit(cfg, head.str() + os.str());
  }
  return 0;
}

// ---- jet -------------------------------------------------------------------

int run_jet(const RunConfig& cfg) {
  const AnnularModel m = parse_model(cfg.body);
  const int k = cfg.body.value("k", 0);
  const int l = cfg.body.value("l", 1);
  const double v0 =
      cfg.body.contains("v0")
          ? cfg.body.at("v0").get<double>()
          : 0.5 * (std::log(m.r0()) + std::log(m.r1()));
  const auto jet = log_jet(m, k, l, v0, std::size_t(cfg.knobs.N));

  if (cfg.format == "json") {
    json out;
    out["k"] = jet.k;
    out["l"] = jet.l;
    out["d"] = jet.d;
    out["v0"] = json_num(jet.v0);
    out["tau"] = json_num(jet.tau);
    json derivs = json::array();
    for (std::size_t n = 0; n < jet.derivs.size(); ++n) {
      const cplx lam = jet.exponents.at(n);
      derivs.push_back({json_num(jet.derivs[n].real()),
                        json_num(jet.derivs[n].imag()), json_num(lam.real()),
                        json_num(lam.imag())});
    }
    out["derivs"] = derivs;
    emit(cfg, out.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "# command=jet d=" << jet.d << " k=" << jet.k << " l=" << jet.l
       << " v0=" << format_double(jet.v0) << " tau=" << format_double(jet.tau)
       << " N=" << cfg.knobs.N << "\n";
    os << "n,deriv_re,deriv_im,lambda_re,lambda_im\n";
    for (std::size_t n = 0; n < jet.derivs.size(); ++n) {
      const cplx lam = jet.exponents.at(n);
      os << n << "," << format_double(jet.derivs[n].real()) << ","
         << format_double(jet.derivs[n].imag()) << ","
         << format_double(lam.real()) << "," << format_double(lam.imag())
         << "\n";
    }
    emit(cfg, os.str());
  }
  return 0;
}

// ---- extend ----------------------------------------------------------------

int run_extend(const RunConfig& cfg) {
  const AnnularModel m = parse_model(cfg.body);
  if (!cfg.body.contains("slice"))
    throw ConfigurationError(
        "extend needs a \"slice\" with axis, fixed, x, y");
  const json& sl = cfg.body.at("slice");
  const int axis = sl.value("axis", 0);
  const int d = m.dimension();
  if (axis < 0 || axis >= d)
    throw ConfigurationError("slice axis must index a coordinate of the model");
  std::vector<cplx> fixed;
  if (sl.contains("fixed"))
    for (const auto& e : sl.at("fixed")) fixed.push_back(parse_cplx(e));
  if (fixed.size() != std::size_t(d - 1))
    throw ConfigurationError("slice needs d-1 fixed components");
  const GridSpec gx = parse_grid(sl.at("x"), "slice x");
  const GridSpec gy = parse_grid(sl.at("y"), "slice y");

  const AnnularExtension ext(m, int(cfg.knobs.K_max), std::size_t(cfg.knobs.J),
                             std::size_t(cfg.knobs.N));

  struct Row {
    double x, y;
    double lm, lp;
    bool cut, inside;
    cplx F;
  };
  const long total = gx.count * gy.count;
  std::vector<Row> rows(static_cast<std::size_t>(total));

  const auto work = [&](long begin, long end) {
    for (long idx = begin; idx < end; ++idx) {
      const long i = idx / gy.count;
      const long j = idx % gy.count;
      Row& r = rows[std::size_t(idx)];
      r.x = grid_at(gx, i);
      r.y = grid_at(gy, j);
      CVec3 z{0.0, 0.0, 0.0};
      std::size_t fi = 0;
      for (int c = 0; c < d; ++c)
        if (c != axis) z[std::size_t(c)] = fixed[fi++];
      z[std::size_t(axis)] = cplx(r.x, r.y);
      const LiePoint p = lie_point(z, d);
      r.lm = p.L_minus;
      r.lp = p.L_plus;
      r.cut = on_log_cut(p.q);
      r.inside = r.lm > ext.r0() && r.lp < ext.r_out() && !r.cut;
      r.F = r.inside ? ext.eval(z) : cplx(0.0, 0.0);
    }
  };
  const long nthreads = std::max(1L, std::min(cfg.knobs.threads, total));
  if (nthreads == 1) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    const long chunk = (total + nthreads - 1) / nthreads;
    for (long t = 0; t < nthreads; ++t) {
      const long b = t * chunk;
      const long e = std::min(total, b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }

  if (cfg.format == "json") {
    json out;
    out["d"] = d;
    out["K_max"] = cfg.knobs.K_max;
    out["J"] = cfg.knobs.J;
    out["N"] = cfg.knobs.N;
    out["r0"] = json_num(ext.r0());
    out["r_out"] = json_num(ext.r_out());
    json pts = json::array();
    for (const auto& r : rows) {
      json p;
      p["x"] = json_num(r.x);
      p["y"] = json_num(r.y);
      p["L_minus"] = json_num(r.lm);
      p["L_plus"] = json_num(r.lp);
      p["on_cut"] = r.cut;
      p["inside"] = r.inside;
      if (r.inside) p["F"] = {json_num(r.F.real()), json_num(r.F.imag())};
      pts.push_back(p);
    }
    out["points"] = pts;
    emit(cfg, out.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "# command=extend d=" << d << " K_max=" << cfg.knobs.K_max
       << " J=" << cfg.knobs.J << " N=" << cfg.knobs.N
       << " r0=" << format_double(ext.r0())
       << " r_out=" << format_double(ext.r_out()) << " axis=" << axis << "\n";
    os << "x,y,L_minus,L_plus,on_cut,inside,F_re,F_im\n";
    for (const auto& r : rows) {
      os << format_double(r.x) << "," << format_double(r.y) << ","
         << format_double(r.lm) << "," << format_double(r.lp) << ","
         << (r.cut ? 1 : 0) << "," << (r.inside ? 1 : 0) << ","
         << cell(r.inside ? std::optional<double>(r.F.real()) : std::nullopt)
         << ","
         << cell(r.inside ? std::optional<double>(r.F.imag()) : std::nullopt)
         << "\n";
    }
    emit(cfg, os.str());
  }
  return 0;
}

// ---- verify ----------------------------------------------------------------

std::vector<WitnessReport> witness_examples() {
  const double pi = std::numbers::pi;
  std::vector<WitnessReport> reps;
  reps.push_back(rolle_point({[pi](double x) { return std::sin(pi * x); },
                              [pi](double x) { return pi * std::cos(pi * x); },
                              {}},
                             0.0, 0.0, 1.0));
  reps.push_back(
      rolle_point({[](double x) { return std::exp(0.8 * x); },
                   [](double x) { return 0.8 * std::exp(0.8 * x); },
                   {}},
                  0.8, -0.3, 1.1));
  reps.push_back(rolle_point(
      {[pi](double x) { return std::sin(pi * x) * std::exp(0.7 * x); },
       [pi](double x) {
         return (pi * std::cos(pi * x) + 0.7 * std::sin(pi * x)) *
                std::exp(0.7 * x);
       },
       {}},
      0.7, 0.0, 1.0));
  reps.push_back(mean_value_point(
      {[](double) { return 1.3; }, [](double) { return 0.0; }, {}}, 0.9, -0.4,
      1.2));
  reps.push_back(mean_value_point(
      {[](double x) { return x; }, [](double) { return 1.0; }, {}}, 1.0, 0.0,
      2.0));
  reps.push_back(mean_value_point(
      {[](double x) { return x * x; }, [](double x) { return 2.0 * x; }, {}},
      1e-6, 0.0, 1.0));
  reps.push_back(exp_ratio_bound(1.5, 0.0, 1.0));
  reps.push_back(check_odd_derivative_bound(
      {[](double x) { return std::exp(0.6 * x); },
       [](double x) { return 0.6 * std::exp(0.6 * x); },
       [](double x) { return 0.36 * std::exp(0.6 * x); }},
      0.6, -0.4, 0.0, 1.5));
  reps.push_back(check_odd_derivative_bound(
      {[](double x) { return std::sin(x); },
       [](double x) { return std::cos(x); },
       [](double x) { return -std::sin(x); }},
      0.3, -0.5, 0.0, 1.0));
  reps.push_back(check_even_to_odd(
      AnnularModel::harmonic(3, 0.5, 2.0, {{1, 1, 0.7, 0.35}}, 0.0), 1, 1,
      -0.2, 0.1, 6));
  reps.push_back(check_even_to_odd(
      AnnularModel::power(3, 0.5, 2.0, -0.75, 0, 1), 0, 1, 0.0, 0.1, 10));
  reps.push_back(check_even_to_odd(
      AnnularModel::exponential(2, 0.5, 2.0, {0.8, -0.3, 0.0}), 1, 1, -0.1,
      0.1, 6));
  return reps;
}

int run_verify(const RunConfig& cfg) {
  const auto criteria = run_acceptance_criteria();
  const auto witnesses = witness_examples();

  json out;
  out["criteria"] = json::parse(criteria_to_json(criteria));
  out["witnesses"] = json::parse(witness_reports_to_json(witnesses));
  emit(cfg, out.dump(2) + "\n");

  int failed = 0;
  for (const auto& c : criteria)
    if (!c.passed) ++failed;
  for (const auto& w : witnesses)
    if (!w.passed) ++failed;
  if (failed > 0) {
    json err;
    err["operation"] = "verify";
    err["error"] = std::to_string(failed) + " checks failed";
    std::cerr << err.dump(2) << "\n";
    return 1;
  }
  return 0;
}

int dispatch(const RunConfig& cfg) {
  if (cfg.command == "fundamental") return run_fundamental(cfg);
  if (cfg.command == "expand") return run_expand(cfg);
  if (cfg.command == "radius") return run_radius(cfg);
  if (cfg.command == "flc") return run_flc(cfg);
  if (cfg.command == "jet") return run_jet(cfg);
  if (cfg.command == "extend") return run_extend(cfg);
  if (cfg.command == "verify") return run_verify(cfg);
  throw ConfigurationError("unknown command \"" + cfg.command + "\"");
}

int config_failure(const std::vector<std::string>& errors) {
  json out;
  out["errors"] = errors;
  std::cerr << out.dump(2) << "\n";
  return 2;
}

int numeric_failure(const std::string& op, const std::string& what) {
  json out;
  out["operation"] = op;
  out["error"] = what;
  std::cerr << out.dump(2) << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  std::string config_path;
  Knobs flags;

  CLI::App app{"polyann: generalized Taylor expansions and annular extensions"};
  app.require_subcommand(0, 1);
  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--out", cfg.out_path, "output path (default stdout)");
  app.add_option("--format", cfg.format, "output format: csv or json");
  const auto* opt_threads =
      app.add_option("--threads", flags.threads, "worker threads for grid sweeps");
  const auto* opt_tol =
      app.add_option("--tol", flags.tol, "evaluator tolerance, in (0, 1e-2]");
  const auto* opt_N =
      app.add_option("--N", flags.N, "expansion order / derivative count");
  const auto* opt_J =
      app.add_option("--J", flags.J, "coefficient pairs per spherical slot");
  const auto* opt_K =
      app.add_option("--K-max", flags.K_max, "maximum spherical degree");
  const auto* opt_q = app.add_option("--quad-nodes", flags.quad_nodes,
                                     "contour quadrature starting nodes");
  const std::pair<const char*, const char*> commands[] = {
      {"fundamental", "tabulate a fundamental function on a grid"},
      {"expand", "generalized Taylor coefficients of a function"},
      {"radius", "convergence radius from supplied coefficients"},
      {"flc", "spherical-harmonic coefficient of a model on a radial grid"},
      {"jet", "generalized derivatives of a log-coefficient"},
      {"extend", "evaluate the analytic extension on a complex slice"},
      {"verify", "run the acceptance criteria and witness corpus"}};
  for (const auto& [name, desc] : commands) {
    app.add_subcommand(name, desc)->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return config_failure({std::string("argument parsing: ") + e.what()});
  }

  std::vector<std::string> errors;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        errors.push_back("cannot read config file " + config_path);
      } else {
        cfg.body = json::parse(in, nullptr, false);
        if (cfg.body.is_discarded())
          errors.push_back("config file is not valid JSON");
      }
    }
    if (cfg.body.is_object()) {
      if (cfg.body.contains("command"))
        cfg.command = cfg.body.at("command").get<std::string>();
      if (cfg.body.contains("out") && cfg.out_path.empty())
        cfg.out_path = cfg.body.at("out").get<std::string>();
      if (cfg.body.contains("format") && cfg.format == "csv")
        cfg.format = cfg.body.at("format").get<std::string>();
      if (cfg.body.contains("knobs")) {
        const json& k = cfg.body.at("knobs");
        if (k.contains("N")) cfg.knobs.N = k.at("N").get<long>();
        if (k.contains("J")) cfg.knobs.J = k.at("J").get<long>();
        if (k.contains("K_max")) cfg.knobs.K_max = k.at("K_max").get<long>();
        if (k.contains("quad_nodes"))
          cfg.knobs.quad_nodes = k.at("quad_nodes").get<long>();
        if (k.contains("tol")) cfg.knobs.tol = k.at("tol").get<double>();
      }
    } else if (!cfg.body.is_null() && !config_path.empty() && errors.empty()) {
      errors.push_back("config root must be a JSON object");
    }
  } catch (const std::exception& e) {
    errors.push_back(std::string("config: ") + e.what());
  }

  for (const auto* sub : app.get_subcommands())
    cfg.command = sub->get_name();
  if (opt_N->count() > 0) cfg.knobs.N = flags.N;
  if (opt_J->count() > 0) cfg.knobs.J = flags.J;
  if (opt_K->count() > 0) cfg.knobs.K_max = flags.K_max;
  if (opt_q->count() > 0) cfg.knobs.quad_nodes = flags.quad_nodes;
  if (opt_tol->count() > 0) cfg.knobs.tol = flags.tol;
  if (opt_threads->count() > 0) cfg.knobs.threads = flags.threads;

  if (cfg.command.empty())
    errors.push_back("no command given (subcommand or config \"command\")");
  if (cfg.format != "csv" && cfg.format != "json")
    errors.push_back("format must be csv or json");
  if (cfg.knobs.N < 1 || cfg.knobs.J < 1 || cfg.knobs.K_max < 0 ||
      cfg.knobs.quad_nodes < 1 || cfg.knobs.threads < 1)
    errors.push_back("numeric knobs must be positive");
  if (!(cfg.knobs.tol > 0.0) || cfg.knobs.tol > 1e-2)
    errors.push_back("tol must lie in (0, 1e-2]");
  if (!cfg.out_path.empty()) {
    std::ofstream probe(cfg.out_path, std::ios::binary | std::ios::app);
    if (!probe) errors.push_back("output path is not writable: " + cfg.out_path);
  }
  if (!errors.empty()) return config_failure(errors);

  // Verify reports are consumed as JSON by the acceptance tooling.
  if (cfg.command == "verify") cfg.format = "json";

  try {
    return dispatch(cfg);
  } catch (const ConfigurationError& e) {
    return config_failure({e.what()});
  } catch (const std::exception& e) {
    return numeric_failure(cfg.command, e.what());
  } catch (...) {
    return numeric_failure(cfg.command, "unknown error");
  }
}
