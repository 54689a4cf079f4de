#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "arpmc/bounds.hpp"
#include "arpmc/diagnostics.hpp"
#include "arpmc/functionals.hpp"
#include "arpmc/harness.hpp"
#include "arpmc/model.hpp"
#include "arpmc/rng.hpp"
#include "arpmc/samplers.hpp"
#include "arpmc/stationary.hpp"
#include "arpmc/tv.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

using namespace arpmc;

struct Ctx {
  KvConfig cfg;
  std::string section;
  std::optional<std::string> cli_out;
  std::optional<std::uint64_t> cli_seed;
  std::optional<int> cli_threads;

  std::string model(const std::string& fallback) const {
    const std::string m = cfg.get_string(section, "model", fallback);
    if (m != "square" && m != "planar")
      throw ConfigError("model must be 'square' or 'planar', got '" + m + "'");
    return m;
  }
  std::uint64_t seed() const {
    if (cli_seed) return *cli_seed;
    const long long s = cfg.get_int(section, "seed", 0);
    if (s < 0) throw ConfigError("seed must be >= 0");
    return static_cast<std::uint64_t>(s);
  }
  int threads() const {
    const long long t =
        cli_threads ? *cli_threads : cfg.get_int(section, "threads", 1);
    if (t < 1) throw ConfigError("threads must be >= 1");
    return static_cast<int>(t);
  }
  std::string out_dir() const {
    return cli_out ? *cli_out : cfg.get_string(section, "out", "out");
  }
};

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

void ensure_dir(const std::string& path) {
  std::error_code ec;
  fs::create_directories(path, ec);
  if (ec) throw IoError("cannot create output directory: " + path);
}

void write_json_file(const std::string& path, const ordered_json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

void write_manifest(const std::string& out, const std::string& command,
                    const Ctx& ctx, const ordered_json& settings,
                    const std::vector<std::string>& outputs,
                    const ordered_json& results, double wall) {
  ordered_json m;
  m["command"] = command;
  m["version"] = kVersion;
  m["rng_algorithm"] = kRngAlgorithm;
  m["seed"] = ctx.seed();
  m["threads"] = ctx.threads();
  m["settings"] = settings;
  m["outputs"] = outputs;
  m["results"] = results;
  m["wall_seconds"] = wall;
  write_json_file(out + "/manifest.json", m);
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  for (const std::string& tok : split_list(text, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ConfigError("bad number in list: '" + tok + "'");
    }
  }
  return out;
}

std::vector<long long> parse_longs(const std::string& text) {
  std::vector<long long> out;
  for (const std::string& tok : split_list(text, ',')) {
    long long v = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
      throw ConfigError("bad integer in list: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

SquareInit parse_square_init(const std::string& text) {
  if (text == "center") return SquareInit::fixed(center_square_state(3));
  if (text == "uniform") return SquareInit::uniform();
  const std::vector<double> v = parse_doubles(text);
  if (v.size() != 6)
    throw ConfigError("square init needs 'center', 'uniform', or 6 numbers");
  SquareState s(3);
  for (int i = 0; i < 3; ++i) s[i] = {v[2 * i], v[2 * i + 1]};
  return SquareInit::fixed(std::move(s));
}

PlanarInit parse_planar_init(const std::string& text, double half_width) {
  if (text == "unit") return PlanarInit::fixed({1.0, 0.0});
  if (text == "uniform") return PlanarInit::uniform(half_width);
  const std::vector<double> v = parse_doubles(text);
  if (v.size() != 2)
    throw ConfigError("planar init needs 'unit', 'uniform', or 2 numbers");
  return PlanarInit::fixed({v[0], v[1]});
}

ModelParams square_params(const Ctx& ctx) {
  ModelParams par;
  par.c1 = ctx.cfg.get_double(ctx.section, "c1", 0.1);
  par.c2 = ctx.cfg.get_double(ctx.section, "c2", 0.1);
  return par;
}

std::string chain_file_name(int j) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "chain_%03d.csv", j);
  return buf;
}

// --- simulate --------------------------------------------------------------

int cmd_simulate(Ctx& ctx) {
  Timer timer;
  const std::string model = ctx.model("square");
  const long long chains_ll = ctx.cfg.get_int(ctx.section, "chains", 1);
  const long long iters_ll = ctx.cfg.get_int(ctx.section, "iterations", 100);
  if (chains_ll < 1) throw ConfigError("chains must be >= 1");
  if (iters_ll < 0) throw ConfigError("iterations must be >= 0");
  const int chains = static_cast<int>(chains_ll);
  const long iterations = static_cast<long>(iters_ll);
  const std::uint64_t seed = ctx.seed();
  const int threads = ctx.threads();
  const std::string out = ctx.out_dir();
  const std::string init_str = ctx.cfg.get_string(
      ctx.section, "init", model == "square" ? "center" : "unit");
  const double half_width =
      ctx.cfg.get_double(ctx.section, "init_half_width", 10.0);

  ordered_json settings;
  settings["model"] = model;
  settings["chains"] = chains;
  settings["iterations"] = iterations;
  settings["init"] = init_str;
  settings["seed"] = seed;
  settings["threads"] = threads;

  ensure_dir(out);
  std::vector<std::string> files;
  ordered_json results;
  results["chains"] = chains;
  results["iterations"] = iterations;

  if (model == "square") {
    const ModelParams par = square_params(ctx);
    settings["c1"] = par.c1;
    settings["c2"] = par.c2;
    const SquareInit init = parse_square_init(init_str);
    std::vector<SquareChainTrace> traces(chains);
    parallel_chains(chains, threads, [&](int j) {
      RngStream rng(seed, static_cast<std::uint64_t>(j));
      const SquareState s0 = draw_square_init(init, 3, rng);
      traces[j] = trace_chain_square(s0, par, iterations, rng);
    });
    long long accepted = 0;
    for (int j = 0; j < chains; ++j) {
      std::ostringstream csv;
      csv << "iter,x11,x12,x21,x22,x31,x32,accepted1,accepted2,accepted3\n";
      for (long t = 0; t <= iterations; ++t) {
        csv << t;
        for (const Point2& p : traces[j].states[t])
          csv << ',' << fmt_double(p.x) << ',' << fmt_double(p.y);
        for (int i = 0; i < 3; ++i) {
          const int a = t == 0 ? 0 : traces[j].accepts[t - 1][i];
          csv << ',' << a;
        }
        csv << '\n';
      }
      const std::string name = chain_file_name(j);
      write_text_file(out + "/" + name, csv.str());
      files.push_back(name);
      for (long c : traces[j].accept_counts) accepted += c;
    }
    results["accept_rate"] =
        iterations > 0
            ? static_cast<double>(accepted) / (3.0 * iterations * chains)
            : 0.0;
  } else {
    const PlanarInit init = parse_planar_init(init_str, half_width);
    std::vector<PlanarChainTrace> traces(chains);
    parallel_chains(chains, threads, [&](int j) {
      RngStream rng(seed, static_cast<std::uint64_t>(j));
      const PlanarPoint p0 = draw_planar_init(init, rng);
      traces[j] = trace_chain_planar(p0, iterations, rng);
    });
    long long accepted = 0;
    for (int j = 0; j < chains; ++j) {
      std::ostringstream csv;
      csv << "iter,x1,x2,accepted\n";
      for (long t = 0; t <= iterations; ++t) {
        const PlanarPoint& p = traces[j].states[t];
        csv << t << ',' << fmt_double(p.x) << ',' << fmt_double(p.y) << ','
            << (t == 0 ? 0 : traces[j].accepts[t - 1]) << '\n';
      }
      const std::string name = chain_file_name(j);
      write_text_file(out + "/" + name, csv.str());
      files.push_back(name);
      accepted += traces[j].accept_count;
    }
    results["accept_rate"] =
        iterations > 0
            ? static_cast<double>(accepted) /
                  (static_cast<double>(iterations) * chains)
            : 0.0;
    results["final_radius"] = traces.back().states.back().radius();
  }

  results["files"] = files;
  std::vector<std::string> outputs = files;
  outputs.push_back("manifest.json");
  write_manifest(out, "simulate", ctx, settings, outputs, results,
                 timer.seconds());
  return kExitOk;
}

// --- bound uniform ---------------------------------------------------------

int cmd_bound_uniform(Ctx& ctx) {
  Timer timer;
  const double c1 = ctx.cfg.get_double(ctx.section, "c1", 0.1);
  const double c2 = ctx.cfg.get_double(ctx.section, "c2", 0.1);
  const double delta = ctx.cfg.get_double(ctx.section, "delta", 0.01);
  const std::string out = ctx.out_dir();

  const double eps = square_uniform_epsilon(c1, c2, 3);
  const double eps_quoted = floor_two_significant(eps);
  const long long iters = iterations_for_tolerance(eps_quoted, 1, delta);
  const long long iters_exact = iterations_for_tolerance(eps, 1, delta);
  const long long n = ctx.cfg.get_int(ctx.section, "n", iters);

  ordered_json settings;
  settings["model"] = "square";
  settings["c1"] = c1;
  settings["c2"] = c2;
  settings["delta"] = delta;
  settings["n"] = n;

  ordered_json report;
  report["c1"] = c1;
  report["c2"] = c2;
  report["particles"] = 3;
  report["epsilon"] = eps;
  // Headline counts quote epsilon at two significant figures, which is
  // how the reported 163-step figure arises; the exact-epsilon count is
  // kept alongside.
  report["epsilon_quoted"] = eps_quoted;
  report["n0"] = 1;
  report["delta"] = delta;
  report["iterations"] = iters;
  report["iterations_exact"] = iters_exact;
  report["n"] = n;
  report["bound_at_n"] = tv_bound_uniform(eps, 1, n);
  report["bound_at_n_quoted"] = tv_bound_uniform(eps_quoted, 1, n);

  ensure_dir(out);
  write_json_file(out + "/bound_uniform.json", report);
  write_manifest(out, "bound uniform", ctx, settings,
                 {"bound_uniform.json", "manifest.json"}, report,
                 timer.seconds());
  return kExitOk;
}

// --- bound shift-coupling --------------------------------------------------

int cmd_bound_shift_coupling(Ctx& ctx) {
  Timer timer;
  const double r = ctx.cfg.get_double(ctx.section, "r", 0.0016);
  const long long n = ctx.cfg.get_int(ctx.section, "n", 1000000);
  const std::string out = ctx.out_dir();

  const ShiftCouplingInputs in = planar_shift_inputs();
  const ShiftCouplingResult given = shift_coupling_bound(in, r);
  const OptimizedR opt = optimize_r(in);
  const ShiftCouplingResult best = shift_coupling_bound(in, opt.r);

  ordered_json settings;
  settings["model"] = "planar";
  settings["r"] = r;
  settings["n"] = n;

  ordered_json report;
  report["inputs"] = {{"eps", in.eps},      {"n0", in.n0},
                      {"lambda", in.lambda}, {"b", in.b},
                      {"A", in.a_bound},     {"e_nu_v", in.e_nu_v}};
  report["admissible_r_sup"] = admissible_r_sup(in);
  report["given"] = {{"r", given.r},
                     {"coefficient", given.coefficient},
                     {"admissibility", given.admissibility},
                     {"term_minorization", given.term_minorization},
                     {"term_drift", given.term_drift},
                     {"v_start_term", given.v_start_term},
                     {"n", n},
                     {"bound_at_n", given.bound_at(n)}};
  report["optimized"] = {{"r", best.r},
                         {"coefficient", best.coefficient},
                         {"admissibility", best.admissibility},
                         {"bound_at_n", best.bound_at(n)}};

  ensure_dir(out);
  write_json_file(out + "/bound_shift_coupling.json", report);
  write_manifest(out, "bound shift-coupling", ctx, settings,
                 {"bound_shift_coupling.json", "manifest.json"}, report,
                 timer.seconds());
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

int cmd_verify_drift(Ctx& ctx) {
  Timer timer;
  DriftGridSpec spec;
  spec.low_points =
      static_cast<int>(ctx.cfg.get_int(ctx.section, "low_points", 1000));
  spec.high_points =
      static_cast<int>(ctx.cfg.get_int(ctx.section, "high_points", 1000));
  spec.on_points =
      static_cast<int>(ctx.cfg.get_int(ctx.section, "on_points", 2000));
  spec.low_min = ctx.cfg.get_double(ctx.section, "low_min", 0.001);
  spec.high_max = ctx.cfg.get_double(ctx.section, "high_max", 50.0);
  spec.tol = ctx.cfg.get_double(ctx.section, "tol", 1e-10);
  const std::string out = ctx.out_dir();

  const DriftAudit a = verify_drift_planar(spec);

  ordered_json settings;
  settings["model"] = "planar";
  settings["low_points"] = spec.low_points;
  settings["high_points"] = spec.high_points;
  settings["on_points"] = spec.on_points;
  settings["low_min"] = spec.low_min;
  settings["high_max"] = spec.high_max;
  settings["tol"] = spec.tol;

  ordered_json report;
  report["lambda"] = a.lambda;
  report["pv_cap"] = a.pv_cap;
  report["low_cap"] = a.low_cap;
  report["max_ratio_low"] = a.max_ratio_low;
  report["max_ratio_high"] = a.max_ratio_high;
  report["max_pv_on"] = a.max_pv_on;
  report["margin_low"] = a.lambda - a.max_ratio_low;
  report["margin_high"] = a.lambda - a.max_ratio_high;
  report["margin_on"] = a.pv_cap - a.max_pv_on;
  report["modulus_low"] = a.modulus_low;
  report["modulus_high"] = a.modulus_high;
  report["modulus_on"] = a.modulus_on;
  report["tail_bound"] = a.tail_bound;
  report["ok_low"] = a.ok_low;
  report["ok_high"] = a.ok_high;
  report["ok_on"] = a.ok_on;
  report["ok_tail"] = a.ok_tail;
  report["ok"] = a.ok();

  ensure_dir(out);
  write_json_file(out + "/verify_drift.json", report);
  write_manifest(out, "verify drift", ctx, settings,
                 {"verify_drift.json", "manifest.json"}, report,
                 timer.seconds());
  return a.ok() ? kExitOk : kExitViolation;
}

int cmd_verify_minorization(Ctx& ctx) {
  Timer timer;
  const double tol = ctx.cfg.get_double(ctx.section, "tol", 1e-10);
  const std::string out = ctx.out_dir();

  const MinorizationAudit a = verify_minorization_planar(tol);

  ordered_json settings;
  settings["model"] = "planar";
  settings["tol"] = tol;

  ordered_json report;
  report["mass"] = a.mass;
  report["closed_form"] = a.closed_form;
  report["quadrature_gap"] = std::abs(a.mass - a.closed_form);
  report["crossover"] = a.crossover;
  report["certified_eps"] = a.certified_eps;
  report["margin"] = a.mass - a.certified_eps;
  report["evaluations"] = a.evaluations;
  report["ok"] = a.ok;

  ensure_dir(out);
  write_json_file(out + "/verify_minorization.json", report);
  write_manifest(out, "verify minorization", ctx, settings,
                 {"verify_minorization.json", "manifest.json"}, report,
                 timer.seconds());
  return a.ok ? kExitOk : kExitViolation;
}

int cmd_verify_proof_constants(Ctx& ctx) {
  Timer timer;
  const std::string out = ctx.out_dir();
  const OverlapConstants m = planar_overlap_constants();

  ordered_json settings;
  settings["model"] = "planar";

  ordered_json report;
  report["m1"] = m.m1;
  report["m2"] = m.m2;
  report["m1_prime"] = m.m1_prime;
  report["m2_prime"] = m.m2_prime;
  report["inner_coef"] = m.inner_coef;
  report["outer_coef"] = m.outer_coef;
  report["inner_floor"] = 0.13;
  report["outer_floor"] = 0.1;
  report["inner_margin"] = m.inner_coef - 0.13;
  report["outer_margin"] = m.outer_coef - 0.1;
  report["ok"] = m.ok;

  ensure_dir(out);
  write_json_file(out + "/verify_proof_constants.json", report);
  write_manifest(out, "verify proof-constants", ctx, settings,
                 {"verify_proof_constants.json", "manifest.json"}, report,
                 timer.seconds());
  return m.ok ? kExitOk : kExitViolation;
}

// --- diagnose --------------------------------------------------------------

int cmd_diagnose(Ctx& ctx) {
  Timer timer;
  const std::string model = ctx.model("square");
  const bool square = model == "square";
  const long long chains_ll =
      ctx.cfg.get_int(ctx.section, "chains", square ? 5 : 10);
  const long long iters_ll =
      ctx.cfg.get_int(ctx.section, "iterations", square ? 60 : 600);
  const long long burn_in =
      ctx.cfg.get_int(ctx.section, "burn_in", square ? 30 : 300);
  if (chains_ll < 2) throw ConfigError("diagnose needs at least 2 chains");
  if (iters_ll < 1) throw ConfigError("iterations must be >= 1");
  if (burn_in < 0 || burn_in >= iters_ll)
    throw ConfigError("burn_in must lie in [0, iterations)");
  const int chains = static_cast<int>(chains_ll);
  const long iterations = static_cast<long>(iters_ll);
  const std::uint64_t seed = ctx.seed();
  const int threads = ctx.threads();
  const std::string out = ctx.out_dir();
  const std::string mode_str =
      ctx.cfg.get_string(ctx.section, "df_mode", "unit");
  DfMode mode;
  if (mode_str == "unit") {
    mode = DfMode::unit_factor;
  } else if (mode_str == "moment") {
    mode = DfMode::moment_estimated;
  } else {
    throw ConfigError("df_mode must be 'unit' or 'moment'");
  }
  const std::string init_str =
      ctx.cfg.get_string(ctx.section, "init", "uniform");
  const double half_width =
      ctx.cfg.get_double(ctx.section, "init_half_width", 10.0);
  const std::vector<std::string> names = split_list(
      ctx.cfg.get_string(ctx.section, "functionals", "psi,phi1,phi2"), ',');
  if (names.empty()) throw ConfigError("no functionals requested");

  ordered_json settings;
  settings["model"] = model;
  settings["chains"] = chains;
  settings["iterations"] = iterations;
  settings["burn_in"] = burn_in;
  settings["init"] = init_str;
  settings["df_mode"] = mode_str;
  settings["seed"] = seed;
  settings["threads"] = threads;

  const std::size_t nf = names.size();
  std::vector<std::vector<std::vector<double>>> series(
      nf, std::vector<std::vector<double>>(
              chains, std::vector<double>(iterations, 0.0)));

  EnsembleSpec es;
  es.chains = chains;
  es.iterations = iterations;
  es.seed = seed;
  es.threads = threads;

  if (square) {
    const ModelParams par = square_params(ctx);
    settings["c1"] = par.c1;
    settings["c2"] = par.c2;
    std::vector<SquareFunctional> funs;
    for (const auto& n : names) funs.push_back(square_functional(n));
    const SquareInit init = parse_square_init(init_str);
    run_ensemble_square(es, par, init, 3,
                        [&](int chain, long t, const SquareState& s) {
                          if (t < 1) return;
                          for (std::size_t k = 0; k < nf; ++k)
                            series[k][chain][t - 1] = funs[k].eval(s);
                        });
  } else {
    std::vector<PlanarFunctional> funs;
    for (const auto& n : names) funs.push_back(planar_functional(n));
    const PlanarInit init = parse_planar_init(init_str, half_width);
    run_ensemble_planar(es, init,
                        [&](int chain, long t, const PlanarPoint& p) {
                          if (t < 1) return;
                          for (std::size_t k = 0; k < nf; ++k)
                            series[k][chain][t - 1] = funs[k].eval(p);
                        });
  }

  std::ostringstream csv;
  csv << "functional,m,n_used,burn_in,B,W,sigma2,vhat,df,factor,R\n";
  ordered_json rows = ordered_json::array();
  for (std::size_t k = 0; k < nf; ++k) {
    const PsrfReport rep = psrf(series[k], burn_in, mode);
    csv << names[k] << ',' << rep.m << ',' << rep.n_used << ',' << burn_in
        << ',' << fmt_double(rep.b) << ',' << fmt_double(rep.w) << ','
        << fmt_double(rep.sigma2) << ',' << fmt_double(rep.v_hat) << ','
        << fmt_double(rep.df) << ',' << fmt_double(rep.factor) << ','
        << fmt_double(rep.r) << '\n';
    ordered_json row;
    row["functional"] = names[k];
    row["m"] = rep.m;
    row["n_used"] = rep.n_used;
    row["burn_in"] = burn_in;
    row["B"] = rep.b;
    row["W"] = rep.w;
    row["sigma2"] = rep.sigma2;
    row["vhat"] = rep.v_hat;
    row["df"] = rep.df;
    row["factor"] = rep.factor;
    row["R"] = rep.r;
    rows.push_back(row);
  }

  ensure_dir(out);
  write_text_file(out + "/diagnose.csv", csv.str());
  ordered_json report;
  report["functionals"] = rows;
  write_json_file(out + "/diagnose.json", report);
  write_manifest(out, "diagnose", ctx, settings,
                 {"diagnose.csv", "diagnose.json", "manifest.json"}, report,
                 timer.seconds());
  return kExitOk;
}

// --- tv-curve --------------------------------------------------------------

int cmd_tv_curve(Ctx& ctx) {
  Timer timer;
  const std::string model = ctx.model("square");
  const bool square = model == "square";
  const std::string name = ctx.cfg.get_string(ctx.section, "functional", "f");
  const long long chains_ll =
      ctx.cfg.get_int(ctx.section, "chains", square ? 5000 : 3000);
  if (chains_ll < 2) throw ConfigError("tv-curve needs at least 2 chains");
  const int chains = static_cast<int>(chains_ll);
  long long iterations =
      ctx.cfg.get_int(ctx.section, "iterations", square ? 500 : 300);
  if (iterations < 0) throw ConfigError("iterations must be >= 0");
  const std::uint64_t seed = ctx.seed();
  const int threads = ctx.threads();
  const std::string out = ctx.out_dir();
  const std::string cps_str =
      ctx.cfg.get_string(ctx.section, "checkpoints", "default");
  std::vector<long long> cps;
  if (cps_str == "default") {
    if (iterations < 1)
      throw ConfigError("default checkpoints need iterations >= 1");
    cps = default_checkpoints(iterations);
  } else {
    cps = parse_longs(cps_str);
    if (cps.empty()) throw ConfigError("empty checkpoint list");
    iterations = *std::max_element(cps.begin(), cps.end());
  }
  const std::string init_str =
      ctx.cfg.get_string(ctx.section, "init", square ? "center" : "unit");
  const double half_width =
      ctx.cfg.get_double(ctx.section, "init_half_width", 10.0);

  ordered_json settings;
  settings["model"] = model;
  settings["functional"] = name;
  settings["chains"] = chains;
  settings["iterations"] = iterations;
  settings["checkpoints"] = cps_str;
  settings["init"] = init_str;
  settings["seed"] = seed;
  settings["threads"] = threads;

  EnsembleSpec es;
  es.chains = chains;
  es.iterations = static_cast<long>(iterations);
  es.seed = seed;
  es.threads = threads;

  TvCurve curve;
  if (square) {
    const SquareFunctional fun = square_functional(name);
    if (!std::isfinite(fun.hi - fun.lo))
      throw ConfigError("functional '" + name + "' has no finite range");
    const ModelParams par = square_params(ctx);
    settings["c1"] = par.c1;
    settings["c2"] = par.c2;
    ReferenceSpec rs;
    rs.chains =
        static_cast<int>(ctx.cfg.get_int(ctx.section, "ref_chains", 5000));
    rs.iteration = ctx.cfg.get_int(ctx.section, "ref_iteration", 500);
    rs.seed = static_cast<std::uint64_t>(ctx.cfg.get_int(
        ctx.section, "ref_seed", static_cast<long long>(seed) + 1));
    settings["ref_chains"] = rs.chains;
    settings["ref_iteration"] = rs.iteration;
    settings["ref_seed"] = rs.seed;
    const Reference ref = reference_square(fun, par, rs, threads);
    const SquareInit init = parse_square_init(init_str);
    curve = tv_curve_square(fun, par, init, es, cps, ref);
  } else {
    const PlanarFunctional fun = planar_functional(name);
    if (!std::isfinite(fun.hi - fun.lo))
      throw ConfigError("functional '" + name + "' has no finite range");
    const double ref_tol = ctx.cfg.get_double(ctx.section, "ref_tol", 1e-8);
    settings["ref_tol"] = ref_tol;
    const Reference ref = reference_planar(name, ref_tol);
    const PlanarInit init = parse_planar_init(init_str, half_width);
    curve = tv_curve_planar(fun, init, es, cps, ref);
  }

  std::ostringstream csv;
  csv << "checkpoint,estimate,stderr,reference,functional,seed\n";
  for (std::size_t i = 0; i < curve.checkpoints.size(); ++i) {
    csv << curve.checkpoints[i] << ',' << fmt_double(curve.estimates[i]) << ','
        << fmt_double(curve.se[i]) << ',' << fmt_double(curve.reference.value)
        << ',' << curve.functional << ',' << curve.seed << '\n';
  }

  ensure_dir(out);
  write_text_file(out + "/tv_curve.csv", csv.str());

  ordered_json results;
  results["functional"] = curve.functional;
  results["chains"] = curve.chains;
  results["checkpoints"] = curve.checkpoints.size();
  results["reference"] = {{"value", curve.reference.value},
                          {"se", curve.reference.se},
                          {"method", curve.reference.method},
                          {"seed", curve.reference.seed},
                          {"chains", curve.reference.chains},
                          {"iteration", curve.reference.iteration}};
  results["first_checkpoint"] = curve.checkpoints.front();
  results["first_estimate"] = curve.estimates.front();
  results["last_checkpoint"] = curve.checkpoints.back();
  results["last_estimate"] = curve.estimates.back();
  write_manifest(out, "tv-curve", ctx, settings,
                 {"tv_curve.csv", "manifest.json"}, results, timer.seconds());
  return kExitOk;
}

int run_guarded(const std::function<int()>& fn) {
  try {
    return fn();
  } catch (const DegenerateChainsError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInadmissible;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInadmissible;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"attractive-repulsive interacting-particle MCMC toolkit"};
  app.fallthrough();

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  int threads = 1;
  auto* opt_config =
      app.add_option("--config", config_path, "key=value config file");
  auto* opt_seed =
      app.add_option("--seed", seed, "RNG seed (overrides config)");
  auto* opt_out = app.add_option("--out", out_dir, "output directory");
  auto* opt_threads =
      app.add_option("--threads", threads,
                     "worker threads (affects speed only, never results)");

  auto* sim = app.add_subcommand("simulate", "run chains and write traces");
  auto* bound = app.add_subcommand("bound", "evaluate convergence bounds");
  bound->fallthrough();
  auto* bound_uniform = bound->add_subcommand(
      "uniform", "uniform-ergodicity bound for the square model");
  auto* bound_shift = bound->add_subcommand(
      "shift-coupling", "coupling bound for the planar model");
  auto* verify = app.add_subcommand("verify", "check certified conditions");
  verify->fallthrough();
  auto* verify_drift =
      verify->add_subcommand("drift", "drift condition on a radial grid");
  auto* verify_minor =
      verify->add_subcommand("minorization", "two-step overlap mass");
  auto* verify_consts =
      verify->add_subcommand("proof-constants", "overlap constant floors");
  auto* diagnose =
      app.add_subcommand("diagnose", "between/within variance diagnostic");
  auto* tv_curve =
      app.add_subcommand("tv-curve", "distance-to-stationarity estimates");
  app.require_subcommand(1);
  bound->require_subcommand(1);
  verify->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return arpmc::kExitUsage;
  }

  return run_guarded([&]() -> int {
    Ctx ctx;
    if (opt_config->count() > 0)
      ctx.cfg = arpmc::KvConfig::parse_file(config_path);
    if (opt_seed->count() > 0) ctx.cli_seed = seed;
    if (opt_threads->count() > 0) ctx.cli_threads = threads;
    if (opt_out->count() > 0) ctx.cli_out = out_dir;

    if (sim->parsed()) {
      ctx.section = "simulate";
      return cmd_simulate(ctx);
    }
    if (bound_uniform->parsed()) {
      ctx.section = "bound-uniform";
      return cmd_bound_uniform(ctx);
    }
    if (bound_shift->parsed()) {
      ctx.section = "bound-shift-coupling";
      return cmd_bound_shift_coupling(ctx);
    }
    if (verify_drift->parsed()) {
      ctx.section = "verify-drift";
      return cmd_verify_drift(ctx);
    }
    if (verify_minor->parsed()) {
      ctx.section = "verify-minorization";
      return cmd_verify_minorization(ctx);
    }
    if (verify_consts->parsed()) {
      ctx.section = "verify-proof-constants";
      return cmd_verify_proof_constants(ctx);
    }
    if (diagnose->parsed()) {
      ctx.section = "diagnose";
      return cmd_diagnose(ctx);
    }
    if (tv_curve->parsed()) {
      ctx.section = "tv-curve";
      return cmd_tv_curve(ctx);
    }
    return arpmc::kExitUsage;
  });
}
