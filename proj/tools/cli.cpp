#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "levyld/cadlag.hpp"
#include "levyld/cluster_measure.hpp"
#include "levyld/config.hpp"
#include "levyld/error.hpp"
#include "levyld/experiments.hpp"
#include "levyld/levy_model.hpp"
#include "levyld/path_io.hpp"
#include "levyld/rate.hpp"
#include "levyld/solution_map.hpp"

namespace levyld::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Globals {
  std::string config_file;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::string out_dir;
  std::string format = "json";
};

Config load_config(const Globals& g, bool required) {
  Config c;
  if (!g.config_file.empty())
    c = Config::load(g.config_file);
  else if (required)
    throw ConfigError("this command needs --config", "--config");
  if (g.seed) c.set("seed", std::to_string(*g.seed));
  if (g.threads) c.set("threads", std::to_string(*g.threads));
  if (!g.out_dir.empty()) c.set("out", g.out_dir);
  return c;
}

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

// Writes `text` to out_dir/name when an output directory is set, else to out.
void emit(const Globals& g, const std::string& name, const std::string& text, std::ostream& out) {
  if (g.out_dir.empty()) {
    out << text;
    return;
  }
  fs::create_directories(g.out_dir);
  std::ofstream f(fs::path(g.out_dir) / name, std::ios::binary);
  if (!f) throw ConfigError("cannot write into " + g.out_dir, "--out");
  f << text;
}

std::string path_text(const Globals& g, const CadlagPath& p) {
  if (g.format == "csv") {
    std::ostringstream os;
    write_path_csv(os, p);
    return os.str();
  }
  return path_to_json(p, 1) + "\n";
}

int cmd_simulate(const Globals& g, std::uint64_t count, std::optional<double> eps_opt,
                 std::ostream& out) {
  const Config c = load_config(g, true);
  const TailModel model = model_from_config(c);
  SimConfig sim;
  sim.epsilon = eps_opt ? *eps_opt : c.get_list("eps").front();
  sim.grid_delta = c.get_double("sim.grid_delta", sim.grid_delta);
  sim.trunc_tau = c.get_double("sim.trunc_tau", 0.0);
  sim.gaussian_smalljump = c.get_bool("sim.gaussian_smalljump", true);
  sim.jump_budget = c.get_double("sim.jump_budget", sim.jump_budget);
  sim.seed = static_cast<std::uint64_t>(c.get_int("seed", 0));
  const TruncationPlan plan = plan_truncation(model, sim);
  const std::string ext = g.format == "csv" ? ".csv" : ".json";
  for (std::uint64_t i = 0; i < count; ++i) {
    sim.stream_id = i;
    Rng rng = make_rng(sim.seed, sim.stream_id);
    const CadlagPath p = sample_scaled_path(model, sim, plan, rng);
    std::ostringstream name;
    name << "path_" << std::setw(4) << std::setfill('0') << i << ext;
    emit(g, name.str(), path_text(g, p), out);
  }
  return kExitOk;
}

int cmd_solve(const Globals& g, const std::string& file, bool inverse, std::ostream& out) {
  const Config c = load_config(g, true);
  const DriftSpec drift = drift_from_config(c);
  const SolverConfig solver = solver_from_config(c);
  const CadlagPath in = load_path(file);
  const CadlagPath res = inverse ? apply_F_inverse(drift, in, solver) : apply_F(drift, in, solver);
  emit(g, g.format == "csv" ? "solved.csv" : "solved.json", path_text(g, res), out);
  return kExitOk;
}

int cmd_rate(const Globals& g, const std::string& file, double tol_step, double eta,
             std::ostream& out) {
  const Config c = load_config(g, true);
  const double alpha = c.get_double("model.alpha");
  const double beta = c.get_double("model.beta", alpha);
  const DriftSpec drift = c.has("drift.name") ? drift_from_config(c) : drift_zero();
  const SolverConfig solver = solver_from_config(c);
  const CadlagPath p = load_path(file);
  const JumpProfile prof = jump_counts(p, eta);
  const auto pi = largest_jumps_pi(p);
  const double I = rate_I(p, alpha, beta, tol_step, eta);
  const double It = rate_I_tilde(p, drift, alpha, beta, solver, tol_step, eta);
  std::ostringstream os;
  if (g.format == "csv") {
    os << "up_count,down_count,pi_up,pi_down,rate_I,rate_I_tilde,rate_pi\n"
       << prof.up_count << ',' << prof.down_count << ',' << num(pi.first) << ','
       << num(pi.second) << ',' << num(I) << ',' << num(It) << ','
       << num(rate_pi_induced(pi, alpha, beta)) << '\n';
  } else {
    auto jnum = [](double v) { return std::isfinite(v) ? json(v) : json("inf"); };
    json j = {{"up_count", prof.up_count},
              {"down_count", prof.down_count},
              {"pi", {pi.first, pi.second}},
              {"rate_I", jnum(I)},
              {"rate_I_tilde", jnum(It)},
              {"rate_pi", rate_pi_induced(pi, alpha, beta)},
              {"drift", drift.name}};
    os << j.dump(1) << '\n';
  }
  emit(g, g.format == "csv" ? "rate.csv" : "rate.json", os.str(), out);
  return kExitOk;
}

int cmd_cjk(const Globals& g, std::ostream& out) {
  const Config c = load_config(g, true);
  const TailModel model = model_from_config(c);
  const SetOracle set = set_from_config(c);
  const DriftSpec drift = c.has("drift.name") ? drift_from_config(c) : drift_zero();
  ClusterSampleSpec spec;
  spec.j = static_cast<int>(c.get_int("cjk.j"));
  spec.k = static_cast<int>(c.get_int("cjk.k"));
  spec.alpha = model.alpha;
  spec.beta = model.beta;
  const double fallback = set.declared_margin > 0.0 ? set.declared_margin / 2.0 : 0.0;
  spec.floor_up = fallback > 0.0 ? c.get_double("cjk.floor_up", fallback) : c.get_double("cjk.floor_up");
  spec.floor_down = c.get_double("cjk.floor_down", spec.floor_up);
  spec.n_samples = static_cast<std::uint64_t>(c.get_int("cjk.n", 1000000));
  spec.seed = static_cast<std::uint64_t>(c.get_int("seed", 0));
  spec.threads = static_cast<int>(c.get_int("threads", 0));
  const MeasureBracket b = estimate_Cjk_tilde(set, drift, spec, solver_from_config(c));
  std::ostringstream os;
  if (g.format == "csv") {
    os << "side,j,k,floor_up,floor_down,N,value,se,ci_lo,ci_hi,leakage\n";
    for (auto [side, e] : {std::pair{"inner", &b.inner}, std::pair{"outer", &b.outer}})
      os << side << ',' << spec.j << ',' << spec.k << ',' << num(spec.floor_up) << ','
         << num(spec.floor_down) << ',' << e->n << ',' << num(e->value) << ','
         << num(e->std_error) << ',' << num(e->ci95.lo) << ',' << num(e->ci95.hi) << ','
         << (e->floor_leakage_flag ? 1 : 0) << '\n';
  } else {
    json j = {{"set", set.name},
              {"drift", drift.name},
              {"inner", json::parse(estimate_to_json(spec, b.inner))},
              {"outer", json::parse(estimate_to_json(spec, b.outer))}};
    os << j.dump(1) << '\n';
  }
  emit(g, g.format == "csv" ? "cjk.csv" : "cjk.json", os.str(), out);
  return kExitOk;
}

int cmd_slope(const Globals& g, std::ostream& out) {
  const ExperimentConfig cfg = experiment_from_config(load_config(g, true));
  const SlopeResult r = run_slope_experiment(cfg);
  write_slope_outputs(cfg, r);
  out << (r.pass ? "PASS" : "FAIL") << " slope: " << r.message << '\n';
  return r.pass ? kExitOk : kExitFail;
}

int cmd_ratio(const Globals& g, std::ostream& out) {
  const ExperimentConfig cfg = experiment_from_config(load_config(g, true));
  const RatioResult r = run_ratio_experiment(cfg);
  write_ratio_outputs(cfg, r);
  out << (r.pass ? "PASS" : "FAIL") << " ratio: " << r.message << '\n';
  return r.pass ? kExitOk : kExitFail;
}

int cmd_j1(const Globals& g, const std::string& a, const std::string& b, double tol,
           std::ostream& out) {
  const CadlagPath x = load_path(a);
  const CadlagPath y = load_path(b);
  const J1Bracket r = j1_distance(x, y, tol);
  if (g.format == "csv") {
    out << "lower,upper,converged,exact\n"
        << num(r.lower) << ',' << num(r.upper) << ',' << r.converged << ',' << r.exact << '\n';
  } else {
    out << json({{"lower", r.lower},
                 {"upper", r.upper},
                 {"converged", r.converged},
                 {"exact", r.exact}})
               .dump()
        << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heavy-tailed SDE simulation and large-deviation experiments", "levyld"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config_file, "Experiment config file");
  app.add_option("--seed", g.seed, "Master seed (overrides the config)");
  app.add_option("--threads", g.threads, "Worker threads, 0 = all cores");
  app.add_option("--out", g.out_dir, "Output directory");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  std::uint64_t count = 1;
  std::optional<double> sim_eps;
  auto* simulate = app.add_subcommand("simulate", "Sample paths of eps*L^eps");
  simulate->add_option("--count", count, "Number of paths");
  simulate->add_option("--eps", sim_eps, "Scale (default: first entry of eps)");

  std::string in_file;
  bool inverse = false;
  auto* solve = app.add_subcommand("solve", "Apply the solution map to a path file");
  solve->add_option("path", in_file, "Path JSON")->required();
  solve->add_flag("--inverse", inverse, "Apply the inverse map instead");

  double tol_step = kDefaultTolStep;
  double eta = 0.0;
  auto* rate = app.add_subcommand("rate", "Evaluate I and I-tilde on a path file");
  rate->add_option("path", in_file, "Path JSON")->required();
  rate->add_option("--tol-step", tol_step, "Step-function tolerance");
  rate->add_option("--eta", eta, "Jump-count threshold");

  auto* cjk = app.add_subcommand("cjk", "Estimate a cluster measure");
  auto* slope = app.add_subcommand("slope", "Run the slope experiment");
  auto* ratio = app.add_subcommand("ratio", "Run the ratio experiment");

  std::string a, b;
  double tol = 1e-6;
  auto* j1 = app.add_subcommand("j1", "J1 distance between two path files");
  j1->add_option("a", a, "First path JSON")->required();
  j1->add_option("b", b, "Second path JSON")->required();
  j1->add_option("--tol", tol, "Bracket tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "levyld: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (*simulate) return cmd_simulate(g, count, sim_eps, out);
    if (*solve) return cmd_solve(g, in_file, inverse, out);
    if (*rate) return cmd_rate(g, in_file, tol_step, eta, out);
    if (*cjk) return cmd_cjk(g, out);
    if (*slope) return cmd_slope(g, out);
    if (*ratio) return cmd_ratio(g, out);
    if (*j1) return cmd_j1(g, a, b, tol, out);
  } catch (const ConfigError& e) {
    err << "levyld: config error [" << e.key() << "]: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "levyld: invalid input: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ConvergenceError& e) {
    err << "levyld: convergence error (residual " << e.residual() << "): " << e.what() << '\n';
    return kExitSolver;
  } catch (const IntegratorError& e) {
    err << "levyld: integrator error: " << e.what() << '\n';
    return kExitSolver;
  }
  return kExitConfig;
}

}  // namespace levyld::cli
