#include "levyld/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "levyld/error.hpp"
#include "levyld/parallel.hpp"
#include "levyld/path_io.hpp"
#include "levyld/report.hpp"

namespace levyld {

using nlohmann::json;

namespace {

constexpr std::uint64_t kShard = 4096;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t stream_for(double eps, std::uint64_t shard) {
  return splitmix64(std::bit_cast<std::uint64_t>(eps)) + shard;
}

Scheme scheme_from(const Config& c) {
  const std::string s = c.get_string("solver.scheme", "rk4");
  if (s == "rk4") return Scheme::rk4;
  if (s == "euler") return Scheme::euler;
  throw ConfigError("solver.scheme must be rk4 or euler", "solver.scheme");
}

template <class F>
auto config_guard(const std::string& key, F f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw ConfigError(key + ": " + e.what(), key);
  }
}

json estimate_json(const ProbabilityEstimate& e) {
  return {{"eps", e.eps},
          {"n", e.n},
          {"hits_inner", e.hits_inner},
          {"hits_outer", e.hits_outer},
          {"p_inner", e.p_inner()},
          {"p_outer", e.p_outer()},
          {"ci_inner", {e.ci_inner().lo, e.ci_inner().hi}},
          {"ci_outer", {e.ci_outer().lo, e.ci_outer().hi}},
          {"out_of_ball", e.out_of_ball},
          {"audited", e.audited},
          {"audit_disagreements", e.audit_disagreements},
          {"audit_max_gap", e.audit_max_gap}};
}

json measure_json(const MeasureEstimate& m) {
  return {{"value", m.value},         {"se", m.std_error},
          {"ci95", {m.ci95.lo, m.ci95.hi}}, {"leakage", m.floor_leakage_flag},
          {"N", m.n},                 {"hits", m.hits},
          {"solver_failures", m.solver_failures}};
}

json header(const ExperimentConfig& cfg, const std::string& kind) {
  json h = {{"schema_version", kSchemaVersion},
            {"experiment", kind},
            {"seed", cfg.seed},
            {"set", cfg.set.name},
            {"drift", cfg.drift.name},
            {"model",
             {{"alpha", cfg.model.alpha},
              {"beta", cfg.model.beta},
              {"c_plus", cfg.model.c_plus},
              {"c_minus", cfg.model.c_minus},
              {"sigma", cfg.model.sigma}}}};
  h["config"] = cfg.source.values();
  return h;
}

json hypotheses_json(const ExperimentConfig& cfg, std::uint64_t out_of_ball, std::uint64_t total) {
  return {{"declared_bound_M", std::isfinite(cfg.set.declared_bound_M)
                                   ? json(cfg.set.declared_bound_M)
                                   : json("inf")},
          {"out_of_ball", out_of_ball},
          {"samples", total},
          {"bound_status", "checked on samples"},
          {"declared_margin", cfg.set.declared_margin},
          {"margin_status", "asserted"}};
}

void write_text(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + file.string(), "--out");
  out << text;
}

}  // namespace

TailModel model_from_config(const Config& c) {
  TailModel m;
  const std::string preset = c.get_string("model.preset", "");
  if (preset == "stable") {
    m = config_guard("model.alpha", [&] { return stable_preset(c.get_double("model.alpha")); });
  } else if (!preset.empty()) {
    throw ConfigError("unknown model.preset '" + preset + "'", "model.preset");
  } else {
    m.alpha = c.get_double("model.alpha");
    m.beta = c.get_double("model.beta", m.alpha);
    m.c_plus = c.get_double("model.c_plus", 1.0);
    m.c_minus = c.get_double("model.c_minus", 1.0);
    m.sigma = c.get_double("model.sigma", 0.0);
    m.onset_plus = c.get_double("model.onset_plus", 0.0);
    m.onset_minus = c.get_double("model.onset_minus", 0.0);
  }
  config_guard("model", [&] {
    m.validate();
    return 0;
  });
  return m;
}

DriftSpec drift_from_config(const Config& c) {
  const std::string name = c.get_string("drift.name");
  double param = 0.0;
  if (name == "const")
    param = c.get_double("drift.c");
  else if (name != "zero")
    param = c.get_double("drift.a");
  return config_guard("drift.name", [&] { return make_drift(name, param); });
}

SetOracle set_from_config(const Config& c) {
  const std::string name = c.get_string("set.name");
  const double M = c.get_double("set.M", 100.0);
  SetOracle s = config_guard("set.name", [&]() -> SetOracle {
    if (name == "sup_exceed") {
      const double v = c.get_double("set.c");
      SetOracle o = set_sup_exceed(v, M);
      o.declared_margin = std::max(v, 0.0);
      return o;
    }
    if (name == "terminal") return set_terminal(c.get_double("set.a"), c.get_double("set.b"), M);
    if (name == "two_sided") {
      const double up = c.get_double("set.c");
      const double down = c.get_double("set.c_down", up);
      SetOracle o = set_two_sided(up, down, M);
      o.declared_margin = std::max(0.0, std::min(up, down));
      return o;
    }
    if (name == "tube") {
      return set_tube(load_path(c.get_string("set.ref")), c.get_double("set.r"),
                      c.get_double("set.tol", 1e-6));
    }
    if (name == "large_jumps") {
      return set_large_jumps(static_cast<int>(c.get_int("set.up", 0)), c.get_double("set.a", 1.0),
                             static_cast<int>(c.get_int("set.down", 0)),
                             c.get_double("set.b", 1.0), M);
    }
    if (name == "whole") return set_whole();
    if (name == "empty") return set_empty();
    throw ConfigError("unknown set '" + name + "'", "set.name");
  });
  if (c.has("set.margin")) s.declared_margin = c.get_double("set.margin");
  return s;
}

SolverConfig solver_from_config(const Config& c) {
  SolverConfig s;
  s.scheme = scheme_from(c);
  s.step = c.get_double("solver.step", s.step);
  s.picard_tol = c.get_double("solver.picard_tol", s.picard_tol);
  s.picard_max_iter = static_cast<int>(c.get_int("solver.picard_max_iter", s.picard_max_iter));
  if (!(s.step > 0.0)) throw ConfigError("solver.step must be positive", "solver.step");
  if (!(s.picard_tol > 0.0))
    throw ConfigError("solver.picard_tol must be positive", "solver.picard_tol");
  return s;
}

ExperimentConfig experiment_from_config(const Config& c) {
  ExperimentConfig e;
  e.source = c;
  e.model = model_from_config(c);
  e.drift = drift_from_config(c);
  e.set = set_from_config(c);
  e.epsilons = c.get_list("eps");
  const std::vector<double> ns = c.get_list("n");
  if (ns.size() != 1 && ns.size() != e.epsilons.size())
    throw ConfigError("n must hold one value or one per eps", "n");
  for (std::size_t i = 0; i < e.epsilons.size(); ++i) {
    const double v = ns.size() == 1 ? ns[0] : ns[i];
    if (v != std::floor(v) || v < 0) throw ConfigError("n must hold integers", "n");
    e.n_samples.push_back(static_cast<std::uint64_t>(v));
  }
  e.seed = static_cast<std::uint64_t>(c.get_int("seed", 0));
  e.threads = static_cast<int>(c.get_int("threads", 0));

  e.sim.grid_delta = c.get_double("sim.grid_delta", e.sim.grid_delta);
  e.sim.trunc_tau = c.get_double("sim.trunc_tau", 0.0);
  e.sim.gaussian_smalljump = c.get_bool("sim.gaussian_smalljump", true);
  e.sim.jump_budget = c.get_double("sim.jump_budget", e.sim.jump_budget);
  e.sim.seed = e.seed;

  e.solver = solver_from_config(c);
  e.search.solver = e.solver;
  e.search.multistarts = static_cast<int>(c.get_int("search.multistarts", e.search.multistarts));
  e.search.max_evals = static_cast<int>(c.get_int("search.max_evals", e.search.max_evals));
  e.search.coarse_step = c.get_double("search.coarse_step", e.search.coarse_step);
  e.search.seed = static_cast<std::uint64_t>(c.get_int("search.seed", static_cast<std::int64_t>(e.seed)));
  e.cost_bound = c.get_double("search.cost_bound", e.cost_bound);

  e.audit_stride = static_cast<std::uint64_t>(c.get_int("audit.stride", 100));
  e.audit_tol = c.get_double("audit.tol", e.audit_tol);
  e.slope_tolerance = c.get_double("slope.tolerance", e.slope_tolerance);
  e.min_hits = static_cast<std::uint64_t>(c.get_int("slope.min_hits", 30));
  e.ratio_threshold = c.get_double("ratio.threshold", e.ratio_threshold);
  if (c.has("ratio.bound_j") || c.has("ratio.bound_k"))
    e.ratio_bound = StepClass{static_cast<int>(c.get_int("ratio.bound_j", 0)),
                              static_cast<int>(c.get_int("ratio.bound_k", 0))};
  e.cjk_samples = static_cast<std::uint64_t>(c.get_int("cjk.n", 1000000));
  e.cjk_floor_up = c.get_double("cjk.floor_up", 0.0);
  e.cjk_floor_down = c.get_double("cjk.floor_down", 0.0);
  e.out_dir = c.get_string("out", ".");
  e.validate();
  return e;
}

void ExperimentConfig::validate() const {
  if (epsilons.empty()) throw ConfigError("eps list is empty", "eps");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0.0 && epsilons[i] <= 1.0))
      throw ConfigError("eps values must lie in (0, 1]", "eps");
    if (i > 0 && !(epsilons[i] < epsilons[i - 1]))
      throw ConfigError("eps values must be strictly decreasing", "eps");
  }
  if (n_samples.size() != epsilons.size()) throw ConfigError("n does not match eps", "n");
  for (auto n : n_samples)
    if (n < 1000) throw ConfigError("n must be at least 1000", "n");
  if (audit_stride == 0) throw ConfigError("audit.stride must be positive", "audit.stride");
}

ProbabilityEstimate estimate_probability(const ExperimentConfig& cfg, const SetOracle& A,
                                         double eps, std::uint64_t n) {
  if (n < 1000) throw DomainError("estimate_probability needs n >= 1000");
  SimConfig sim = cfg.sim;
  sim.epsilon = eps;
  sim.seed = cfg.seed;
  const TruncationPlan plan = plan_truncation(cfg.model, sim);

  const std::uint64_t shards = (n + kShard - 1) / kShard;
  std::vector<ProbabilityEstimate> parts(shards);
  parallel_for(shards, cfg.threads, [&](std::size_t s) {
    Rng rng = make_rng(cfg.seed, stream_for(eps, s));
    const std::uint64_t begin = s * kShard;
    const std::uint64_t end = std::min(n, begin + kShard);
    ProbabilityEstimate& t = parts[s];
    for (std::uint64_t i = begin; i < end; ++i) {
      const CadlagPath noise = sample_scaled_path(cfg.model, sim, plan, rng);
      const CadlagPath y = euler_solve_sde(cfg.drift, noise, sim.grid_delta);
      if (!A.in_ball(y)) ++t.out_of_ball;
      if (A.contains_inner(y)) ++t.hits_inner;
      if (A.contains_outer(y)) ++t.hits_outer;
      if (i % cfg.audit_stride == 0) {
        ++t.audited;
        if (!cfg.drift.zero) {
          const double gap = uniform_distance(apply_F(cfg.drift, noise, cfg.solver), y);
          t.audit_max_gap = std::max(t.audit_max_gap, gap);
          if (gap > cfg.audit_tol) ++t.audit_disagreements;
        }
      }
    }
  });
  ProbabilityEstimate out;
  out.eps = eps;
  out.n = n;
  for (const auto& t : parts) {
    out.hits_inner += t.hits_inner;
    out.hits_outer += t.hits_outer;
    out.out_of_ball += t.out_of_ball;
    out.audited += t.audited;
    out.audit_disagreements += t.audit_disagreements;
    out.audit_max_gap = std::max(out.audit_max_gap, t.audit_max_gap);
  }
  if (static_cast<double>(out.audit_disagreements) > 0.005 * static_cast<double>(out.audited))
    throw IntegratorError("Euler and solution map disagree on " +
                          std::to_string(out.audit_disagreements) + " of " +
                          std::to_string(out.audited) + " audited paths (max gap " +
                          std::to_string(out.audit_max_gap) + ")");
  return out;
}

SlopeResult run_slope_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  SlopeResult r;
  r.theory = inf_rate_over_set(cfg.set, cfg.drift, cfg.model.alpha, cfg.model.beta, cfg.search,
                               cfg.cost_bound);
  r.theory_slope = -r.theory.value;

  std::vector<double> xs, ys, ws;
  for (std::size_t i = 0; i < cfg.epsilons.size(); ++i) {
    SlopePoint pt{estimate_probability(cfg, cfg.set, cfg.epsilons[i], cfg.n_samples[i]), false};
    const auto& e = pt.est;
    if (e.hits_inner >= cfg.min_hits) {
      const double p = e.p_inner();
      const double nn = static_cast<double>(e.n);
      const double var = std::max((1.0 - p) / (nn * p), 1.0 / (nn * nn));
      xs.push_back(std::log(1.0 / e.eps));
      ys.push_back(std::log(p));
      ws.push_back(1.0 / var);
      pt.in_fit = true;
    }
    r.points.push_back(pt);
  }

  std::ostringstream msg;
  if (xs.size() >= 2) {
    r.fit = weighted_linear_fit(xs, ys, ws);
    r.slope_ci = {r.fit->slope - kZ95 * r.fit->slope_se, r.fit->slope + kZ95 * r.fit->slope_se};
  }
  const std::size_t excluded = r.points.size() - xs.size();
  if (excluded > 0) msg << excluded << " point(s) with fewer than " << cfg.min_hits << " hits excluded; ";
  if (!r.theory.found) {
    msg << "no witness found within cost bound " << cfg.cost_bound;
  } else if (!r.fit) {
    msg << "fewer than two points usable for the fit";
  } else {
    const double dev = std::abs(r.fit->slope - r.theory_slope);
    r.pass = dev <= cfg.slope_tolerance;
    msg << "fitted slope " << r.fit->slope << " vs theory " << r.theory_slope << " (|diff| "
        << dev << (r.pass ? " <= " : " > ") << cfg.slope_tolerance << ")";
  }
  r.message = msg.str();
  return r;
}

double ratio_normalizer(const TailModel& model, double eps, int J, int K) {
  const double n = 1.0 / eps;
  return std::pow(n * tail_upper(model, n), J) * std::pow(n * tail_lower(model, n), K);
}

namespace {

std::string trend_of(const std::vector<RatioPoint>& pts) {
  if (pts.size() < 2) return "mixed";
  const std::size_t from = pts.size() >= 3 ? pts.size() - 3 : 0;
  bool dec = true, inc = true;
  for (std::size_t i = from + 1; i < pts.size(); ++i) {
    dec = dec && pts[i].ratio < pts[i - 1].ratio;
    inc = inc && pts[i].ratio > pts[i - 1].ratio;
  }
  return dec ? "decreasing" : inc ? "increasing" : "mixed";
}

}  // namespace

RatioResult run_ratio_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  RatioResult r;
  const double alpha = cfg.model.alpha;
  const double beta = cfg.model.beta;
  const double bound = cfg.ratio_bound ? cost_jk(cfg.ratio_bound->up, cfg.ratio_bound->down, alpha, beta)
                                       : cfg.cost_bound;
  r.argmin = argmin_jk(search_oracle(cfg.set, cfg.drift, cfg.search), alpha, beta, bound);
  std::ostringstream msg;
  if (r.argmin.found) {
    r.J = r.argmin.pairs.front().j;
    r.K = r.argmin.pairs.front().k;
    if (r.argmin.pairs.size() > 1) msg << r.argmin.pairs.size() << " tied argmin pairs; using the first; ";
  } else {
    if (!cfg.ratio_bound)
      throw ConfigError("argmin empty within bound; ratio.bound_j/ratio.bound_k must name the normaliser",
                        "ratio.bound_j");
    r.vanishing_branch = true;
    r.J = cfg.ratio_bound->up;
    r.K = cfg.ratio_bound->down;
  }

  for (std::size_t i = 0; i < cfg.epsilons.size(); ++i) {
    RatioPoint pt;
    pt.est = estimate_probability(cfg, cfg.set, cfg.epsilons[i], cfg.n_samples[i]);
    pt.normalizer = ratio_normalizer(cfg.model, pt.est.eps, r.J, r.K);
    pt.ratio = pt.est.p_inner() / pt.normalizer;
    pt.ratio_ci = {pt.est.ci_inner().lo / pt.normalizer, pt.est.ci_outer().hi / pt.normalizer};
    r.points.push_back(pt);
  }
  r.trend = trend_of(r.points);
  const RatioPoint& last = r.points.back();

  if (!r.vanishing_branch) {
    ClusterSampleSpec spec;
    spec.j = r.J;
    spec.k = r.K;
    spec.alpha = alpha;
    spec.beta = beta;
    spec.floor_up = cfg.cjk_floor_up > 0.0 ? cfg.cjk_floor_up : cfg.set.declared_margin / 2.0;
    spec.floor_down = cfg.cjk_floor_down > 0.0 ? cfg.cjk_floor_down : cfg.set.declared_margin / 2.0;
    if (!(spec.floor_up > 0.0) || !(spec.floor_down > 0.0))
      throw ConfigError("cluster floors need cjk.floor_up/cjk.floor_down or a positive set.margin",
                        "cjk.floor_up");
    spec.n_samples = cfg.cjk_samples;
    spec.seed = cfg.seed ^ 0x5bd1e995ull;
    spec.threads = cfg.threads;
    r.cluster_spec = spec;
    r.bracket = estimate_Cjk_tilde(cfg.set, cfg.drift, spec, cfg.solver);
    const Interval b{r.bracket->inner.ci95.lo, r.bracket->outer.ci95.hi};
    r.pass = last.ratio_ci.intersects(b);
    msg << "final ratio CI [" << last.ratio_ci.lo << ", " << last.ratio_ci.hi << "] "
        << (r.pass ? "meets" : "misses") << " bracket [" << b.lo << ", " << b.hi << "]";
    if (r.bracket->inner.floor_leakage_flag || r.bracket->outer.floor_leakage_flag)
      msg << "; floor leakage flagged";
  } else {
    bool monotone = true;
    for (std::size_t i = 1; i < r.points.size(); ++i)
      monotone = monotone && r.points[i].ratio < r.points[i - 1].ratio;
    const double first = r.points.front().ratio;
    const bool small = last.ratio < cfg.ratio_threshold * first;
    r.pass = monotone && small;
    msg << "argmin empty within cost " << bound << "; ratios "
        << (monotone ? "decrease monotonically" : "are not monotone") << ", final/initial = "
        << (first > 0.0 ? last.ratio / first : std::numeric_limits<double>::infinity())
        << (small ? " < " : " >= ") << cfg.ratio_threshold;
  }
  r.message = msg.str();
  return r;
}

std::string slope_json(const ExperimentConfig& cfg, const SlopeResult& r) {
  json j = header(cfg, "slope");
  json pts = json::array();
  std::uint64_t oob = 0, total = 0;
  for (const auto& p : r.points) {
    json e = estimate_json(p.est);
    e["in_fit"] = p.in_fit;
    pts.push_back(std::move(e));
    oob += p.est.out_of_ball;
    total += p.est.n;
  }
  j["points"] = std::move(pts);
  if (r.fit)
    j["fit"] = {{"slope", r.fit->slope},
                {"intercept", r.fit->intercept},
                {"slope_se", r.fit->slope_se},
                {"slope_ci95", {r.slope_ci.lo, r.slope_ci.hi}},
                {"points", r.fit->points}};
  else
    j["fit"] = nullptr;
  j["theory"] = {{"slope", r.theory.found ? json(r.theory_slope) : json(nullptr)},
                 {"found", r.theory.found},
                 {"cost_bound", r.theory.cost_bound},
                 {"j", r.theory.j},
                 {"k", r.theory.k}};
  if (r.theory.witness)
    j["theory"]["witness"] = json::parse(witness_to_json(
        r.theory.j, r.theory.k, r.theory.value, Verdict::feasible, &*r.theory.witness));
  j["slope_tolerance"] = cfg.slope_tolerance;
  j["hypotheses"] = hypotheses_json(cfg, oob, total);
  j["pass"] = r.pass;
  j["message"] = r.message;
  return j.dump(1);
}

std::string ratio_json(const ExperimentConfig& cfg, const RatioResult& r) {
  json j = header(cfg, "ratio");
  json pts = json::array();
  std::uint64_t oob = 0, total = 0;
  for (const auto& p : r.points) {
    json e = estimate_json(p.est);
    e["normalizer"] = p.normalizer;
    e["ratio"] = p.ratio;
    e["ratio_ci95"] = {p.ratio_ci.lo, p.ratio_ci.hi};
    pts.push_back(std::move(e));
    oob += p.est.out_of_ball;
    total += p.est.n;
  }
  j["points"] = std::move(pts);
  json pairs = json::array();
  for (const auto& p : r.argmin.pairs) pairs.push_back({{"j", p.j}, {"k", p.k}, {"cost", p.cost}});
  json unresolved = json::array();
  for (const auto& p : r.argmin.unresolved)
    unresolved.push_back({{"j", p.j}, {"k", p.k}, {"cost", p.cost}});
  j["argmin"] = {{"found", r.argmin.found},
                 {"pairs", std::move(pairs)},
                 {"unresolved", std::move(unresolved)},
                 {"message", r.argmin.message}};
  j["normalizer_pair"] = {r.J, r.K};
  j["vanishing_branch"] = r.vanishing_branch;
  if (r.bracket) {
    j["cjk_bracket"] = {{"inner", measure_json(r.bracket->inner)},
                        {"outer", measure_json(r.bracket->outer)},
                        {"floors", {r.cluster_spec.floor_up, r.cluster_spec.floor_down}}};
  } else {
    j["cjk_bracket"] = nullptr;
  }
  j["trend_last3"] = r.trend;
  j["threshold"] = cfg.ratio_threshold;
  j["hypotheses"] = hypotheses_json(cfg, oob, total);
  j["pass"] = r.pass;
  j["message"] = r.message;
  return j.dump(1);
}

void write_slope_outputs(const ExperimentConfig& cfg, const SlopeResult& r) {
  std::filesystem::create_directories(cfg.out_dir);
  std::vector<ResultRow> rows;
  for (const auto& p : r.points) {
    const auto& e = p.est;
    rows.push_back({e.eps, e.n, e.hits_inner, e.hits_outer, e.p_inner(), e.p_outer(),
                    e.ci_inner().lo, e.ci_outer().hi, std::nullopt, std::nullopt});
  }
  std::ostringstream csv;
  write_results_csv(csv, rows);
  write_text(cfg.out_dir / "slope.csv", csv.str());
  write_text(cfg.out_dir / "slope.json", slope_json(cfg, r) + "\n");
  std::optional<std::pair<double, double>> fit;
  if (r.fit) fit = std::make_pair(r.fit->slope, r.fit->intercept);
  write_text(cfg.out_dir / "slope.gp",
             gnuplot_script("slope.csv", "P(Y in A) vs 1/eps", "p_inner", 5, 7, 8, fit));
}

void write_ratio_outputs(const ExperimentConfig& cfg, const RatioResult& r) {
  std::filesystem::create_directories(cfg.out_dir);
  std::vector<ResultRow> rows;
  for (const auto& p : r.points) {
    const auto& e = p.est;
    rows.push_back({e.eps, e.n, e.hits_inner, e.hits_outer, e.p_inner(), e.p_outer(),
                    e.ci_inner().lo, e.ci_outer().hi, p.ratio, p.normalizer});
  }
  std::ostringstream csv;
  write_results_csv(csv, rows);
  write_text(cfg.out_dir / "ratio.csv", csv.str());
  write_text(cfg.out_dir / "ratio.json", ratio_json(cfg, r) + "\n");
  write_text(cfg.out_dir / "ratio.gp",
             gnuplot_script("ratio.csv", "P(Y in A) / normaliser vs 1/eps", "ratio", 9, 9, 9,
                            std::nullopt));
}

}  // namespace levyld
