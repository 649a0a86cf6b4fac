// Acceptance checks, one per criterion: `levyld_acceptance --criterion N`
// (or `--all`). Prints one PASS/FAIL line per criterion; exit 1 on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "levyld/cadlag.hpp"
#include "levyld/cluster_measure.hpp"
#include "levyld/config.hpp"
#include "levyld/experiments.hpp"
#include "levyld/rate.hpp"
#include "levyld/solution_map.hpp"
#include "oracles.hpp"

using namespace levyld;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void verdict(int c, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", c, detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

ExperimentConfig load_experiment(const char* file) {
  return experiment_from_config(Config::load(std::string(LEVYLD_CONFIG_DIR) + "/" + file));
}

std::vector<DriftSpec> drift_registry() {
  return {make_drift("zero", 0.0), make_drift("const", 0.5), make_drift("cos_scaled", 0.2),
          make_drift("tanh_scaled", 0.5)};
}

// <= 5 jumps, sizes uniform in [-3, 3], times uniform in (0, 1].
std::vector<CadlagPath> step_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> njumps(0, 5);
  std::uniform_real_distribution<double> u(0.0, 1.0), size(-3.0, 3.0);
  std::vector<CadlagPath> out;
  for (int i = 0; i < count; ++i) {
    std::vector<JumpEvent> j;
    const int n = njumps(gen);
    while (static_cast<int>(j.size()) < n) {
      const double t = 1.0 - u(gen);
      bool clash = false;
      for (const auto& e : j) clash |= e.time == t;
      if (!clash) j.push_back({t, size(gen)});
    }
    out.push_back(CadlagPath::step(j));
  }
  return out;
}

bool criterion_1() {
  const auto t0 = Clock::now();
  const auto corpus = step_corpus(1001, 1000);
  const SolverConfig cfg;
  double worst = 0.0;
  for (const auto& d : drift_registry())
    for (const auto& g : corpus)
      worst = std::max(worst, uniform_distance(apply_F_inverse(d, apply_F(d, g, cfg), cfg), g));
  const double secs = seconds_since(t0);
  const bool pass = worst <= 1e-6 && secs < 60.0;
  verdict(1, pass, fmt("max uniform_distance(F^-1(F(g)), g) = %.3e (<= 1e-6) over 1000 paths x 4 drifts; %.1f s (< 60 s)", worst, secs));
  return pass;
}

bool criterion_2() {
  const auto corpus = step_corpus(1001, 1000);
  std::size_t mismatches = 0, checked = 0;
  for (const auto& d : drift_registry()) {
    for (const auto& g : corpus) {
      const CadlagPath f = apply_F(d, g);
      const auto a = g.jumps(), b = f.jumps();
      ++checked;
      bool same = a.size() == b.size();
      for (std::size_t i = 0; same && i < a.size(); ++i)
        same = std::memcmp(&a[i].time, &b[i].time, sizeof(double)) == 0 &&
               std::memcmp(&a[i].size, &b[i].size, sizeof(double)) == 0;
      mismatches += same ? 0 : 1;
    }
  }
  verdict(2, mismatches == 0, fmt("%zu of %zu registries differ bitwise between g and F(g)", mismatches, checked));
  return mismatches == 0;
}

bool criterion_3() {
  const auto a = step_corpus(3001, 1000), b = step_corpus(3002, 1000);
  double worst_ratio = 0.0;
  std::size_t violations = 0;
  for (const auto& d : drift_registry()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double lhs = uniform_distance(apply_F(d, a[i]), apply_F(d, b[i]));
      const double rhs = std::exp(d.lipschitz_L) * uniform_distance(a[i], b[i]);
      if (rhs > 0.0) worst_ratio = std::max(worst_ratio, lhs / rhs);
      if (lhs > rhs * (1.0 + 1e-2)) ++violations;
    }
  }
  verdict(3, violations == 0, fmt("%zu violations of ||F(g1)-F(g2)|| <= e^L ||g1-g2|| (1+1e-2); worst ratio %.6f", violations, worst_ratio));
  return violations == 0;
}

bool criterion_4() {
  const auto t0 = Clock::now();
  // Fixed test grid: <= 3 jumps, sizes {+-0.5, +-1, +-2}, times {0.2, ..., 0.8}.
  const double sizes[] = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
  std::vector<CadlagPath> grid;
  for (int mask = 0; mask < (1 << 7); ++mask) {
    std::vector<int> slots;
    for (int s = 0; s < 7; ++s)
      if (mask & (1 << s)) slots.push_back(s);
    if (slots.size() > 3) continue;
    int combos = 1;
    for (std::size_t i = 0; i < slots.size(); ++i) combos *= 6;
    for (int c = 0; c < combos; ++c) {
      std::vector<JumpEvent> j;
      int r = c;
      for (int s : slots) {
        j.push_back({(2 + s) / 10.0, sizes[r % 6]});
        r /= 6;
      }
      grid.push_back(CadlagPath::step(j));
    }
  }
  std::mt19937_64 gen(4004);
  std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
  auto as_oracle = [](const CadlagPath& x) {
    oracle::StepFn f;
    for (const auto& e : x.jumps()) f.jumps.push_back({e.time, e.size});
    return f;
  };
  const int pairs = 10000;
  double worst = 0.0;
  for (int i = 0; i < pairs; ++i) {
    const CadlagPath& x = grid[pick(gen)];
    const CadlagPath& y = grid[pick(gen)];
    const double exact = j1_step_exact(x, y).upper;
    worst = std::max(worst, std::abs(exact - oracle::j1_lattice(as_oracle(x), as_oracle(y), 1000)));
  }
  const double secs = seconds_since(t0);
  const bool pass = worst <= 2e-3 && secs < 600.0;
  verdict(4, pass, fmt("max |exact - lattice| = %.3e (<= 2e-3) over %d pairs from a %zu-path grid; %.1f s (< 600 s)", worst, pairs, grid.size(), secs));
  return pass;
}

bool criterion_5() {
  std::mt19937_64 gen(5005);
  std::uniform_real_distribution<double> t(0.02, 0.98), size(-3.0, 3.0), knot(0.1, 0.8);
  double worst = 0.0;
  const int n = 1000;
  for (int p = 0; p < 200; ++p) {
    std::vector<JumpEvent> j;
    while (j.size() < 5) j.push_back({t(gen), size(gen)});
    const CadlagPath f = CadlagPath::step(j);
    const double s0 = knot(gen);
    const TimeChange ln({{s0, s0 + 1.0 / n}});
    worst = std::max(worst, l1_distance(compose_time_change(f, ln), f));
  }
  const bool pass = worst <= 1e-2;
  verdict(5, pass, fmt("max int|f o lambda_n - f| = %.3e (<= 1e-2) at n = 1000 over 200 five-jump paths", worst));
  return pass;
}

bool criterion_6() {
  const auto t0 = Clock::now();
  ClusterSampleSpec s;
  s.j = 1;
  s.k = 0;
  s.alpha = 1.5;
  s.beta = 2.0;
  s.n_samples = 1000000;
  s.seed = 6006;
  const auto one = estimate_Cjk([](const CadlagPath& x) { return largest_jumps_pi(x).first >= 2.0; }, s);
  s.k = 1;
  const auto two = estimate_Cjk(
      [](const CadlagPath& x) {
        const auto p = largest_jumps_pi(x);
        return p.first >= 2.0 && p.second >= 2.0;
      },
      s);
  const double a = std::pow(2.0, -1.5), b = a * 0.25;
  const double ea = std::abs(one.value / a - 1.0), eb = std::abs(two.value / b - 1.0);
  const double secs = seconds_since(t0);
  const bool pass = ea <= 0.02 && eb <= 0.03 && secs < 120.0;
  verdict(6, pass, fmt("C_10 = %.6f vs %.6f (rel %.4f <= 0.02); C_11 = %.7f vs %.7f (rel %.4f <= 0.03); %.1f s (< 120 s)", one.value, a, ea, two.value, b, eb, secs));
  return pass;
}

std::string slope_detail(const SlopeResult& r) {
  std::string s;
  for (const auto& p : r.points) s += fmt(" p(%.6g)=%.5f", p.est.eps, p.est.p_inner());
  return s;
}

bool slope_criterion(int c, const char* file, double lo, double hi) {
  const auto t0 = Clock::now();
  const ExperimentConfig cfg = load_experiment(file);
  const SlopeResult r = run_slope_experiment(cfg);
  const double slope = r.fit ? r.fit->slope : NAN;
  const bool pass = r.fit && slope >= lo && slope <= hi;
  verdict(c, pass, fmt("fitted slope %.4f, window [%.2f, %.2f], theory %.2f;", slope, lo, hi, r.theory_slope) +
                       slope_detail(r) + fmt("; %.0f s", seconds_since(t0)));
  return pass;
}

bool criterion_9() {
  const auto t0 = Clock::now();
  const ExperimentConfig cfg = load_experiment("ratio_stable15.toml");
  const RatioResult r = run_ratio_experiment(cfg);
  if (!r.bracket || r.points.empty()) {
    verdict(9, false, "no bracket: " + r.message);
    return false;
  }
  const auto& last = r.points.back();
  const Interval bracket{r.bracket->inner.ci95.lo, r.bracket->outer.ci95.hi};
  const bool meets = last.ratio_ci.intersects(bracket);
  const double analytic = 2.0 / 3.0;
  const bool contains = bracket.contains(analytic);
  std::string seq;
  for (const auto& p : r.points) seq += fmt(" %.6g:%.4f", p.est.eps, p.ratio);
  std::printf("INFO criterion 9: ratios%s; bracket inner %.5f outer %.5f; final ratio CI [%.4f, %.4f]\n",
              seq.c_str(), r.bracket->inner.value, r.bracket->outer.value, last.ratio_ci.lo, last.ratio_ci.hi);
  verdict(9, meets && contains,
          fmt("final-eps ratio CI meets bracket [%.5f, %.5f]: %s; bracket contains 2/3: %s; %.0f s",
              bracket.lo, bracket.hi, meets ? "yes" : "no", contains ? "yes" : "no", seconds_since(t0)));
  return meets && contains;
}

bool criterion_10() {
  const auto t0 = Clock::now();
  const ExperimentConfig cfg = load_experiment("vanishing.toml");
  const RatioResult r = run_ratio_experiment(cfg);
  bool decreasing = r.points.size() >= 2;
  for (std::size_t i = 1; i < r.points.size(); ++i) decreasing &= r.points[i].ratio < r.points[i - 1].ratio;
  const double first = r.points.empty() ? NAN : r.points.front().ratio;
  const double final = r.points.empty() ? NAN : r.points.back().ratio;
  const bool small = final < 0.1 * first;
  std::string seq;
  for (const auto& p : r.points) seq += fmt(" %.4g", p.ratio);
  const bool pass = r.vanishing_branch && decreasing && small;
  verdict(10, pass, fmt("argmin empty within (%d,%d): %s; ratios%s; decreasing: %s; final/initial = %.4f (< 0.1); %.0f s",
                        r.J, r.K, r.vanishing_branch ? "yes" : "no", seq.c_str(), decreasing ? "yes" : "no",
                        final / first, seconds_since(t0)));
  return pass;
}

bool criterion_11() {
  const auto t0 = Clock::now();
  ExperimentConfig cfg = load_experiment("stable15.toml");
  std::vector<ProbabilityEstimate> runs[2];
  const int threads[2] = {1, 8};
  for (int k = 0; k < 2; ++k) {
    cfg.threads = threads[k];
    for (std::size_t i = 0; i < cfg.epsilons.size(); ++i)
      runs[k].push_back(estimate_probability(cfg, cfg.set, cfg.epsilons[i], cfg.n_samples[i]));
  }
  bool same = true;
  for (std::size_t i = 0; i < runs[0].size(); ++i)
    same &= runs[0][i].hits_inner == runs[1][i].hits_inner && runs[0][i].hits_outer == runs[1][i].hits_outer &&
            runs[0][i].p_inner() == runs[1][i].p_inner();
  verdict(11, same, fmt("p-hat identical for threads 1 and 8 at all %zu eps: %s; %.0f s", runs[0].size(),
                        same ? "yes" : "no", seconds_since(t0)));
  return same;
}

bool run_criterion(int c) {
  switch (c) {
    case 1: return criterion_1();
    case 2: return criterion_2();
    case 3: return criterion_3();
    case 4: return criterion_4();
    case 5: return criterion_5();
    case 6: return criterion_6();
    case 7: return slope_criterion(7, "stable15.toml", -0.65, -0.35);
    case 8: return slope_criterion(8, "twosided.toml", -1.5 - 0.35, -1.5 + 0.35);
    case 9: return criterion_9();
    case 10: return criterion_10();
    case 11: return criterion_11();
    default: std::fprintf(stderr, "unknown criterion %d\n", c); return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
      which.push_back(std::atoi(argv[++i]));
    else if (std::strcmp(argv[i], "--all") == 0)
      for (int c = 1; c <= 11; ++c) which.push_back(c);
  }
  if (which.empty()) {
    std::fprintf(stderr, "usage: levyld_acceptance --criterion N | --all\n");
    return 2;
  }
  bool ok = true;
  for (int c : which) {
    try {
      ok &= run_criterion(c);
    } catch (const std::exception& e) {
      verdict(c, false, std::string("error: ") + e.what());
      ok = false;
    }
  }
  return ok ? 0 : 1;
}
