#include "levyld/cluster_measure.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "levyld/error.hpp"
#include "levyld/parallel.hpp"

namespace levyld {

namespace {

constexpr std::uint64_t kShard = 4096;

struct Tally {
  std::uint64_t inner = 0;
  std::uint64_t outer = 0;
  std::uint64_t failures = 0;
  bool leak_inner = false;
  bool leak_outer = false;
};

bool near_floor(const CadlagPath& x, const ClusterSampleSpec& spec) {
  for (const auto& j : x.jumps()) {
    if (j.size > 0.0 && j.size < 1.1 * spec.floor_up) return true;
    if (j.size < 0.0 && -j.size < 1.1 * spec.floor_down) return true;
  }
  return false;
}

MeasureEstimate finish(const ClusterSampleSpec& spec, std::uint64_t hits, std::uint64_t failures,
                       bool leak) {
  MeasureEstimate e;
  e.n = spec.n_samples;
  e.hits = hits;
  e.solver_failures = failures;
  e.mass_factor = spec.mass_factor();
  const double p = static_cast<double>(hits) / static_cast<double>(spec.n_samples);
  e.value = e.mass_factor * p;
  e.std_error = e.mass_factor * std::sqrt(p * (1.0 - p) / static_cast<double>(spec.n_samples));
  e.ci95 = wilson_interval(hits, spec.n_samples).scaled(e.mass_factor);
  e.floor_leakage_flag = leak;
  return e;
}

MeasureEstimate exact(bool member) {
  MeasureEstimate e;
  e.value = member ? 1.0 : 0.0;
  e.ci95 = {e.value, e.value};
  e.n = 1;
  e.hits = member ? 1 : 0;
  return e;
}

// `image` maps a sample to the path tested against the set; nullopt marks a
// solver failure.
template <class Image>
MeasureBracket run(const SetOracle::Predicate& inner, const SetOracle::Predicate& outer,
                   const ClusterSampleSpec& spec, Image image) {
  spec.validate();
  const std::uint64_t shards = (spec.n_samples + kShard - 1) / kShard;
  std::vector<Tally> tallies(shards);
  parallel_for(shards, spec.threads, [&](std::size_t s) {
    Rng rng = make_rng(spec.seed, s);
    const std::uint64_t begin = s * kShard;
    const std::uint64_t end = std::min(spec.n_samples, begin + kShard);
    Tally& t = tallies[s];
    for (std::uint64_t i = begin; i < end; ++i) {
      const CadlagPath eta = sample_djk_path(spec, rng);
      const std::optional<CadlagPath> y = image(eta);
      if (!y) {
        ++t.failures;
        continue;
      }
      const bool out = outer(*y);
      const bool in = inner && inner(*y);
      if (out) {
        ++t.outer;
        t.leak_outer = t.leak_outer || near_floor(eta, spec);
      }
      if (in) {
        ++t.inner;
        t.leak_inner = t.leak_inner || near_floor(eta, spec);
      }
    }
  });
  Tally total;
  for (const auto& t : tallies) {
    total.inner += t.inner;
    total.outer += t.outer;
    total.failures += t.failures;
    total.leak_inner = total.leak_inner || t.leak_inner;
    total.leak_outer = total.leak_outer || t.leak_outer;
  }
  if (static_cast<double>(total.failures) > 1e-3 * static_cast<double>(spec.n_samples))
    throw ConvergenceError(std::to_string(total.failures) + " solver failures in " +
                               std::to_string(spec.n_samples) + " cluster samples",
                           static_cast<double>(total.failures));
  return {finish(spec, total.inner, total.failures, total.leak_inner),
          finish(spec, total.outer, total.failures, total.leak_outer)};
}

}  // namespace

void ClusterSampleSpec::validate() const {
  if (j < 0 || k < 0) throw DomainError("jump counts must be non-negative");
  if (!(floor_up > 0.0) || !(floor_down > 0.0)) throw DomainError("floors must be positive");
  if (!(alpha > 1.0) || !(beta > 1.0)) throw DomainError("tail indices must exceed 1");
  if (n_samples == 0) throw DomainError("sample count must be positive");
}

double ClusterSampleSpec::mass_factor() const {
  return std::pow(floor_up, -alpha * j) * std::pow(floor_down, -beta * k);
}

CadlagPath sample_djk_path(const ClusterSampleSpec& spec, Rng& rng) {
  const int m = spec.j + spec.k;
  if (m == 0) return CadlagPath::zero();
  std::vector<JumpEvent> jumps(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const bool up = i < spec.j;
    const double t = uniform_open_closed(rng);
    const double u = uniform_open_closed(rng);
    const double size = up ? spec.floor_up * std::pow(u, -1.0 / spec.alpha)
                           : -spec.floor_down * std::pow(u, -1.0 / spec.beta);
    jumps[static_cast<std::size_t>(i)] = {t, size};
  }
  for (bool clash = true; clash;) {
    clash = false;
    for (std::size_t a = 0; a < jumps.size(); ++a)
      for (std::size_t b = 0; b < a; ++b)
        if (jumps[a].time == jumps[b].time) {
          jumps[a].time = uniform_open_closed(rng);
          clash = true;
        }
  }
  return CadlagPath::step(std::move(jumps));
}

MeasureEstimate estimate_Cjk(const SetOracle::Predicate& A, const ClusterSampleSpec& spec) {
  spec.validate();
  if (spec.j + spec.k == 0) return exact(A(CadlagPath::zero()));
  return run(nullptr, A, spec, [](const CadlagPath& eta) { return std::optional(eta); }).outer;
}

MeasureBracket estimate_Cjk(const SetOracle& A, const ClusterSampleSpec& spec) {
  spec.validate();
  if (spec.j + spec.k == 0) {
    const CadlagPath z = CadlagPath::zero();
    return {exact(A.contains_inner(z)), exact(A.contains_outer(z))};
  }
  return run(A.contains_inner, A.contains_outer, spec,
             [](const CadlagPath& eta) { return std::optional(eta); });
}

namespace {

auto pushforward(const DriftSpec& drift, const SolverConfig& solver) {
  return [&drift, &solver](const CadlagPath& eta) -> std::optional<CadlagPath> {
    try {
      return apply_F(drift, eta, solver);
    } catch (const ConvergenceError&) {
      return std::nullopt;
    }
  };
}

}  // namespace

MeasureEstimate estimate_Cjk_tilde(const SetOracle::Predicate& A, const DriftSpec& drift,
                                   const ClusterSampleSpec& spec, const SolverConfig& solver) {
  spec.validate();
  if (spec.j + spec.k == 0) return exact(A(apply_F(drift, CadlagPath::zero(), solver)));
  return run(nullptr, A, spec, pushforward(drift, solver)).outer;
}

MeasureBracket estimate_Cjk_tilde(const SetOracle& A, const DriftSpec& drift,
                                  const ClusterSampleSpec& spec, const SolverConfig& solver) {
  spec.validate();
  if (spec.j + spec.k == 0) {
    const CadlagPath f = apply_F(drift, CadlagPath::zero(), solver);
    return {exact(A.contains_inner(f)), exact(A.contains_outer(f))};
  }
  return run(A.contains_inner, A.contains_outer, spec, pushforward(drift, solver));
}

}  // namespace levyld
