#include "levyld/path_io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "levyld/error.hpp"

namespace levyld {

using nlohmann::json;

namespace {

json path_json(const CadlagPath& p) {
  json jumps = json::array();
  for (const auto& j : p.jumps()) jumps.push_back({{"t", j.time}, {"size", j.size}});
  const auto g = p.grid_values();
  return {{"initial_value", p.initial_value()},
          {"delta", p.delta()},
          {"grid_values", std::vector<double>(g.begin(), g.end())},
          {"jumps", std::move(jumps)}};
}

}  // namespace

std::string path_to_json(const CadlagPath& path, int indent) { return path_json(path).dump(indent); }

CadlagPath path_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw DomainError("path JSON must be an object");
    std::vector<JumpEvent> jumps;
    for (const auto& e : j.value("jumps", json::array()))
      jumps.push_back({e.at("t").get<double>(), e.at("size").get<double>()});
    auto grid = j.at("grid_values").get<std::vector<double>>();
    if (grid.size() < 2) throw DomainError("grid_values needs at least two entries");
    const double delta = j.value("delta", 1.0 / static_cast<double>(grid.size() - 1));
    return CadlagPath(j.value("initial_value", 0.0), delta, std::move(grid), std::move(jumps));
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed path JSON: ") + e.what());
  }
}

CadlagPath load_path(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw DomainError("cannot open " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return path_from_json(ss.str());
}

void save_path_json(const std::filesystem::path& file, const CadlagPath& path) {
  std::ofstream out(file);
  if (!out) throw DomainError("cannot write " + file.string());
  out << path_to_json(path, 1) << '\n';
}

void write_path_csv(std::ostream& os, const CadlagPath& path) {
  std::vector<double> times;
  for (std::size_t i = 0; i <= path.cells(); ++i) times.push_back(path.grid_time(i));
  for (const auto& j : path.jumps()) times.push_back(j.time);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  const auto old = os.precision(17);
  os << "t,value\n";
  std::size_t next_jump = 0;
  const auto jumps = path.jumps();
  for (double t : times) {
    while (next_jump < jumps.size() && jumps[next_jump].time < t) ++next_jump;
    if (next_jump < jumps.size() && jumps[next_jump].time == t)
      os << t << ',' << path.eval_left(t) << '\n';
    os << t << ',' << path.eval(t) << '\n';
  }
  os.precision(old);
}

std::string witness_to_json(int j, int k, double cost, Verdict verdict,
                            const CadlagPath* witness, int indent) {
  json out = {{"j", j}, {"k", k}, {"cost", cost}, {"verdict", to_string(verdict)}};
  out["path"] = witness ? path_json(*witness) : json(nullptr);
  return out.dump(indent);
}

std::string estimate_to_json(const ClusterSampleSpec& spec, const MeasureEstimate& e,
                             int indent) {
  json out = {{"j", spec.j},
              {"k", spec.k},
              {"floors", {spec.floor_up, spec.floor_down}},
              {"N", e.n},
              {"value", e.value},
              {"se", e.std_error},
              {"ci95", {e.ci95.lo, e.ci95.hi}},
              {"leakage", e.floor_leakage_flag}};
  return out.dump(indent);
}

}  // namespace levyld
