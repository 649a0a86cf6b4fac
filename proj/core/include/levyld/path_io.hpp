#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "levyld/cadlag.hpp"
#include "levyld/cluster_measure.hpp"
#include "levyld/rate.hpp"

namespace levyld {

/// {"initial_value", "delta", "grid_values": [...], "jumps": [{"t", "size"}]}
std::string path_to_json(const CadlagPath& path, int indent = -1);
/// Throws DomainError on malformed input.
CadlagPath path_from_json(std::string_view text);

CadlagPath load_path(const std::filesystem::path& file);
void save_path_json(const std::filesystem::path& file, const CadlagPath& path);

/// Two columns t,value on the grid and at jump times; a jump contributes a
/// left-limit row followed by the value row.
void write_path_csv(std::ostream& os, const CadlagPath& path);

/// {"j", "k", "cost", "verdict", "path"}
std::string witness_to_json(int j, int k, double cost, Verdict verdict,
                            const CadlagPath* witness, int indent = -1);

/// {"j", "k", "floors", "N", "value", "se", "ci95", "leakage"}
std::string estimate_to_json(const ClusterSampleSpec& spec, const MeasureEstimate& e,
                             int indent = -1);

}  // namespace levyld
