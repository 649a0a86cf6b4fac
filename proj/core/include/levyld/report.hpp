#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace levyld {

/// One row of the results table.
struct ResultRow {
  double eps = 0.0;
  std::uint64_t n = 0;
  std::uint64_t hits_inner = 0;
  std::uint64_t hits_outer = 0;
  double p_inner = 0.0;
  double p_outer = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  std::optional<double> ratio;
  std::optional<double> normalizer;
};

/// eps,n,hits_inner,hits_outer,p_inner,p_outer,ci_lo,ci_hi,ratio,normalizer
void write_results_csv(std::ostream& os, const std::vector<ResultRow>& rows);

/// Gnuplot script plotting column `ycol` of `csv_name` against 1/eps on
/// log-log axes, with an optional fitted power law exp(b) x^m.
std::string gnuplot_script(const std::string& csv_name, const std::string& title,
                           const std::string& ylabel, int ycol, int lo_col, int hi_col,
                           std::optional<std::pair<double, double>> fit);

}  // namespace levyld
