#include "levyld/report.hpp"

#include <iomanip>
#include <sstream>

namespace levyld {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

void write_results_csv(std::ostream& os, const std::vector<ResultRow>& rows) {
  os << "eps,n,hits_inner,hits_outer,p_inner,p_outer,ci_lo,ci_hi,ratio,normalizer\n";
  for (const auto& r : rows) {
    os << num(r.eps) << ',' << r.n << ',' << r.hits_inner << ',' << r.hits_outer << ','
       << num(r.p_inner) << ',' << num(r.p_outer) << ',' << num(r.ci_lo) << ',' << num(r.ci_hi)
       << ',' << (r.ratio ? num(*r.ratio) : "") << ','
       << (r.normalizer ? num(*r.normalizer) : "") << '\n';
  }
}

std::string gnuplot_script(const std::string& csv_name, const std::string& title,
                           const std::string& ylabel, int ycol, int lo_col, int hi_col,
                           std::optional<std::pair<double, double>> fit) {
  std::ostringstream os;
  os << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set logscale xy\n"
     << "set title '" << title << "'\n"
     << "set xlabel '1/eps'\n"
     << "set ylabel '" << ylabel << "'\n"
     << "set terminal pngcairo size 800,600\n"
     << "set output '" << csv_name.substr(0, csv_name.rfind('.')) << ".png'\n"
     << "plot '" << csv_name << "' using (1/$1):" << ycol << ':' << lo_col << ':' << hi_col
     << " with yerrorbars title '" << ylabel << "'";
  if (fit)
    os << ", exp(" << num(fit->second) << ")*x**(" << num(fit->first) << ") title 'fit'";
  os << '\n';
  return os.str();
}

}  // namespace levyld
