#include "mmslcp/csv_output.hpp"

#include <cstdio>

namespace mmslcp {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_header(std::ostream& out, const HeaderEntries& header) {
  for (const auto& [key, value] : header) out << "# " << key << " = " << value << '\n';
}

void write_surface_csv(std::ostream& out, const PriceSurface& surface,
                       const HeaderEntries& header) {
  write_header(out, header);
  out << "S,t,V,u\n";
  for (Eigen::Index j = 0; j < surface.u.cols(); ++j) {
    const double t = surface.time(j);
    for (Eigen::Index i = 0; i < surface.u.rows(); ++i) {
      out << format_double(surface.asset(i)) << ',' << format_double(t) << ','
          << format_double(surface.value(i, j)) << ',' << format_double(surface.u(i, j))
          << '\n';
    }
  }
}

void write_summary_csv(std::ostream& out, const RunSummary& summary,
                       const HeaderEntries& header, bool with_timing) {
  write_header(out, header);
  out << "# total_iterations = " << summary.total_iterations << '\n';
  out << "# average_iterations = " << summary.average_iterations << '\n';
  if (with_timing)
    out << "# solve_wall_seconds = " << format_double(summary.total_wall_time) << '\n';
  out << "step,iterations,extrapolations,converged,final_residual,certificate";
  if (with_timing) out << ",wall_seconds";
  out << '\n';
  for (std::size_t j = 0; j < summary.per_step.size(); ++j) {
    const auto& r = summary.per_step[j];
    out << j << ',' << r.iterations << ',' << r.extrapolations << ','
        << (r.converged ? 1 : 0) << ',' << format_double(r.final_residual) << ','
        << format_double(r.certificate);
    if (with_timing) out << ',' << format_double(r.wall_time);
    out << '\n';
  }
}

}  // namespace mmslcp
