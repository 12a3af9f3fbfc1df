#ifndef MMSLCP_CSV_OUTPUT_HPP
#define MMSLCP_CSV_OUTPUT_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mmslcp/pricer.hpp"

namespace mmslcp {

using HeaderEntries = std::vector<std::pair<std::string, std::string>>;

/// `# key = value` provenance lines.
void write_header(std::ostream& out, const HeaderEntries& header);

/// Columns S,t,V,u, one row per node, time-major from t = T down to t = 0.
void write_surface_csv(std::ostream& out, const PriceSurface& surface,
                       const HeaderEntries& header);

/// Columns step,iterations,extrapolations,converged,final_residual,
/// certificate[,wall_seconds]. Wall time covers the LCP solve only.
void write_summary_csv(std::ostream& out, const RunSummary& summary,
                       const HeaderEntries& header, bool with_timing);

/// Full-precision (17 significant digits) rendering used by every CSV.
std::string format_double(double v);

}  // namespace mmslcp

#endif  // MMSLCP_CSV_OUTPUT_HPP
