#ifndef MMSLCP_CONFIG_HPP
#define MMSLCP_CONFIG_HPP

#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "mmslcp/discretization.hpp"
#include "mmslcp/methods.hpp"
#include "mmslcp/model.hpp"
#include "mmslcp/pricer.hpp"

namespace mmslcp {

/**
 * Flat run configuration. Defaults are the reference experiment: an American
 * put with K = 100, r = 0.05, sigma = 0.2, delta = 0, T = 50 on
 * (a, b) = (-1.5, 1.5), Crank-Nicolson, eta = 2, Omega = diag(A) / 2,
 * tol = 1e-6, N_c = 15.
 *
 * Text form is one `key = value` per line; `#` starts a comment.
 */
struct RunConfig {
  MarketParams<double> market;
  double a = -1.5;
  double b = 1.5;
  int dx_exp = 4;
  int dtau_exp = 4;
  double theta = 0.5;
  double eta = 2.0;
  double omega_scale = 0.5;
  double tol = 1e-6;
  int max_iter = 100000;
  Method method = Method::BGS;
  int cycle_length = 15;
  WarmStart warm_start = WarmStart::PreviousY;
  std::string out_dir = ".";
  std::uint64_t seed = 20240611;

  /// Throws std::invalid_argument on the first violated precondition.
  void validate() const;

  Grid<double> grid() const;
  PricerOptions pricer_options() const;
  MmsConfig<double> mms() const;

  /// Ordered key/value pairs, for echoing into output headers.
  std::vector<std::pair<std::string, std::string>> entries() const;
};

/// Sets one key; throws std::invalid_argument on unknown keys or bad values.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);
/// Applies a "key=value" string.
void apply_override(RunConfig& cfg, const std::string& assignment);

RunConfig parse_config(std::istream& in, RunConfig base = {});
/// Throws std::runtime_error if the file cannot be opened.
RunConfig load_config(const std::string& path, RunConfig base = {});

}  // namespace mmslcp

#endif  // MMSLCP_CONFIG_HPP
