#include "mmslcp/config.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace mmslcp {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw std::invalid_argument("config: '" + key + "' expects a number, got '" + v + "'");
  return out;
}

template <typename Int>
Int to_int(const std::string& key, const std::string& v) {
  Int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw std::invalid_argument("config: '" + key + "' expects an integer, got '" + v + "'");
  return out;
}

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

void RunConfig::validate() const {
  market.validate();
  if (!(a < 0 && b > 0)) throw std::invalid_argument("config: need a < 0 < b");
  if (dx_exp < 0 || dx_exp > 30 || dtau_exp < 0 || dtau_exp > 30)
    throw std::invalid_argument("config: mesh exponents must lie in [0, 30]");
  if (!(theta > 0 && theta < 1))
    throw std::invalid_argument("config: theta must lie in (0, 1)");
  if (cycle_length < 2) throw std::invalid_argument("config: cycle_length must be >= 2");
  mms().validate();
  grid();
}

Grid<double> RunConfig::grid() const {
  return build_grid(compute_transform_constants(market), a, b, dx_exp, dtau_exp, theta);
}

MmsConfig<double> RunConfig::mms() const {
  MmsConfig<double> m;
  m.eta = eta;
  m.omega_scale = omega_scale;
  m.tol = tol;
  m.max_iter = max_iter;
  return m;
}

PricerOptions RunConfig::pricer_options() const {
  PricerOptions o;
  o.splitting = splitting_of(method);
  o.policy = policy_of(method, cycle_length);
  o.mms = mms();
  o.warm_start = warm_start;
  return o;
}

std::vector<std::pair<std::string, std::string>> RunConfig::entries() const {
  return {
      {"kind", market.kind == OptionKind::Put ? "put" : "call"},
      {"strike", shortest(market.strike)},
      {"rate", shortest(market.rate)},
      {"volatility", shortest(market.volatility)},
      {"dividend", shortest(market.dividend)},
      {"expiry", shortest(market.expiry)},
      {"a", shortest(a)},
      {"b", shortest(b)},
      {"dx_exp", std::to_string(dx_exp)},
      {"dtau_exp", std::to_string(dtau_exp)},
      {"theta", shortest(theta)},
      {"eta", shortest(eta)},
      {"omega_scale", shortest(omega_scale)},
      {"tol", shortest(tol)},
      {"max_iter", std::to_string(max_iter)},
      {"method", std::string(method_name(method))},
      {"cycle_length", std::to_string(cycle_length)},
      {"warm_start", warm_start == WarmStart::PreviousY ? "y" : "z"},
      {"seed", std::to_string(seed)},
  };
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "kind") {
    if (value == "put") cfg.market.kind = OptionKind::Put;
    else if (value == "call") cfg.market.kind = OptionKind::Call;
    else throw std::invalid_argument("config: kind must be 'put' or 'call'");
  } else if (key == "strike") cfg.market.strike = to_double(key, value);
  else if (key == "rate") cfg.market.rate = to_double(key, value);
  else if (key == "volatility") cfg.market.volatility = to_double(key, value);
  else if (key == "dividend") cfg.market.dividend = to_double(key, value);
  else if (key == "expiry") cfg.market.expiry = to_double(key, value);
  else if (key == "a") cfg.a = to_double(key, value);
  else if (key == "b") cfg.b = to_double(key, value);
  else if (key == "dx_exp") cfg.dx_exp = to_int<int>(key, value);
  else if (key == "dtau_exp") cfg.dtau_exp = to_int<int>(key, value);
  else if (key == "mesh") cfg.dx_exp = cfg.dtau_exp = to_int<int>(key, value);
  else if (key == "theta") cfg.theta = to_double(key, value);
  else if (key == "eta") cfg.eta = to_double(key, value);
  else if (key == "omega_scale") cfg.omega_scale = to_double(key, value);
  else if (key == "tol") cfg.tol = to_double(key, value);
  else if (key == "max_iter") cfg.max_iter = to_int<int>(key, value);
  else if (key == "method") cfg.method = parse_method(value);
  else if (key == "cycle_length") cfg.cycle_length = to_int<int>(key, value);
  else if (key == "warm_start") {
    if (value == "y") cfg.warm_start = WarmStart::PreviousY;
    else if (value == "z") cfg.warm_start = WarmStart::FromZ;
    else throw std::invalid_argument("config: warm_start must be 'y' or 'z'");
  } else if (key == "out") cfg.out_dir = value;
  else if (key == "seed") cfg.seed = to_int<std::uint64_t>(key, value);
  else throw std::invalid_argument("config: unknown key '" + key + "'");
}

void apply_override(RunConfig& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("config: expected key=value, got '" + assignment + "'");
  apply_setting(cfg, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

RunConfig parse_config(std::istream& in, RunConfig base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      apply_override(base, line);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  return parse_config(in, std::move(base));
}

}  // namespace mmslcp
