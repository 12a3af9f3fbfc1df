#include "mmslcp/methods.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace mmslcp {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::GS: return "GS";
    case Method::MpeGS: return "MPE-GS";
    case Method::MpeCycleGS: return "MPECycle-GS";
    case Method::BGS: return "BGS";
    case Method::MpeBGS: return "MPE-BGS";
    case Method::MpeCycleBGS: return "MPECycle-BGS";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
  };
  const std::string key = lower(name);
  for (Method m : kAllMethods)
    if (lower(method_name(m)) == key) return m;
  throw std::invalid_argument("unknown method '" + std::string(name) +
                              "' (expected GS, MPE-GS, MPECycle-GS, BGS, "
                              "MPE-BGS or MPECycle-BGS)");
}

SplittingKind splitting_of(Method m) {
  switch (m) {
    case Method::GS:
    case Method::MpeGS:
    case Method::MpeCycleGS: return SplittingKind::PointGaussSeidel;
    default: return SplittingKind::SchwarzTwoBlock;
  }
}

AccelPolicy policy_of(Method m, int cycle_length) {
  switch (m) {
    case Method::GS:
    case Method::BGS: return AccelPolicy::none();
    case Method::MpeGS:
    case Method::MpeBGS: return AccelPolicy::every();
    case Method::MpeCycleGS:
    case Method::MpeCycleBGS: return AccelPolicy::cycle(cycle_length);
  }
  return AccelPolicy::none();
}

}  // namespace mmslcp
