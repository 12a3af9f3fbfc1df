#ifndef MMSLCP_METHODS_HPP
#define MMSLCP_METHODS_HPP

#include <array>
#include <string>
#include <string_view>

#include "mmslcp/mpe.hpp"
#include "mmslcp/splitting.hpp"

namespace mmslcp {

/// The six solver configurations compared in the benchmark, in table order.
enum class Method { GS, MpeGS, MpeCycleGS, BGS, MpeBGS, MpeCycleBGS };

inline constexpr std::array<Method, 6> kAllMethods = {
    Method::GS,  Method::MpeGS,  Method::MpeCycleGS,
    Method::BGS, Method::MpeBGS, Method::MpeCycleBGS};

std::string_view method_name(Method m);
/// Parses "GS", "MPE-GS", "MPECycle-GS", "BGS", ... (case-insensitive).
Method parse_method(std::string_view name);

SplittingKind splitting_of(Method m);
AccelPolicy policy_of(Method m, int cycle_length);

}  // namespace mmslcp

#endif  // MMSLCP_METHODS_HPP
