#pragma once

// Registry of named kernel families. Each family has a typed parameter
// schema with defaults; configs refer to families by these names.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kuniv/kernels.hpp"

namespace kuniv {

enum class ParamType { Number, Integer, Text, NumberList };

using FamilyParam = std::variant<double, std::int64_t, std::string, std::vector<double>>;
using FamilyParams = std::map<std::string, FamilyParam>;

struct ParamDef {
  std::string_view name;
  ParamType type;
  FamilyParam default_value;
  std::string_view doc;
};

struct FamilyInfo {
  std::string_view name;
  std::string_view doc;
  std::vector<ParamDef> params;
};

std::span<const FamilyInfo> kernel_families();

/// nullptr for unknown names.
const FamilyInfo* find_family(std::string_view name);

/// Fills defaults and checks value ranges. Throws UnknownFamily or
/// InvalidValue (message names the offending parameter).
FamilyParams complete_params(std::string_view family, const FamilyParams& given);

/// Builds the kernel; params are completed first.
KernelSpec build_kernel(std::string_view family, const FamilyParams& params);

}  // namespace kuniv
