#pragma once

#include <json.hpp>

#include "kuniv/classify.hpp"
#include "kuniv/config.hpp"
#include "kuniv/probe.hpp"

namespace kuniv {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "kuniv-report/1";

Json to_json(const Verdict& v);
Json to_json(const VerdictTriple& t);
Json to_json(const PollardReport& r);
Json to_json(const MuntzGapReport& r);
Json to_json(const ProbeReport& r);
Json to_json(const FamilyParams& params);

}  // namespace kuniv
