#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "starcount/advantage.hpp"
#include "starcount/montecarlo.hpp"

namespace starcount {

using Json = nlohmann::ordered_json;

Json to_json(const DegreeProfile& profile);
Json to_json(const StarCriterion& stars);
Json to_json(const RegimeLabel& label);
Json to_json(const AdvantageReport& report);
Json to_json(const MomentEstimate& m);
Json to_json(const MCReport& report);
Json to_json(const RatioEstimate& r);
Json to_json(const ConcentrationResult& r);

// Two-space indented text with a trailing newline. Non-finite numbers become null.
std::string dump_report(const Json& j);

}  // namespace starcount
