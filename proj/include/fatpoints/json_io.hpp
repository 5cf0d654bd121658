#pragma once

#include <json.hpp>

#include "fatpoints/cohom.hpp"
#include "fatpoints/mu.hpp"
#include "fatpoints/oracle.hpp"
#include "fatpoints/resolution.hpp"

namespace fatpoints {

nlohmann::json to_json(const CohomologySummary& s);
nlohmann::json to_json(const MuStep& step);
nlohmann::json to_json(const MuReport& report);
/// Keys: r, mults, alpha, beta, degenerate, hilbert, generators, syzygies, display.
nlohmann::json to_json(const ResolutionSummary& s);
/// The resolution keys plus prime, seed, trials, per_trial, disagreements.
nlohmann::json to_json(const OracleReport& report);

/// Degree tables are JSON objects keyed by the decimal degree.
nlohmann::json table_json(const DegreeTable& table);
DegreeTable table_from_json(const nlohmann::json& j);

}  // namespace fatpoints
