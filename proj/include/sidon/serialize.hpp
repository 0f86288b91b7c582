#pragma once

// JSON wire forms. Potentially large integers (counts, binomials, thresholds)
// travel as decimal strings and rationals as "p/q"; set elements and horizons
// are plain JSON numbers.

#include "sidon/bhg.hpp"
#include "sidon/density.hpp"
#include "sidon/game.hpp"
#include "sidon/points.hpp"
#include "sidon/repcount.hpp"

#include <json.hpp>

namespace sidon {

using json = nlohmann::json;

void to_json(json& j, const NaturalSet& s);
void from_json(const json& j, NaturalSet& s);
void to_json(json& j, const Params& p);
void from_json(const json& j, Params& p);
void to_json(json& j, const RepTable& t);
void to_json(json& j, const Witness& w);
void to_json(json& j, const Verdict& v);
void to_json(json& j, const Cylinder& c);
void from_json(const json& j, Cylinder& c);
void to_json(json& j, const GrowthFunction& f);
GrowthFunction growth_from_json(const json& j);
void to_json(json& j, const Round& r);
void to_json(json& j, const AuditCheck& c);
void to_json(json& j, const AuditReport& r);
void to_json(json& j, const GameSession& s);
void to_json(json& j, const PrefixDensityReport& r);
void to_json(json& j, const CountingCertificate& c);
void to_json(json& j, const PointConfig& c);
PointConfig point_config_from_json(const json& j);
void to_json(json& j, const SumGroup& g);
void to_json(json& j, const ConfigVerdict& v);
void to_json(json& j, const ExperimentReport& r);

/// Representations as nested arrays.
json representations_json(const std::vector<Representation>& reps);

/// Reads a nonnegative integer given either as a JSON number or a decimal string.
Natural natural_from_json(const json& j, const char* field);

} // namespace sidon
