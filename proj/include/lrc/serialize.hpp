#pragma once

#include <json.hpp>

#include "lrc/analysis.hpp"
#include "lrc/curves.hpp"
#include "lrc/grid.hpp"

namespace lrc {

using json = nlohmann::ordered_json;

json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const json& j);

json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const json& j);

json blueprint_to_json(const CodeBlueprint& bp);
CodeBlueprint blueprint_from_json(const json& j);

json word_to_json(const ErasableWord& w);
ErasableWord word_from_json(const json& j, const FieldPtr& field);

json distance_to_json(const DistanceResult& d);
json bound_report_to_json(const BoundReport& b);

/// Full analysis report; deterministic key order, timings kept under one
/// key so reports are byte-identical modulo "timings".
json analysis_report(const CodeBlueprint& bp, const LinearCode& code, const DistanceResult& d,
                     const BoundReport* bound, const json& config, std::uint64_t seed,
                     double elapsed_seconds);

}  // namespace lrc
