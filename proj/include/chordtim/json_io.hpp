#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chordtim/analysis.hpp"
#include "chordtim/converse.hpp"
#include "chordtim/demand.hpp"
#include "chordtim/onedim.hpp"
#include "chordtim/region.hpp"
#include "chordtim/scheduler.hpp"
#include "chordtim/topology.hpp"

namespace chordtim {

using Json = nlohmann::ordered_json;

// Parsing. Structural problems raise ParseError; semantic ones (range,
// duplicates, missing channels) raise ValidationError.

/// {"sources": M, "destinations": N, "edges": [[source, destination], ...]}
TopologyGraph parse_topology(std::string_view text);
TopologyGraph topology_from_json(const Json& j);

/// [[source, destination], ...]; validated against `g`.
MessageSet message_set_from_json(const Json& j, const TopologyGraph& g);

/// Either an array of "p/q" strings in the canonical order of `ms`, or an
/// array of [[source, destination], "p/q"] pairs. Numbers are rejected.
RateTuple rates_from_json(const Json& j, const MessageSet& ms);

/// {"source_order": [...], "destination_order": [...]}
LineLayout layout_from_json(const Json& j);

/// {"slots": [{"messages": [[i, j], ...], "weight": "p/q"}], "total_weight": "p/q"}
Schedule schedule_from_json(const Json& j);

Json parse_json_text(std::string_view text);

// Serialization. Key order is fixed; output is deterministic.

Json to_json(const TopologyGraph& g);
Json to_json(const Message& m);
Json to_json(const MessageSet& ms);
Json to_json(const Rational& r);
Json to_json(const ChordlessCycleWitness& w);
Json to_json(const LineLayout& layout);
Json to_json(const RegionPolytope& rp);
Json to_json(const std::vector<PolytopeVertex>& vertices);
Json to_json(const Schedule& s);
Json to_json(const SuboptimalityCertificate& c);
Json to_json(const CliqueAcyclicityReport& r);
Json to_json(const ConvexityReport& r);

/// Rates in canonical order of `ms` as strings.
Json rates_to_json(const RateTuple& r, const MessageSet& ms);

std::string serialize_topology(const TopologyGraph& g);

}  // namespace chordtim
