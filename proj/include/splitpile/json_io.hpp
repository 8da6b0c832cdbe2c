#pragma once

// JSON forms of the library's objects. Parsers throw DomainError (or the
// relevant splitpile error) on malformed payloads.

#include <json.hpp>

#include "splitpile/bijections.hpp"
#include "splitpile/motzkin.hpp"
#include "splitpile/necklace.hpp"
#include "splitpile/parking.hpp"
#include "splitpile/prufer.hpp"
#include "splitpile/sandpile.hpp"
#include "splitpile/split_graph.hpp"

namespace splitpile::json_io {

using Json = nlohmann::json;

// {"side": "clique"|"independent", "index": int}
Json vertex_to_json(VertexId v);
VertexId vertex_from_json(const Json& j);

Side parse_side(std::string_view text);
std::string_view side_name(Side side);

// {"m": int, "n": int, "sink": {...}}
Json graph_to_json(const SplitGraph& g);
SplitGraph graph_from_json(const Json& j);

// {"clique": [ints], "independent": [ints]}
Json configuration_to_json(const Configuration& c);
Configuration configuration_from_json(const Json& j);

Json odometer_to_json(const Odometer& o);

// {"shape": [ints], "rows": [[ints]]}
Json syt_to_json(const StandardYoungTableau& t);
StandardYoungTableau syt_from_json(const Json& j);

// {"necklace": "HHU", "cyclic": true}
Json necklace_to_json(const Necklace& x);
Necklace necklace_from_json(const Json& j);

// {"edges": [["v1","v5"], ...]}
Json tree_to_json(const SpanningTree& t);
SpanningTree tree_from_json(const Json& j);

// {"f": ["v5", ...], "g": ["v3", ...]}
Json pair_to_json(const PruferPair& p);
PruferPair pair_from_json(const Json& j);

// Parses "v7" (or a bare 7) into a global label.
std::size_t parse_label(const Json& j);

// {"tiers": [m_1, ...], "requirements": [[...tier 2...], ...]}
Json instance_to_json(const TieredParkingInstance& p);
TieredParkingInstance instance_from_json(const Json& j);

// Sequence of tier labels, front of the street first.
Json street_to_json(const StreetArrangement& street);

// {"config": ..., "word": "...", "sink": ...}
Json conversion_record(const SplitGraph& g, const Configuration& c, const MotzkinWord& w);

}  // namespace splitpile::json_io
