#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "flowtype/network.hpp"
#include "flowtype/plane.hpp"
#include "flowtype/reassembly.hpp"
#include "flowtype/regularize.hpp"

namespace flowtype {

using Json = nlohmann::json;

Json read_json_file(const std::filesystem::path& path);
/// Two-space indentation, sorted keys, trailing newline.
std::string dump_canonical(const Json& j);

/// Accepts capacities as integers or "p" / "p/q" strings. Throws Error on
/// malformed input; invariant violations are left to validate_network.
NetworkSpec network_spec_from_json(const Json& j);
/// Parses and validates; throws Error listing every violation.
FlowNetwork network_from_json(const Json& j);
Json network_to_json(const FlowNetwork& net);

/// `embedding` holds `rotation` and optionally `outer_face`; it may be the
/// same object as the network.
PlaneGraph plane_graph_from_json(const FlowNetwork& net, const Json& embedding);
bool has_embedding(const Json& j);
Json plane_graph_to_json(const PlaneGraph& pg);

/// Entries sorted by (|A| + |B|, A, B) with ids sorted inside each set.
Json typing_to_json(const FlowNetwork& net, const Typing& t);

ReassemblingTree tree_from_json(const FlowNetwork& net, const Json& j);
Json tree_to_json(const FlowNetwork& net, const ReassemblingTree& tree);

Json stats_to_json(const EngineStats& stats);
Json layers_to_json(const FlowNetwork& net, const LayerPartition& layers);
Json provenance_to_json(const std::map<std::string, Provenance>& provenance);

}  // namespace flowtype
