#pragma once

#include <optional>

#include "flowtype/plane.hpp"

namespace flowtype {

inline constexpr std::size_t kDefaultEmbedLimit = 64;

/// Some plane embedding of the network, or nullopt when it is not planar.
/// The outer face is the face with the most edges (ties: the face holding
/// the smallest edge id). Throws Error above `vertex_limit` vertices.
std::optional<PlaneGraph> embed_small(const FlowNetwork& net, std::size_t vertex_limit = kDefaultEmbedLimit);

}  // namespace flowtype
