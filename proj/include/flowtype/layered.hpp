#pragma once

#include <string>
#include <vector>

#include "flowtype/plane.hpp"
#include "flowtype/reassembly.hpp"

namespace flowtype {

struct LayeredResult {
  ReassemblingTree tree;
  std::size_t alpha = 0;
  std::size_t k = 0;  // edge-outerplanarity of the input
  /// Which candidate construction produced the tree.
  std::string strategy;
  std::vector<std::string> warnings;
};

/// Reassembling tree guided by the edge layers of a 3-regular plane graph,
/// aiming for alpha <= 2k. Several layer-guided constructions are built and
/// the one with the smallest alpha is returned:
///  - "layer-combs": each layer's outer boundary walk as a left comb, inner
///    layers attached below outer ones
///  - "columns": every vertex hangs below a neighbour in a shallower layer;
///    the resulting columns are assembled first, then merged greedily
///  - "column-sweep": the same columns added one at a time to a growing
///    cluster, cheapest first
///  - "greedy": unconstrained greedy merging
/// A warning is recorded when alpha exceeds 2k. Throws Error unless every
/// vertex has degree 3.
LayeredResult layered_reassembling(const PlaneGraph& pg);

/// Vertex layers used by the columns construction: the shallowest layer of
/// any incident internal edge, or kNoLayer for vertices without one.
std::vector<std::size_t> vertex_layers(const PlaneGraph& pg, const LayerPartition& layers);

}  // namespace flowtype
