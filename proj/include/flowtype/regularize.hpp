#pragma once

#include <map>
#include <string>
#include <vector>

#include "flowtype/network.hpp"
#include "flowtype/plane.hpp"

namespace flowtype {

/// Where an output edge came from, in terms of input edge and vertex ids.
struct Provenance {
  /// "original", "smoothed", "merged", "ring" or "stub".
  std::string kind;
  /// Input edge ids folded into this edge; for ring and stub edges, the id of
  /// the input vertex they were built for.
  std::vector<std::string> sources;
};

struct RegularizeResult {
  PlaneGraph graph;
  std::map<std::string, Provenance> provenance;  // keyed by output edge id
  std::vector<std::string> warnings;
};

/// Rewrites the network into an equivalent one in which every vertex has
/// exactly three incident edges (dangling ones included) and no two internal
/// edges form a cycle u->v->u. Dangling edge ids are preserved.
///
///  - a vertex with one edge in and one edge out is bypassed; parallel edges
///    that result are merged and cycles through a single vertex are dropped
///  - a vertex of degree four or more, and one end of every two-edge cycle,
///    becomes a directed ring with one ring vertex per incident edge
///  - remaining vertices of degree two get a zero-capacity K4 stub, those of
///    degree one a single K4-minus-an-edge gadget joined to them twice
///  - vertices without edges are dropped with a warning
///
/// The rotation is updated locally so the result is again plane, and the
/// outer face is carried over.
RegularizeResult three_regularize(const PlaneGraph& pg);

/// Same construction for a network without an embedding; the rotation of
/// the result is arbitrary.
RegularizeResult three_regularize(const FlowNetwork& net);

}  // namespace flowtype
