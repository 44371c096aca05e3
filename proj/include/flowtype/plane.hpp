#pragma once

#include <cstddef>
#include <vector>

#include "flowtype/network.hpp"

namespace flowtype {

/// A flow network with a combinatorial embedding: for every vertex the
/// clockwise cyclic order of all its incident edges (dangling ones included)
/// and the edges of the designated outer face.
struct PlaneGraph {
  FlowNetwork net;
  std::vector<std::vector<EdgeIndex>> rotation;
  /// Internal edges bounding the outer face. May be empty, in which case
  /// the outer face of each connected piece is chosen as its largest face.
  std::vector<EdgeIndex> outer_face;
};

/// Half of an internal edge, leaving `tail` when forward.
struct Dart {
  EdgeIndex edge;
  bool forward;

  std::size_t index() const { return 2 * std::size_t{edge} + (forward ? 0 : 1); }
  friend bool operator==(const Dart&, const Dart&) = default;
};

struct Face {
  std::vector<Dart> darts;  // boundary walk
  bool outer = false;

  /// Distinct edges on the boundary, ascending.
  std::vector<EdgeIndex> edges() const;
};

struct FaceSet {
  std::vector<Face> faces;
  /// dart index -> face, for darts of internal edges.
  std::vector<std::size_t> face_of_dart;
  /// Number of connected pieces that contain at least one internal edge.
  std::size_t pieces = 0;
};

/// Throws Error unless every rotation lists exactly the incident edges.
void validate_rotation(const PlaneGraph& pg);

/// Traces faces over internal edges. Dangling edges do not bound faces.
/// Throws Error("invalid embedding ...") when Euler's formula fails for a
/// piece or when the designated outer face matches no traced face.
FaceSet derive_faces(const PlaneGraph& pg);

struct LayerPartition {
  std::vector<std::vector<EdgeIndex>> layers;  // each ascending
  /// For every round, the vertices met along the outer boundary, each outer
  /// face walked from its smallest vertex id; faces in order of that id.
  std::vector<std::vector<VertexIndex>> walks;
  std::size_t k() const { return layers.size(); }
  /// Layer index of every edge; internal edges only, others kNoLayer.
  std::vector<std::size_t> layer_of_edge(const FlowNetwork& net) const;
  static constexpr std::size_t kNoLayer = static_cast<std::size_t>(-1);
};

/// Repeatedly removes every edge bordering the current outer face.
LayerPartition peel_edge_layers(const PlaneGraph& pg);

/// Number of rounds of removing all outer-face vertices with their edges.
std::size_t peel_vertex_layers(const PlaneGraph& pg);

/// True iff every vertex has total degree 3 (dangling edges included).
bool is_three_regular(const FlowNetwork& net);
/// True iff some pair of internal edges forms a cycle u->v->u.
bool has_two_edge_cycle(const FlowNetwork& net);

}  // namespace flowtype
