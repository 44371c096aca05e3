#include "flowtype/plane.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "flowtype/detail/union_find.hpp"

namespace flowtype {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

VertexIndex origin(const FlowNetwork& net, Dart d) {
  return d.forward ? net.edge(d.edge).tail : net.edge(d.edge).head;
}

VertexIndex target(const FlowNetwork& net, Dart d) {
  return d.forward ? net.edge(d.edge).head : net.edge(d.edge).tail;
}

struct Traced {
  std::vector<Face> faces;
  std::vector<std::size_t> face_of_dart;  // kNone for inactive darts
  std::vector<std::size_t> piece_of_face;
  std::vector<std::size_t> piece_of_vertex;  // kNone for vertices without active edges
  std::size_t pieces = 0;
};

/// Face tracing over the active internal edges; rotations are restricted to
/// those edges.
Traced trace(const PlaneGraph& pg, const std::vector<char>& active) {
  const FlowNetwork& net = pg.net;
  const std::size_t n = net.vertex_count();
  std::vector<std::vector<EdgeIndex>> rot(n);
  std::vector<std::size_t> pos(2 * net.edge_count(), kNone);  // dart -> position at its origin
  for (VertexIndex v = 0; v < n; ++v) {
    for (EdgeIndex e : pg.rotation[v]) {
      if (!active[e]) continue;
      const Dart d{e, net.edge(e).tail == v};
      pos[d.index()] = rot[v].size();
      rot[v].push_back(e);
    }
  }

  Traced t;
  t.face_of_dart.assign(2 * net.edge_count(), kNone);
  std::size_t active_darts = 0;
  for (EdgeIndex e = 0; e < net.edge_count(); ++e) active_darts += active[e] ? 2 : 0;

  for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
    if (!active[e]) continue;
    for (bool forward : {true, false}) {
      const Dart start{e, forward};
      if (t.face_of_dart[start.index()] != kNone) continue;
      const std::size_t id = t.faces.size();
      t.faces.emplace_back();
      Dart d = start;
      do {
        if (t.face_of_dart[d.index()] != kNone || t.faces[id].darts.size() > active_darts) {
          throw Error("invalid embedding: face traversal does not close");
        }
        t.face_of_dart[d.index()] = id;
        t.faces[id].darts.push_back(d);
        const VertexIndex w = target(net, d);
        const Dart back{d.edge, !d.forward};
        const auto& around = rot[w];
        const EdgeIndex next = around[(pos[back.index()] + 1) % around.size()];
        d = Dart{next, net.edge(next).tail == w};
      } while (!(d == start));
    }
  }

  detail::UnionFind uf(n);
  for (EdgeIndex e = 0; e < net.edge_count(); ++e)
    if (active[e]) uf.unite(net.edge(e).tail, net.edge(e).head);
  std::vector<std::size_t> piece_of_root(n, kNone);
  t.piece_of_vertex.assign(n, kNone);
  for (VertexIndex v = 0; v < n; ++v) {
    if (rot[v].empty()) continue;
    std::size_t& p = piece_of_root[uf.find(v)];
    if (p == kNone) p = t.pieces++;
    t.piece_of_vertex[v] = p;
  }
  for (const Face& f : t.faces) t.piece_of_face.push_back(t.piece_of_vertex[origin(net, f.darts.front())]);
  return t;
}

void check_euler(const PlaneGraph& pg, const std::vector<char>& active, const Traced& t) {
  std::vector<long> euler(t.pieces, 0);
  for (VertexIndex v = 0; v < pg.net.vertex_count(); ++v)
    if (t.piece_of_vertex[v] != kNone) ++euler[t.piece_of_vertex[v]];
  for (EdgeIndex e = 0; e < pg.net.edge_count(); ++e)
    if (active[e]) --euler[t.piece_of_vertex[pg.net.edge(e).tail]];
  for (std::size_t p : t.piece_of_face) ++euler[p];
  for (VertexIndex v = 0; v < pg.net.vertex_count(); ++v) {
    const std::size_t p = t.piece_of_vertex[v];
    if (p != kNone && euler[p] != 2) {
      throw Error("invalid embedding: Euler check V - E + F = " + std::to_string(euler[p]) +
                  " for the piece containing vertex '" + pg.net.vertex_id(v) + "'");
    }
  }
}

std::vector<char> internal_mask(const FlowNetwork& net) {
  std::vector<char> active(net.edge_count(), 0);
  for (EdgeIndex e : net.internal()) active[e] = 1;
  return active;
}

}  // namespace

std::vector<EdgeIndex> Face::edges() const {
  std::vector<EdgeIndex> out;
  for (const Dart& d : darts) out.push_back(d.edge);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void validate_rotation(const PlaneGraph& pg) {
  const FlowNetwork& net = pg.net;
  if (pg.rotation.size() != net.vertex_count()) throw Error("rotation must list every vertex");
  for (VertexIndex v = 0; v < net.vertex_count(); ++v) {
    std::vector<EdgeIndex> expected(net.in_edges(v).begin(), net.in_edges(v).end());
    expected.insert(expected.end(), net.out_edges(v).begin(), net.out_edges(v).end());
    std::vector<EdgeIndex> listed = pg.rotation[v];
    std::sort(expected.begin(), expected.end());
    std::sort(listed.begin(), listed.end());
    if (expected != listed) {
      throw Error("rotation of vertex '" + net.vertex_id(v) + "' does not list exactly its incident edges");
    }
  }
  for (EdgeIndex e : pg.outer_face) {
    if (e >= net.edge_count() || !net.edge(e).is_internal()) {
      throw Error("outer face may only name internal edges");
    }
  }
}

FaceSet derive_faces(const PlaneGraph& pg) {
  validate_rotation(pg);
  const auto active = internal_mask(pg.net);
  Traced t = trace(pg, active);
  check_euler(pg, active, t);

  // Designated outer edges, grouped by piece.
  std::vector<std::vector<EdgeIndex>> listed(t.pieces);
  for (EdgeIndex e : pg.outer_face) listed[t.piece_of_vertex[pg.net.edge(e).tail]].push_back(e);
  for (auto& l : listed) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }

  std::vector<std::size_t> chosen(t.pieces, kNone);
  std::vector<std::vector<EdgeIndex>> face_edges;
  for (const Face& f : t.faces) face_edges.push_back(f.edges());
  for (std::size_t i = 0; i < t.faces.size(); ++i) {
    const std::size_t p = t.piece_of_face[i];
    if (!listed[p].empty()) {
      if (face_edges[i] == listed[p] && chosen[p] == kNone) chosen[p] = i;
      continue;
    }
    // Largest face; ties go to the face holding the smallest edge id.
    const std::size_t c = chosen[p];
    if (c == kNone || face_edges[i].size() > face_edges[c].size() ||
        (face_edges[i].size() == face_edges[c].size() && face_edges[i].front() < face_edges[c].front())) {
      chosen[p] = i;
    }
  }
  for (std::size_t p = 0; p < t.pieces; ++p) {
    if (chosen[p] == kNone) throw Error("invalid embedding: designated outer face matches no traced face");
    t.faces[chosen[p]].outer = true;
  }
  return FaceSet{std::move(t.faces), std::move(t.face_of_dart), t.pieces};
}

std::vector<std::size_t> LayerPartition::layer_of_edge(const FlowNetwork& net) const {
  std::vector<std::size_t> out(net.edge_count(), kNoLayer);
  for (std::size_t i = 0; i < layers.size(); ++i)
    for (EdgeIndex e : layers[i]) out[e] = i;
  return out;
}

namespace {

/// Shared state for both peeling variants: face labels live in a union-find
/// whose class containing `outer` is the outer region.
struct Peeler {
  const PlaneGraph& pg;
  std::vector<char> active;
  detail::UnionFind regions;
  std::size_t outer;
  std::vector<std::size_t> dart_label;
  Traced current;
  std::vector<char> face_is_outer;

  explicit Peeler(const PlaneGraph& g) : pg(g), active(internal_mask(g.net)) {
    const FaceSet fs = derive_faces(pg);
    outer = regions.add();
    dart_label.assign(2 * pg.net.edge_count(), kNone);
    current.faces = fs.faces;
    current.face_of_dart = fs.face_of_dart;
    label_faces(/*first=*/true);
  }

  /// Gives every current face a fresh label linked to its darts' old labels.
  void label_faces(bool first) {
    face_is_outer.assign(current.faces.size(), 0);
    for (std::size_t i = 0; i < current.faces.size(); ++i) {
      const std::size_t label = regions.add();
      if (first && current.faces[i].outer) regions.unite(outer, label);
      for (const Dart& d : current.faces[i].darts) {
        if (dart_label[d.index()] != kNone) regions.unite(label, dart_label[d.index()]);
        dart_label[d.index()] = label;
      }
    }
    for (std::size_t i = 0; i < current.faces.size(); ++i) {
      const Dart d = current.faces[i].darts.front();
      face_is_outer[i] = regions.find(dart_label[d.index()]) == regions.find(outer);
    }
  }

  void retrace() {
    current = trace(pg, active);
    label_faces(false);
  }

  bool on_outer(EdgeIndex e) const {
    return face_is_outer[current.face_of_dart[Dart{e, true}.index()]] ||
           face_is_outer[current.face_of_dart[Dart{e, false}.index()]];
  }

  void remove(EdgeIndex e) {
    regions.unite(dart_label[Dart{e, true}.index()], dart_label[Dart{e, false}.index()]);
    active[e] = 0;
  }

  bool any_active() const { return std::find(active.begin(), active.end(), 1) != active.end(); }
};

std::vector<VertexIndex> outer_walk(const Peeler& peeler) {
  const FlowNetwork& net = peeler.pg.net;
  std::vector<std::vector<VertexIndex>> walks;
  for (std::size_t i = 0; i < peeler.current.faces.size(); ++i) {
    if (!peeler.face_is_outer[i]) continue;
    std::vector<VertexIndex> walk;
    for (const Dart& d : peeler.current.faces[i].darts) walk.push_back(origin(net, d));
    auto smallest = std::min_element(walk.begin(), walk.end(), [&](VertexIndex a, VertexIndex b) {
      return net.vertex_id(a) < net.vertex_id(b);
    });
    std::rotate(walk.begin(), smallest, walk.end());
    walks.push_back(std::move(walk));
  }
  std::sort(walks.begin(), walks.end(), [&](const auto& a, const auto& b) {
    return net.vertex_id(a.front()) < net.vertex_id(b.front());
  });
  std::vector<VertexIndex> out;
  for (const auto& w : walks) out.insert(out.end(), w.begin(), w.end());
  return out;
}

}  // namespace

LayerPartition peel_edge_layers(const PlaneGraph& pg) {
  Peeler peeler(pg);
  LayerPartition out;
  bool first = true;
  while (peeler.any_active()) {
    if (!first) peeler.retrace();
    first = false;
    std::vector<EdgeIndex> layer;
    for (EdgeIndex e = 0; e < pg.net.edge_count(); ++e)
      if (peeler.active[e] && peeler.on_outer(e)) layer.push_back(e);
    if (layer.empty()) throw std::logic_error("peeling found no outer edges while edges remain");
    out.walks.push_back(outer_walk(peeler));
    for (EdgeIndex e : layer) peeler.remove(e);
    out.layers.push_back(std::move(layer));
  }
  return out;
}

std::size_t peel_vertex_layers(const PlaneGraph& pg) {
  const FlowNetwork& net = pg.net;
  Peeler peeler(pg);
  const std::size_t n = net.vertex_count();
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> active_degree(n, 0);
  for (EdgeIndex e : net.internal()) {
    ++active_degree[net.edge(e).tail];
    ++active_degree[net.edge(e).head];
  }
  // Region label of vertices left without internal edges.
  std::vector<std::size_t> isolated_label(n, kNone);
  for (VertexIndex v = 0; v < n; ++v)
    if (active_degree[v] == 0) isolated_label[v] = peeler.outer;

  std::size_t alive_count = n;
  std::size_t rounds = 0;
  bool first = true;
  while (alive_count > 0) {
    if (!first) peeler.retrace();
    first = false;
    std::vector<VertexIndex> doomed;
    for (VertexIndex v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      bool outer = false;
      if (active_degree[v] == 0) {
        outer = peeler.regions.find(isolated_label[v]) == peeler.regions.find(peeler.outer);
      } else {
        // Every face around v holds an edge of v.
        for (EdgeIndex e : pg.rotation[v])
          if (peeler.active[e] && peeler.on_outer(e)) outer = true;
      }
      if (outer) doomed.push_back(v);
    }
    if (doomed.empty()) throw std::logic_error("vertex peeling found no outer vertices");
    std::vector<VertexIndex> touched;
    for (VertexIndex v : doomed) {
      alive[v] = 0;
      --alive_count;
      for (EdgeIndex e : pg.rotation[v]) {
        if (!peeler.active[e]) continue;
        const VertexIndex other = net.edge(e).tail == v ? net.edge(e).head : net.edge(e).tail;
        isolated_label[other] = peeler.dart_label[Dart{e, true}.index()];
        peeler.remove(e);
        --active_degree[v];
        --active_degree[other];
        touched.push_back(other);
      }
    }
    for (VertexIndex v : touched)
      if (active_degree[v] != 0) isolated_label[v] = kNone;
    ++rounds;
  }
  return rounds;
}

bool is_three_regular(const FlowNetwork& net) {
  for (VertexIndex v = 0; v < net.vertex_count(); ++v)
    if (net.degree(v) != 3) return false;
  return true;
}

bool has_two_edge_cycle(const FlowNetwork& net) {
  std::set<std::pair<VertexIndex, VertexIndex>> arcs;
  for (EdgeIndex e : net.internal()) arcs.insert({net.edge(e).tail, net.edge(e).head});
  for (const auto& [u, v] : arcs)
    if (arcs.count({v, u})) return true;
  return false;
}

}  // namespace flowtype
