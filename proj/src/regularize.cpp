#include "flowtype/regularize.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "flowtype/detail/union_find.hpp"

namespace flowtype {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct WorkEdge {
  std::string id;
  std::size_t tail = kNone;
  std::size_t head = kNone;
  Rational cap;
  bool alive = true;
  Provenance prov;

  bool internal() const { return tail != kNone && head != kNone; }
};

struct WorkVertex {
  std::string id;
  std::vector<std::size_t> rot;  // clockwise incident edges
  bool alive = true;
};

class WorkGraph {
 public:
  std::vector<WorkVertex> vertices;
  std::vector<WorkEdge> edges;
  std::vector<std::string> warnings;

  explicit WorkGraph(const PlaneGraph& pg) {
    const FlowNetwork& net = pg.net;
    for (VertexIndex v = 0; v < net.vertex_count(); ++v) {
      vertices.push_back({net.vertex_id(v), {pg.rotation[v].begin(), pg.rotation[v].end()}, true});
      used_vertex_ids_.insert(net.vertex_id(v));
    }
    for (const Edge& e : net.edges()) {
      WorkEdge w;
      w.id = e.id;
      w.tail = e.tail == kNoVertex ? kNone : e.tail;
      w.head = e.head == kNoVertex ? kNone : e.head;
      w.cap = net.to_rational(e.cap);
      w.prov = {"original", {e.id}};
      edges.push_back(std::move(w));
      used_edge_ids_.insert(e.id);
    }
  }

  std::size_t degree(std::size_t v) const { return vertices[v].rot.size(); }

  std::string fresh_vertex_id(const std::string& base) { return fresh(base, used_vertex_ids_); }
  std::string fresh_edge_id(const std::string& base) { return fresh(base, used_edge_ids_); }

  std::size_t add_vertex(const std::string& base) {
    vertices.push_back({fresh_vertex_id(base), {}, true});
    return vertices.size() - 1;
  }

  std::size_t add_edge(const std::string& base, std::size_t tail, std::size_t head, Rational cap, Provenance prov) {
    WorkEdge w;
    w.id = fresh_edge_id(base);
    w.tail = tail;
    w.head = head;
    w.cap = cap;
    w.prov = std::move(prov);
    edges.push_back(std::move(w));
    return edges.size() - 1;
  }

  void replace_in_rotation(std::size_t v, std::size_t old_edge, std::size_t new_edge) {
    auto& rot = vertices[v].rot;
    *std::find(rot.begin(), rot.end(), old_edge) = new_edge;
  }

  void erase_from_rotation(std::size_t v, std::size_t edge) {
    auto& rot = vertices[v].rot;
    rot.erase(std::find(rot.begin(), rot.end(), edge));
  }

  void kill_edge(std::size_t e) {
    edges[e].alive = false;
    if (edges[e].tail != kNone) erase_from_rotation(edges[e].tail, e);
    if (edges[e].head != kNone) erase_from_rotation(edges[e].head, e);
  }

  std::size_t find_arc(std::size_t tail, std::size_t head, std::size_t except) const {
    for (std::size_t e : vertices[tail].rot)
      if (e != except && edges[e].tail == tail && edges[e].head == head) return e;
    return kNone;
  }

 private:
  static std::string fresh(const std::string& base, std::set<std::string>& used) {
    std::string id = base;
    for (int i = 2; used.count(id); ++i) id = base + "~" + std::to_string(i);
    used.insert(id);
    return id;
  }

  std::set<std::string> used_vertex_ids_;
  std::set<std::string> used_edge_ids_;
};

void absorb(Provenance& into, const Provenance& from, const std::string& kind) {
  into.kind = kind;
  into.sources.insert(into.sources.end(), from.sources.begin(), from.sources.end());
  std::sort(into.sources.begin(), into.sources.end());
  into.sources.erase(std::unique(into.sources.begin(), into.sources.end()), into.sources.end());
}

/// Bypasses vertices with one edge in and one out until none is left.
void smooth(WorkGraph& g) {
  std::deque<std::size_t> work;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) work.push_back(v);
  while (!work.empty()) {
    const std::size_t v = work.front();
    work.pop_front();
    WorkVertex& vert = g.vertices[v];
    if (!vert.alive) continue;
    if (g.degree(v) == 0) {
      vert.alive = false;
      g.warnings.push_back("vertex '" + vert.id + "' has no edges and was dropped");
      continue;
    }
    if (g.degree(v) != 2) continue;
    std::size_t in = vert.rot[0], out = vert.rot[1];
    if (g.edges[in].head != v) std::swap(in, out);
    if (g.edges[in].head != v || g.edges[out].tail != v) continue;  // both in or both out
    WorkEdge& ein = g.edges[in];
    WorkEdge& eout = g.edges[out];
    if (ein.tail == kNone && eout.head == kNone) continue;  // nothing to bypass into

    const Rational cap = std::min(ein.cap, eout.cap);
    if (ein.tail == kNone) {
      // Input edge moves onto the far end of the outgoing edge.
      const std::size_t y = eout.head;
      absorb(ein.prov, eout.prov, "smoothed");
      ein.cap = cap;
      ein.head = y;
      g.replace_in_rotation(y, out, in);
      eout.alive = false;
      vert.alive = false;
      work.push_back(y);
      continue;
    }
    if (eout.head == kNone) {
      const std::size_t x = ein.tail;
      absorb(eout.prov, ein.prov, "smoothed");
      eout.cap = cap;
      eout.tail = x;
      g.replace_in_rotation(x, in, out);
      ein.alive = false;
      vert.alive = false;
      work.push_back(x);
      continue;
    }
    const std::size_t x = ein.tail, y = eout.head;
    vert.alive = false;
    if (x == y) {
      // x -> v -> x carries only circulation.
      ein.alive = false;
      eout.alive = false;
      g.erase_from_rotation(x, in);
      g.erase_from_rotation(x, out);
      work.push_back(x);
      continue;
    }
    absorb(ein.prov, eout.prov, "smoothed");
    ein.cap = cap;
    ein.head = y;
    g.replace_in_rotation(y, out, in);
    eout.alive = false;
    const std::size_t parallel = g.find_arc(x, y, in);
    if (parallel != kNone) {
      WorkEdge& keep = g.edges[parallel];
      keep.cap = keep.cap + ein.cap;
      absorb(keep.prov, ein.prov, "merged");
      g.kill_edge(in);
    }
    work.push_back(x);
    work.push_back(y);
  }
}

/// Replaces v by a directed ring, one ring vertex per incident edge in
/// rotation order.
void expand_to_ring(WorkGraph& g, std::size_t v) {
  const std::vector<std::size_t> rot = g.vertices[v].rot;
  const std::string base = g.vertices[v].id;
  const std::size_t d = rot.size();
  Rational total;
  for (std::size_t e : rot) total = total + g.edges[e].cap;

  std::vector<std::size_t> ring(d);
  for (std::size_t i = 0; i < d; ++i) ring[i] = g.add_vertex(base + "#" + std::to_string(i));
  std::vector<std::size_t> arcs(d);
  for (std::size_t i = 0; i < d; ++i) {
    arcs[i] = g.add_edge(base + "#ring" + std::to_string(i), ring[i], ring[(i + 1) % d], total,
                         Provenance{"ring", {base}});
  }
  for (std::size_t i = 0; i < d; ++i) {
    WorkEdge& e = g.edges[rot[i]];
    if (e.tail == v) e.tail = ring[i];
    if (e.head == v) e.head = ring[i];
    // Seen from ring vertex i: the original edge points away from the ring,
    // the next ring vertex lies clockwise of it, the previous one beyond.
    g.vertices[ring[i]].rot = {rot[i], arcs[i], arcs[(i + d - 1) % d]};
  }
  g.vertices[v].alive = false;
  g.vertices[v].rot.clear();
}

/// Attaches a zero-capacity 3-regular gadget to v through one new edge,
/// placed after the last entry of v's rotation.
void attach_stub(WorkGraph& g, std::size_t v, std::size_t serial) {
  const std::string base = g.vertices[v].id + "#stub" + std::to_string(serial);
  const Provenance prov{"stub", {g.vertices[v].id}};
  // K4 on p, q, r, t with the edge p-q subdivided by s; s hangs off v.
  const std::size_t s = g.add_vertex(base + "s"), p = g.add_vertex(base + "p"), q = g.add_vertex(base + "q"),
                    r = g.add_vertex(base + "r"), t = g.add_vertex(base + "t");
  const Rational zero;
  const std::size_t sv = g.add_edge(base + ".sv", s, v, zero, prov);
  const std::size_t ps = g.add_edge(base + ".ps", p, s, zero, prov);
  const std::size_t sq = g.add_edge(base + ".sq", s, q, zero, prov);
  const std::size_t qr = g.add_edge(base + ".qr", q, r, zero, prov);
  const std::size_t rp = g.add_edge(base + ".rp", r, p, zero, prov);
  const std::size_t pt = g.add_edge(base + ".pt", p, t, zero, prov);
  const std::size_t qt = g.add_edge(base + ".qt", q, t, zero, prov);
  const std::size_t tr = g.add_edge(base + ".tr", t, r, zero, prov);
  g.vertices[s].rot = {sv, sq, ps};
  g.vertices[p].rot = {ps, pt, rp};
  g.vertices[q].rot = {qr, qt, sq};
  g.vertices[r].rot = {rp, tr, qr};
  g.vertices[t].rot = {pt, qt, tr};
  g.vertices[v].rot.push_back(sv);
}

/// Raises a degree-1 vertex v to degree 3 with one zero-capacity gadget: K4
/// on a, b, c, d minus the edge a-d, with a and d joined to v.
void attach_pair_stub(WorkGraph& g, std::size_t v) {
  const std::string base = g.vertices[v].id + "#pair";
  const Provenance prov{"stub", {g.vertices[v].id}};
  const std::size_t a = g.add_vertex(base + "a"), b = g.add_vertex(base + "b"), c = g.add_vertex(base + "c"),
                    d = g.add_vertex(base + "d");
  const Rational zero;
  const std::size_t va = g.add_edge(base + ".va", v, a, zero, prov);
  const std::size_t dv = g.add_edge(base + ".dv", d, v, zero, prov);
  const std::size_t ab = g.add_edge(base + ".ab", a, b, zero, prov);
  const std::size_t ac = g.add_edge(base + ".ac", a, c, zero, prov);
  const std::size_t bc = g.add_edge(base + ".bc", b, c, zero, prov);
  const std::size_t bd = g.add_edge(base + ".bd", b, d, zero, prov);
  const std::size_t cd = g.add_edge(base + ".cd", c, d, zero, prov);
  // Drawn with a and d left and right above v, b on top and c between.
  g.vertices[a].rot = {va, ab, ac};
  g.vertices[b].rot = {bd, bc, ab};
  g.vertices[c].rot = {cd, ac, bc};
  g.vertices[d].rot = {dv, cd, bd};
  g.vertices[v].rot.push_back(va);
  g.vertices[v].rot.push_back(dv);
}

std::vector<std::size_t> two_cycle_ends_to_expand(const WorkGraph& g) {
  std::set<std::pair<std::size_t, std::size_t>> arcs;
  for (const WorkEdge& e : g.edges)
    if (e.alive && e.internal()) arcs.insert({e.tail, e.head});
  std::set<std::size_t> chosen;
  for (const auto& [u, v] : arcs) {
    if (u > v || !arcs.count({v, u})) continue;
    if (chosen.count(u) || chosen.count(v)) continue;
    chosen.insert(g.degree(v) > g.degree(u) ? v : u);
  }
  return {chosen.begin(), chosen.end()};
}

PlaneGraph emit(const WorkGraph& g, std::int64_t scale, const std::string& name) {
  NetworkSpec spec;
  spec.name = name;
  spec.scale_hint = scale;
  for (const WorkVertex& v : g.vertices)
    if (v.alive) spec.vertices.push_back(v.id);
  for (const WorkEdge& e : g.edges) {
    if (!e.alive) continue;
    EdgeSpec es{e.id, std::nullopt, std::nullopt, e.cap};
    if (e.tail != kNone) es.tail = g.vertices[e.tail].id;
    if (e.head != kNone) es.head = g.vertices[e.head].id;
    spec.edges.push_back(std::move(es));
  }
  PlaneGraph pg{FlowNetwork(spec), {}, {}};
  pg.rotation.resize(pg.net.vertex_count());
  for (const WorkVertex& v : g.vertices) {
    if (!v.alive) continue;
    auto& rot = pg.rotation[*pg.net.find_vertex(v.id)];
    for (std::size_t e : v.rot) rot.push_back(*pg.net.find_edge(g.edges[e].id));
  }
  return pg;
}

RegularizeResult regularize(WorkGraph g, std::int64_t scale, const std::string& name) {
  smooth(g);
  std::set<std::size_t> expand;
  for (std::size_t v : two_cycle_ends_to_expand(g)) expand.insert(v);
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (g.vertices[v].alive && g.degree(v) >= 4) expand.insert(v);
  for (std::size_t v : expand) expand_to_ring(g, v);
  const std::size_t before_stubs = g.vertices.size();
  for (std::size_t v = 0; v < before_stubs; ++v) {
    if (!g.vertices[v].alive) continue;
    if (g.degree(v) == 1) attach_pair_stub(g, v);
    if (g.degree(v) == 2) attach_stub(g, v, 0);
  }

  RegularizeResult result;
  result.graph = emit(g, scale, name);
  for (const WorkEdge& e : g.edges)
    if (e.alive) result.provenance[e.id] = e.prov;
  result.warnings = g.warnings;
  return result;
}

}  // namespace

RegularizeResult three_regularize(const PlaneGraph& pg) {
  const FaceSet faces = derive_faces(pg);
  RegularizeResult result = regularize(WorkGraph(pg), pg.net.scale(), pg.net.name() + "/3reg");

  // Carry the outer face over: darts of input outer faces keep their edge
  // id and direction, so the output outer face of each piece is the face
  // holding most of them.
  std::set<std::pair<std::string, bool>> outer_darts;
  for (const Face& f : faces.faces)
    if (f.outer)
      for (const Dart& d : f.darts) outer_darts.insert({pg.net.edge(d.edge).id, d.forward});

  PlaneGraph& out = result.graph;
  const FaceSet traced = derive_faces(out);
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> best;  // piece -> (hits, face)
  detail::UnionFind pieces(out.net.vertex_count());
  for (EdgeIndex e : out.net.internal()) pieces.unite(out.net.edge(e).tail, out.net.edge(e).head);
  for (std::size_t i = 0; i < traced.faces.size(); ++i) {
    std::size_t hits = 0;
    for (const Dart& d : traced.faces[i].darts) hits += outer_darts.count({out.net.edge(d.edge).id, d.forward});
    const Dart first = traced.faces[i].darts.front();
    const Edge& e = out.net.edge(first.edge);
    const std::size_t piece = pieces.find(e.tail);
    auto [it, inserted] = best.try_emplace(piece, hits, i);
    if (!inserted && hits > it->second.first) it->second = {hits, i};
  }
  for (const auto& [piece, choice] : best) {
    if (choice.first == 0) continue;
    for (EdgeIndex e : traced.faces[choice.second].edges()) out.outer_face.push_back(e);
  }
  std::sort(out.outer_face.begin(), out.outer_face.end());
  return result;
}

RegularizeResult three_regularize(const FlowNetwork& net) {
  PlaneGraph pg{net, std::vector<std::vector<EdgeIndex>>(net.vertex_count()), {}};
  for (VertexIndex v = 0; v < net.vertex_count(); ++v) {
    auto& rot = pg.rotation[v];
    rot.assign(net.in_edges(v).begin(), net.in_edges(v).end());
    rot.insert(rot.end(), net.out_edges(v).begin(), net.out_edges(v).end());
  }
  RegularizeResult result = regularize(WorkGraph(pg), net.scale(), net.name() + "/3reg");
  return result;
}

}  // namespace flowtype
