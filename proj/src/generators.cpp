#include "flowtype/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <set>

#include "flowtype/detail/union_find.hpp"

namespace flowtype {

namespace {

std::string numbered(const char* prefix, std::size_t a) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%04zu", prefix, a);
  return buf;
}

std::string numbered(const char* prefix, std::size_t a, std::size_t b) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s%02zu_%04zu", prefix, a, b);
  return buf;
}

Rational random_cap(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return Rational(std::uniform_int_distribution<std::int64_t>(lo, hi)(rng));
}

Point polar(Point centre, double radius, double angle) {
  return {centre.x + radius * std::cos(angle), centre.y + radius * std::sin(angle)};
}

}  // namespace

// --- builder ---------------------------------------------------------------

void PlaneBuilder::vertex(const std::string& id, Point p) {
  spec_.vertices.push_back(id);
  points_.emplace_back(id, p);
}

void PlaneBuilder::edge(const std::string& id, const std::string& tail, const std::string& head, Rational cap) {
  spec_.edges.push_back({id, tail, head, cap});
}

void PlaneBuilder::input(const std::string& id, const std::string& head, Rational cap, double angle) {
  spec_.edges.push_back({id, std::nullopt, head, cap});
  stubs_.push_back({id, {head, angle}});
}

void PlaneBuilder::output(const std::string& id, const std::string& tail, Rational cap, double angle) {
  spec_.edges.push_back({id, tail, std::nullopt, cap});
  stubs_.push_back({id, {tail, angle}});
}

PlaneGraph PlaneBuilder::build() const {
  NetworkSpec spec = spec_;
  spec.name = name_;
  PlaneGraph pg{FlowNetwork(spec), {}, {}};
  const FlowNetwork& net = pg.net;
  std::vector<Point> at(net.vertex_count());
  for (const auto& [id, p] : points_) at[*net.find_vertex(id)] = p;
  std::vector<double> stub_angle(net.edge_count(), 0);
  for (const auto& [id, stub] : stubs_) stub_angle[*net.find_edge(id)] = stub.angle;

  pg.rotation.resize(net.vertex_count());
  for (VertexIndex v = 0; v < net.vertex_count(); ++v) {
    std::vector<std::pair<double, EdgeIndex>> around;
    auto angle_of = [&](EdgeIndex e) {
      const Edge& edge = net.edge(e);
      if (!edge.is_internal()) return stub_angle[e];
      const VertexIndex w = edge.tail == v ? edge.head : edge.tail;
      return std::atan2(at[w].y - at[v].y, at[w].x - at[v].x);
    };
    for (EdgeIndex e : net.in_edges(v)) around.push_back({angle_of(e), e});
    for (EdgeIndex e : net.out_edges(v)) around.push_back({angle_of(e), e});
    // Clockwise means decreasing angle.
    std::sort(around.begin(), around.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [angle, e] : around) pg.rotation[v].push_back(e);
  }

  const FaceSet faces = derive_faces(pg);
  detail::UnionFind pieces(net.vertex_count());
  for (EdgeIndex e : net.internal()) pieces.unite(net.edge(e).tail, net.edge(e).head);
  std::map<std::size_t, std::pair<double, std::size_t>> largest;  // piece -> (area, face)
  for (std::size_t i = 0; i < faces.faces.size(); ++i) {
    double area = 0;
    const auto& darts = faces.faces[i].darts;
    for (const Dart& d : darts) {
      const Edge& e = net.edge(d.edge);
      const Point p = at[d.forward ? e.tail : e.head];
      const Point q = at[d.forward ? e.head : e.tail];
      area += p.x * q.y - q.x * p.y;
    }
    area = std::fabs(area) / 2;
    const Edge& first = net.edge(darts.front().edge);
    const std::size_t piece = pieces.find(first.tail);
    auto [it, inserted] = largest.try_emplace(piece, area, i);
    if (!inserted && area > it->second.first) it->second = {area, i};
  }
  for (const auto& [piece, choice] : largest)
    for (EdgeIndex e : faces.faces[choice.second].edges()) pg.outer_face.push_back(e);
  std::sort(pg.outer_face.begin(), pg.outer_face.end());
  return pg;
}

// --- fixtures ----------------------------------------------------------------

namespace fixtures {

NetworkSpec chain() {
  return NetworkSpec{"N_chain",
                     {"v1", "v2"},
                     {{"a", std::nullopt, "v1", Rational(5)},
                      {"e", "v1", "v2", Rational(3)},
                      {"b", "v2", std::nullopt, Rational(4)}}};
}

NetworkSpec triangle() {
  return NetworkSpec{"N_tri",
                     {"v1", "v2", "v3"},
                     {{"a", std::nullopt, "v1", Rational(10)},
                      {"e12", "v1", "v2", Rational(2)},
                      {"e23", "v2", "v3", Rational(2)},
                      {"e13", "v1", "v3", Rational(1)},
                      {"b", "v3", std::nullopt, Rational(10)}}};
}

NetworkSpec two_cycle() {
  return NetworkSpec{"N_cyc",
                     {"v1", "v2"},
                     {{"a", std::nullopt, "v1", Rational(5)},
                      {"e", "v1", "v2", Rational(3)},
                      {"e'", "v2", "v1", Rational(2)},
                      {"b", "v2", std::nullopt, Rational(4)}}};
}

NetworkSpec diamond() {
  return NetworkSpec{"diamond",
                     {"s", "t", "x", "y"},
                     {{"a", std::nullopt, "s", Rational(2)},
                      {"sx", "s", "x", Rational(1)},
                      {"sy", "s", "y", Rational(1)},
                      {"xt", "x", "t", Rational(1)},
                      {"yt", "y", "t", Rational(1)},
                      {"b", "t", std::nullopt, Rational(2)}}};
}

}  // namespace fixtures

// --- plane families ------------------------------------------------------------

PlaneGraph triangle_plane(bool with_io) {
  PlaneBuilder b(with_io ? "triangle-io" : "triangle");
  b.vertex("v1", {0, 0});
  b.vertex("v2", {2, 0});
  b.vertex("v3", {1, 1.7});
  b.edge("e12", "v1", "v2", Rational(2));
  b.edge("e23", "v2", "v3", Rational(2));
  b.edge("e13", "v1", "v3", Rational(1));
  if (with_io) {
    b.input("a", "v1", Rational(10), std::atan2(-1, -1));
    b.output("b", "v3", Rational(10), std::numbers::pi / 2);
  }
  return b.build();
}

PlaneGraph prism_plane(std::size_t s, bool with_io) {
  if (s < 3) throw Error("prism needs at least 3 spokes");
  PlaneBuilder b((s == 4 ? "cube" : "prism" + std::to_string(s)) + std::string(with_io ? "-io" : ""));
  const double step = 2 * std::numbers::pi / static_cast<double>(s);
  for (std::size_t j = 0; j < s; ++j) {
    b.vertex(numbered("o", j), polar({0, 0}, 2, step * j));
    b.vertex(numbered("i", j), polar({0, 0}, 1, step * j));
  }
  for (std::size_t j = 0; j < s; ++j) {
    const std::size_t next = (j + 1) % s;
    const Rational cap(static_cast<std::int64_t>(1 + j % 3));
    if (with_io && j == 0) {
      // Subdivide the first outer and inner edges to host the interface.
      b.vertex("w_in", polar({0, 0}, 2 * std::cos(step / 2), step / 2));
      b.vertex("w_out", polar({0, 0}, std::cos(step / 2), step / 2));
      b.edge("oc0000a", numbered("o", 0), "w_in", cap);
      b.edge("oc0000b", "w_in", numbered("o", next), cap);
      b.edge("ic0000a", numbered("i", 0), "w_out", cap);
      b.edge("ic0000b", "w_out", numbered("i", next), cap);
      b.input("in", "w_in", Rational(5), step / 2);
      b.output("out", "w_out", Rational(5), step / 2 + std::numbers::pi);
    } else {
      b.edge(numbered("oc", j), numbered("o", j), numbered("o", next), cap);
      b.edge(numbered("ic", j), numbered("i", j), numbered("i", next), cap);
    }
    if (j % 2 == 0) {
      b.edge(numbered("sp", j), numbered("o", j), numbered("i", j), Rational(2));
    } else {
      b.edge(numbered("sp", j), numbered("i", j), numbered("o", j), Rational(2));
    }
  }
  return b.build();
}

PlaneGraph cube_plane() { return prism_plane(4); }

namespace {

/// Concentric cycles around `centre`, cycle 0 outermost. Spokes join cycle
/// i and i + 1 at positions of the parity of i.
void add_rings(PlaneBuilder& b, const std::string& prefix, Point centre, std::size_t k, std::size_t s,
               std::mt19937_64& rng) {
  const double step = 2 * std::numbers::pi / static_cast<double>(s);
  auto id = [&](std::size_t i, std::size_t j) { return prefix + numbered("c", i, j); };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < s; ++j) b.vertex(id(i, j), polar(centre, static_cast<double>(k - i + 1), step * j));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      b.edge(prefix + numbered("cy", i, j), id(i, j), id(i, (j + 1) % s), random_cap(rng, 1, 10));
      if (i + 1 < k && j % 2 == i % 2) {
        const bool inward = (j / 2) % 2 == 0;
        b.edge(prefix + numbered("sp", i, j), inward ? id(i, j) : id(i + 1, j), inward ? id(i + 1, j) : id(i, j),
               random_cap(rng, 1, 10));
      }
    }
  }
}

}  // namespace

PlaneGraph nested_cycles(std::size_t k, std::size_t n, std::uint64_t seed) {
  if (k == 0) throw Error("nested-cycles needs k >= 1");
  std::mt19937_64 rng(seed);
  std::size_t s = std::max<std::size_t>(4, static_cast<std::size_t>(std::lround(static_cast<double>(n) / k)));
  s += s % 2;
  PlaneBuilder b("nested-cycles-k" + std::to_string(k) + "-n" + std::to_string(n));
  add_rings(b, "", {0, 0}, k, s, rng);
  const double step = 2 * std::numbers::pi / static_cast<double>(s);
  const std::size_t out_pos = (s / 2) | 1;
  b.input("in", numbered("c", 0, 1), random_cap(rng, 1, 10), step);
  b.output("out", numbered("c", 0, out_pos), random_cap(rng, 1, 10), step * out_pos);
  return b.build();
}

PlaneGraph path_of_rings(std::size_t k, std::size_t n, std::uint64_t seed) {
  if (k == 0) throw Error("path-of-rings needs k >= 1");
  std::mt19937_64 rng(seed);
  const std::size_t units =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(static_cast<double>(n) / (8.0 * k))));
  PlaneBuilder b("path-of-rings-k" + std::to_string(k) + "-n" + std::to_string(n));
  const double spacing = 2.0 * static_cast<double>(k + 1) + 2.0;
  auto unit = [](std::size_t u) { return numbered("u", u) + ":"; };
  for (std::size_t u = 0; u < units; ++u) add_rings(b, unit(u), {spacing * u, 0}, k, 8, rng);
  auto outer = [&](std::size_t u, std::size_t j) { return unit(u) + numbered("c", 0, j); };
  for (std::size_t u = 0; u + 1 < units; ++u)
    b.edge(numbered("link", u), outer(u, 1), outer(u + 1, 3), random_cap(rng, 1, 10));
  const double step = std::numbers::pi / 4;
  b.input("in", outer(0, 3), random_cap(rng, 1, 10), 3 * step);
  b.output("out", outer(units - 1, 1), random_cap(rng, 1, 10), step);
  return b.build();
}

PlaneGraph random_planar(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw Error("random-planar needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<Point> at = {{0, 0}, {100, 0}, {50, 86.6}};
  std::vector<std::array<std::size_t, 3>> faces = {{0, 1, 2}};
  std::set<std::pair<std::size_t, std::size_t>> edges = {{0, 1}, {1, 2}, {0, 2}};
  std::uniform_real_distribution<double> unit(0.1, 1.0);
  while (at.size() < n) {
    const std::size_t f = std::uniform_int_distribution<std::size_t>(0, faces.size() - 1)(rng);
    const auto [a, b, c] = faces[f];
    double wa = unit(rng), wb = unit(rng), wc = unit(rng);
    const double sum = wa + wb + wc;
    const std::size_t v = at.size();
    at.push_back({(wa * at[a].x + wb * at[b].x + wc * at[c].x) / sum, (wa * at[a].y + wb * at[b].y + wc * at[c].y) / sum});
    for (std::size_t w : {a, b, c}) edges.insert({std::min(v, w), std::max(v, w)});
    faces[f] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({a, c, v});
  }

  // Keep a spanning tree and the outer triangle; drop other edges at random.
  detail::UnionFind tree(n);
  std::vector<std::pair<std::size_t, std::size_t>> order(edges.begin(), edges.end());
  std::shuffle(order.begin(), order.end(), rng);
  std::set<std::pair<std::size_t, std::size_t>> kept = {{0, 1}, {1, 2}, {0, 2}};
  tree.unite(0, 1);
  tree.unite(1, 2);
  for (const auto& [u, v] : order) {
    if (tree.find(u) != tree.find(v)) {
      tree.unite(u, v);
      kept.insert({u, v});
    }
  }
  std::bernoulli_distribution drop(0.3);
  for (const auto& e : order)
    if (!kept.count(e) && !drop(rng)) kept.insert(e);

  PlaneBuilder b("random-planar-n" + std::to_string(n) + "-s" + std::to_string(seed));
  for (std::size_t v = 0; v < n; ++v) b.vertex(numbered("p", v), at[v]);
  std::size_t serial = 0;
  std::bernoulli_distribution flip(0.5);
  for (const auto& [u, v] : kept) {
    const bool forward = flip(rng);
    b.edge(numbered("e", serial++), numbered("p", forward ? u : v), numbered("p", forward ? v : u),
           random_cap(rng, 1, 10));
  }
  const Point centre{50, 28.9};
  const std::size_t io = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
  for (std::size_t i = 0; i < io; ++i) {
    const std::size_t v = i % 3;
    const double angle = std::atan2(at[v].y - centre.y, at[v].x - centre.x) + 0.2 * static_cast<double>(i / 3);
    if (i % 2 == 0) {
      b.input(numbered("in", i), numbered("p", v), random_cap(rng, 1, 10), angle);
    } else {
      b.output(numbered("out", i), numbered("p", v), random_cap(rng, 1, 10), angle);
    }
  }
  return b.build();
}

PlaneGraph generate_family(const std::string& family, std::size_t k, std::size_t n, std::uint64_t seed) {
  if (family == "nested-cycles") return nested_cycles(k, n, seed);
  if (family == "path-of-rings") return path_of_rings(k, n, seed);
  if (family == "random-planar") return random_planar(n, seed);
  throw Error("unknown family '" + family + "' (expected nested-cycles, path-of-rings or random-planar)");
}

// --- small random networks ---------------------------------------------------

FlowNetwork random_small_network(std::mt19937_64& rng, const SmallNetOptions& options) {
  auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  const std::size_t n = uniform(1, options.max_vertices);
  // Optionally split into two parts with no edge between them.
  const std::size_t cut = (n >= 2 && std::bernoulli_distribution(0.2)(rng)) ? uniform(1, n - 1) : n;
  auto same_part = [&](std::size_t u, std::size_t v) { return (u < cut) == (v < cut); };

  NetworkSpec spec;
  spec.name = "random";
  for (std::size_t v = 0; v < n; ++v) spec.vertices.push_back(numbered("v", v));
  std::set<std::pair<std::size_t, std::size_t>> arcs;
  const std::size_t target = n >= 2 ? uniform(0, std::min(options.max_internal, n * (n - 1))) : 0;
  const bool want_cycle = std::bernoulli_distribution(0.4)(rng);
  for (std::size_t attempt = 0; arcs.size() < target && attempt < 50 * (target + 1); ++attempt) {
    const std::size_t u = uniform(0, n - 1), v = uniform(0, n - 1);
    if (u == v || !same_part(u, v) || arcs.count({u, v})) continue;
    arcs.insert({u, v});
    if (want_cycle && arcs.size() < target && std::bernoulli_distribution(0.3)(rng)) arcs.insert({v, u});
  }
  std::size_t serial = 0;
  for (const auto& [u, v] : arcs) {
    spec.edges.push_back({numbered("e", serial++), numbered("v", u), numbered("v", v),
                          random_cap(rng, 0, options.max_cap)});
  }
  const std::size_t io = uniform(0, options.max_io);
  for (std::size_t i = 0; i < io; ++i) {
    const std::string v = numbered("v", uniform(0, n - 1));
    if (std::bernoulli_distribution(0.5)(rng)) {
      spec.edges.push_back({numbered("in", i), std::nullopt, v, random_cap(rng, 0, options.max_cap)});
    } else {
      spec.edges.push_back({numbered("out", i), v, std::nullopt, random_cap(rng, 0, options.max_cap)});
    }
  }
  return FlowNetwork(spec);
}

}  // namespace flowtype
