#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "flowtype/network.hpp"
#include "flowtype/plane.hpp"

namespace flowtype {

struct Point {
  double x = 0;
  double y = 0;
};

/// Builds a plane graph from a straight-line drawing. Rotations are read off
/// the edge angles (clockwise) and the outer face of each piece is the face
/// of largest area. Dangling edges are drawn as short stubs at a given angle.
class PlaneBuilder {
 public:
  explicit PlaneBuilder(std::string name) : name_(std::move(name)) {}

  void vertex(const std::string& id, Point p);
  void edge(const std::string& id, const std::string& tail, const std::string& head, Rational cap);
  void input(const std::string& id, const std::string& head, Rational cap, double angle);
  void output(const std::string& id, const std::string& tail, Rational cap, double angle);

  PlaneGraph build() const;

 private:
  struct Stub {
    std::string vertex;
    double angle;
  };
  std::string name_;
  NetworkSpec spec_;
  std::vector<std::pair<std::string, Point>> points_;
  std::vector<std::pair<std::string, Stub>> stubs_;
};

namespace fixtures {

/// v1 -> v2 with input a (5) into v1, e (3) from v1 to v2, output b (4).
NetworkSpec chain();
/// Input a (10) into v1, v1->v2 (2), v2->v3 (2), v1->v3 (1), output b (10).
NetworkSpec triangle();
/// Input a (5) into v1, e: v1->v2 (3), e': v2->v1 (2), output b (4).
NetworkSpec two_cycle();
/// s -> {x, y} -> t with unit edges; input a into s, output b from t.
NetworkSpec diamond();

}  // namespace fixtures

/// Triangle, optionally with one input and one output stub.
PlaneGraph triangle_plane(bool with_io = false);
/// Two s-cycles, one inside the other, joined by s spokes. With io, one
/// outer edge and one inner edge are subdivided to carry an input and an
/// output so the graph stays 3-regular.
PlaneGraph prism_plane(std::size_t s = 3, bool with_io = false);
PlaneGraph cube_plane();
/// Edge-outerplanarity k: k concentric cycles, spokes between neighbouring
/// cycles at alternating positions, one input and one output on the outer
/// cycle. About n vertices in total.
PlaneGraph nested_cycles(std::size_t k, std::size_t n, std::uint64_t seed = 0);
/// A row of k-deep ring units (8 vertices per cycle), each outer cycle
/// joined to the next by a single bridge; about n vertices, input on the
/// first unit, output on the last.
PlaneGraph path_of_rings(std::size_t k, std::size_t n, std::uint64_t seed = 0);
/// Stacked triangulation on n vertices with random interior edges removed
/// (the graph stays connected) and two to four dangling edges on the outer
/// triangle.
PlaneGraph random_planar(std::size_t n, std::uint64_t seed = 0);

/// Named family for benchmarks: "nested-cycles", "path-of-rings" or
/// "random-planar" (k ignored). Throws Error for unknown names.
PlaneGraph generate_family(const std::string& family, std::size_t k, std::size_t n, std::uint64_t seed);

struct SmallNetOptions {
  std::size_t max_vertices = 12;
  std::size_t max_io = 8;
  std::int64_t max_cap = 10;
  std::size_t max_internal = 14;
};

/// Random network within the given bounds. Two-edge cycles and networks
/// split into two unconnected parts both occur with fixed probability.
FlowNetwork random_small_network(std::mt19937_64& rng, const SmallNetOptions& options = {});

}  // namespace flowtype
