#include "flowtype/io_json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <tuple>

namespace flowtype {

namespace {

Rational capacity_from_json(const Json& j, const std::string& edge) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw Error("edge '" + edge + "': bad capacity: " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if (std::isfinite(d) && d == std::floor(d) && std::fabs(d) < 9007199254740992.0) {
      return Rational(static_cast<std::int64_t>(d));
    }
    throw Error("edge '" + edge + "': capacity " + j.dump() + " is not exact; write it as a \"p/q\" string");
  }
  throw Error("edge '" + edge + "': capacity must be an integer or a \"p/q\" string");
}

std::optional<std::string> endpoint(const Json& e, const char* key) {
  if (!e.contains(key) || e.at(key).is_null()) return std::nullopt;
  if (!e.at(key).is_string()) throw Error(std::string("edge endpoint '") + key + "' must be a string or null");
  return e.at(key).get<std::string>();
}

Json id_list(const FlowNetwork& net, const std::vector<EdgeIndex>& edges) {
  std::vector<std::string> ids;
  for (EdgeIndex e : edges) ids.push_back(net.edge(e).id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

EdgeIndex edge_by_id(const FlowNetwork& net, const Json& id) {
  if (!id.is_string()) throw Error("edge ids must be strings");
  auto e = net.find_edge(id.get<std::string>());
  if (!e) throw Error("unknown edge '" + id.get<std::string>() + "'");
  return *e;
}

Json ops_json(const OpCounts& ops) { return Json{{"min", ops.min}, {"plus", ops.plus}, {"minus", ops.minus}}; }

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

NetworkSpec network_spec_from_json(const Json& j) {
  if (!j.is_object()) throw Error("network JSON must be an object");
  NetworkSpec spec;
  if (j.contains("name")) spec.name = j.at("name").get<std::string>();
  if (!j.contains("vertices") || !j.at("vertices").is_array()) throw Error("network JSON needs a 'vertices' array");
  if (!j.contains("edges") || !j.at("edges").is_array()) throw Error("network JSON needs an 'edges' array");
  for (const Json& v : j.at("vertices")) {
    if (!v.is_string()) throw Error("vertex ids must be strings");
    spec.vertices.push_back(v.get<std::string>());
  }
  for (const Json& e : j.at("edges")) {
    if (!e.is_object() || !e.contains("id") || !e.at("id").is_string()) throw Error("every edge needs a string 'id'");
    EdgeSpec es;
    es.id = e.at("id").get<std::string>();
    es.tail = endpoint(e, "tail");
    es.head = endpoint(e, "head");
    if (!e.contains("cap")) throw Error("edge '" + es.id + "' has no 'cap'");
    es.cap = capacity_from_json(e.at("cap"), es.id);
    spec.edges.push_back(std::move(es));
  }
  return spec;
}

FlowNetwork network_from_json(const Json& j) { return FlowNetwork(network_spec_from_json(j)); }

Json network_to_json(const FlowNetwork& net) {
  Json edges = Json::array();
  for (const Edge& e : net.edges()) {
    edges.push_back({{"id", e.id},
                     {"tail", e.is_input() ? Json(nullptr) : Json(net.vertex_id(e.tail))},
                     {"head", e.is_output() ? Json(nullptr) : Json(net.vertex_id(e.head))},
                     {"cap", net.to_rational(e.cap).str()}});
  }
  Json vertices = Json::array();
  for (VertexIndex v = 0; v < net.vertex_count(); ++v) vertices.push_back(net.vertex_id(v));
  return Json{{"name", net.name()}, {"vertices", vertices}, {"edges", edges}};
}

bool has_embedding(const Json& j) { return j.is_object() && j.contains("rotation"); }

PlaneGraph plane_graph_from_json(const FlowNetwork& net, const Json& embedding) {
  if (!has_embedding(embedding) || !embedding.at("rotation").is_object()) {
    throw Error("embedding JSON needs a 'rotation' object");
  }
  PlaneGraph pg{net, std::vector<std::vector<EdgeIndex>>(net.vertex_count()), {}};
  for (const auto& [vertex, edges] : embedding.at("rotation").items()) {
    auto v = net.find_vertex(vertex);
    if (!v) throw Error("rotation names unknown vertex '" + vertex + "'");
    for (const Json& id : edges) pg.rotation[*v].push_back(edge_by_id(net, id));
  }
  if (embedding.contains("outer_face")) {
    for (const Json& id : embedding.at("outer_face")) pg.outer_face.push_back(edge_by_id(net, id));
  }
  validate_rotation(pg);
  return pg;
}

Json plane_graph_to_json(const PlaneGraph& pg) {
  Json j = network_to_json(pg.net);
  Json rotation = Json::object();
  for (VertexIndex v = 0; v < pg.net.vertex_count(); ++v) {
    Json edges = Json::array();
    for (EdgeIndex e : pg.rotation[v]) edges.push_back(pg.net.edge(e).id);
    rotation[pg.net.vertex_id(v)] = edges;
  }
  j["rotation"] = rotation;
  j["outer_face"] = id_list(pg.net, pg.outer_face);
  return j;
}

Json typing_to_json(const FlowNetwork& net, const Typing& t) {
  struct Row {
    std::vector<std::string> a, b;
    const Interval* value;
  };
  std::vector<Row> rows;
  for (Mask b = 0; b <= t.full_outputs(); ++b) {
    for (Mask a = 0; a <= t.full_inputs(); ++a) {
      Row r{{}, {}, &t.at(a, b)};
      for (std::size_t i = 0; i < t.inputs.size(); ++i)
        if (a >> i & 1) r.a.push_back(t.inputs[i]);
      for (std::size_t i = 0; i < t.outputs.size(); ++i)
        if (b >> i & 1) r.b.push_back(t.outputs[i]);
      rows.push_back(std::move(r));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    return std::make_tuple(x.a.size() + x.b.size(), std::cref(x.a), std::cref(x.b)) <
           std::make_tuple(y.a.size() + y.b.size(), std::cref(y.a), std::cref(y.b));
  });
  Json entries = Json::array();
  for (const Row& r : rows) {
    entries.push_back({{"A", r.a}, {"B", r.b}, {"lo", r.value->lo.str()}, {"hi", r.value->hi.str()}});
  }
  return Json{{"network", net.name()}, {"entries", entries}};
}

ReassemblingTree tree_from_json(const FlowNetwork& net, const Json& j) {
  ReassemblingTree tree;
  if (net.vertex_count() == 0 && (j.is_null() || (j.is_object() && j.empty()))) return tree;
  // Iterative post-order so deep combs do not exhaust the stack.
  struct Frame {
    const Json* node;
    bool expanded;
  };
  std::vector<Frame> stack{{&j, false}};
  std::vector<ReassemblingTree::NodeId> built;
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const Json& node = *f.node;
    if (!node.is_object()) throw Error("tree nodes must be objects");
    if (node.contains("vertex")) {
      auto v = net.find_vertex(node.at("vertex").get<std::string>());
      if (!v) throw Error("tree names unknown vertex '" + node.at("vertex").get<std::string>() + "'");
      built.push_back(tree.add_leaf(*v));
      continue;
    }
    if (!node.contains("left") || !node.contains("right")) {
      throw Error("tree nodes need either 'vertex' or both 'left' and 'right'");
    }
    if (!f.expanded) {
      stack.push_back({f.node, true});
      stack.push_back({&node.at("right"), false});
      stack.push_back({&node.at("left"), false});
      continue;
    }
    const auto right = built.back();
    built.pop_back();
    const auto left = built.back();
    built.pop_back();
    built.push_back(tree.add_merge(left, right));
  }
  tree.validate(net);
  return tree;
}

Json tree_to_json(const FlowNetwork& net, const ReassemblingTree& tree) {
  if (tree.empty()) return Json::object();
  std::vector<Json> built(tree.size());
  std::vector<std::pair<ReassemblingTree::NodeId, bool>> stack{{tree.root(), false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    const auto& node = tree.node(id);
    if (node.vertex) {
      built[id] = Json{{"vertex", net.vertex_id(*node.vertex)}};
    } else if (!expanded) {
      stack.push_back({id, true});
      stack.push_back({node.right, false});
      stack.push_back({node.left, false});
    } else {
      built[id] = Json{{"left", std::move(built[node.left])}, {"right", std::move(built[node.right])}};
    }
  }
  return std::move(built[tree.root()]);
}

Json stats_to_json(const EngineStats& stats) {
  OpCounts all = stats.splice_ops.total;
  all += stats.basis_ops.total;
  all += stats.union_ops.total;
  return Json{{"delta", stats.delta},
              {"alpha", stats.alpha},
              {"alpha_with_dangling", stats.boundary_alpha},
              {"entries", stats.entries},
              {"components", stats.components},
              {"splices", stats.splices},
              {"unions", stats.unions},
              {"union_entries", stats.union_entries},
              {"ops", ops_json(all)},
              {"splice_ops", ops_json(stats.splice_ops.total)},
              {"splice_max_per_entry",
               {{"plus_minus", stats.splice_ops.max_plus_minus_per_entry}, {"min", stats.splice_ops.max_min_per_entry}}}};
}

Json layers_to_json(const FlowNetwork& net, const LayerPartition& layers) {
  Json out = Json::array();
  for (const auto& layer : layers.layers) out.push_back(id_list(net, layer));
  return Json{{"k", layers.k()}, {"layers", out}};
}

Json provenance_to_json(const std::map<std::string, Provenance>& provenance) {
  Json j = Json::object();
  for (const auto& [id, p] : provenance) j[id] = {{"kind", p.kind}, {"sources", p.sources}};
  return j;
}

}  // namespace flowtype
