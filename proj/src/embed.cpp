#include "flowtype/embed.hpp"

#include <algorithm>
#include <map>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

namespace flowtype {

std::optional<PlaneGraph> embed_small(const FlowNetwork& net, std::size_t vertex_limit) {
  if (net.vertex_count() > vertex_limit) {
    throw Error("embed_small handles at most " + std::to_string(vertex_limit) + " vertices; got " +
                std::to_string(net.vertex_count()) + " (supply an embedding instead)");
  }
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                      boost::property<boost::vertex_index_t, int>,
                                      boost::property<boost::edge_index_t, int>>;
  using BoostEdge = boost::graph_traits<Graph>::edge_descriptor;

  // One undirected edge per adjacent pair; the other internal edges between
  // the same pair are slotted in next to it afterwards.
  Graph g(net.vertex_count());
  std::map<std::pair<VertexIndex, VertexIndex>, std::vector<EdgeIndex>> bundles;
  for (EdgeIndex e : net.internal()) {
    const auto [u, v] = std::minmax(net.edge(e).tail, net.edge(e).head);
    bundles[{u, v}].push_back(e);
  }
  std::vector<EdgeIndex> representative;
  for (const auto& [pair, edges] : bundles) {
    boost::add_edge(pair.first, pair.second, static_cast<int>(representative.size()), g);
    representative.push_back(edges.front());
  }

  std::vector<std::vector<BoostEdge>> embedding(net.vertex_count());
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = g,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), get(boost::vertex_index, g)));
  if (!planar) return std::nullopt;

  PlaneGraph pg{net, std::vector<std::vector<EdgeIndex>>(net.vertex_count()), {}};
  const auto edge_index = get(boost::edge_index, g);
  for (VertexIndex v = 0; v < net.vertex_count(); ++v) {
    auto& rot = pg.rotation[v];
    for (const BoostEdge& be : embedding[v]) {
      const EdgeIndex rep = representative[edge_index[be]];
      const auto [a, b] = std::minmax(net.edge(rep).tail, net.edge(rep).head);
      const auto& bundle = bundles.at({a, b});
      // The bundle forms a stack of digons: listed forwards at the smaller
      // endpoint and backwards at the larger one.
      if (v == a) {
        rot.insert(rot.end(), bundle.begin(), bundle.end());
      } else {
        rot.insert(rot.end(), bundle.rbegin(), bundle.rend());
      }
    }
    for (EdgeIndex e : net.in_edges(v))
      if (net.edge(e).is_input()) rot.push_back(e);
    for (EdgeIndex e : net.out_edges(v))
      if (net.edge(e).is_output()) rot.push_back(e);
  }

  const FaceSet faces = derive_faces(pg);
  for (const Face& f : faces.faces)
    if (f.outer)
      for (EdgeIndex e : f.edges()) pg.outer_face.push_back(e);
  std::sort(pg.outer_face.begin(), pg.outer_face.end());
  return pg;
}

}  // namespace flowtype
