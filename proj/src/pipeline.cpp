#include "flowtype/pipeline.hpp"

#include "flowtype/embed.hpp"
#include "flowtype/oracle.hpp"
#include "flowtype/regularize.hpp"

namespace flowtype {

PipelineResult run_pipeline(const FlowNetwork& net, const PipelineOptions& options) {
  PipelineResult out;
  if (options.tree) {
    const auto run = run_reassembling(net, *options.tree);
    out.typing = typing_from_table(net, run.full.table);
    out.stats = run.stats;
    out.strategy = "given";
    out.vertices = net.vertex_count();
    out.edges = net.edge_count();
    if (options.embedding) out.k_input = peel_edge_layers(*options.embedding).k();
    return out;
  }

  std::optional<PlaneGraph> pg = options.embedding;
  if (!pg) {
    if (net.vertex_count() > options.embed_limit) {
      throw Error("network has " + std::to_string(net.vertex_count()) + " vertices, more than the embedder handles (" +
                  std::to_string(options.embed_limit) + "); supply an embedding or a reassembling tree (--tree)");
    }
    pg = embed_small(net, options.embed_limit);
    if (!pg) throw Error("network is not planar; supply a reassembling tree (--tree)");
  }
  out.k_input = peel_edge_layers(*pg).k();

  RegularizeResult regular = three_regularize(*pg);
  out.warnings = std::move(regular.warnings);
  const PlaneGraph& cubic = regular.graph;
  const LayeredResult layered = layered_reassembling(cubic);
  out.k_regular = layered.k;
  out.strategy = layered.strategy;
  out.warnings.insert(out.warnings.end(), layered.warnings.begin(), layered.warnings.end());

  const auto run = run_reassembling(cubic.net, layered.tree);
  // Dangling edges keep their ids, so the typing reads the same on `net`.
  out.typing = typing_from_table(cubic.net, run.full.table);
  out.typing.network = net.name();
  out.stats = run.stats;
  out.vertices = cubic.net.vertex_count();
  out.edges = cubic.net.edge_count();
  return out;
}

}  // namespace flowtype
