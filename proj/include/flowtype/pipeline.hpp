#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flowtype/layered.hpp"
#include "flowtype/plane.hpp"
#include "flowtype/reassembly.hpp"

namespace flowtype {

struct PipelineOptions {
  /// Used instead of embed_small when present.
  std::optional<PlaneGraph> embedding;
  /// Skips embedding and 3-regularization; the engine runs on the input.
  std::optional<ReassemblingTree> tree;
  std::size_t embed_limit = 64;
};

struct PipelineResult {
  Typing typing;
  EngineStats stats;
  /// Edge-outerplanarity of the embedded input and of the 3-regular graph
  /// that was reassembled. Unset when a tree was supplied.
  std::optional<std::size_t> k_input;
  std::optional<std::size_t> k_regular;
  std::string strategy;
  std::size_t vertices = 0;  // of the network that was reassembled
  std::size_t edges = 0;
  std::vector<std::string> warnings;
};

/// Principal typing of `net`: embed, make 3-regular, build a layered
/// reassembling tree and run the engine. Throws Error for a non-planar
/// input without a tree.
PipelineResult run_pipeline(const FlowNetwork& net, const PipelineOptions& options = {});

}  // namespace flowtype
