#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "flowtype/network.hpp"
#include "flowtype/reassembly.hpp"

namespace flowtype {

/// Bottom-up merging that always performs the merge whose result has the
/// fewest crossing internal edges. `groups`, when non-empty, assigns every
/// vertex a group; groups are completed one by one before any merge across
/// groups happens.
ReassemblingTree greedy_tree(const FlowNetwork& net, const std::vector<std::size_t>& groups = {});

/// Grows one cluster group by group, each time adding the group that leaves
/// the fewest crossing internal edges (ties: more edges into the cluster,
/// then the lower group number). Each group enters as a left comb in
/// breadth-first order. Every start group in `starts` is tried and the tree
/// with the smallest alpha is kept; an empty `starts` tries group 0.
ReassemblingTree sweep_tree(const FlowNetwork& net, const std::vector<std::size_t>& groups,
                            const std::vector<std::size_t>& starts);

/// Local search by tree rotations: a node (a, (c, d)) becomes ((a, c), d)
/// whenever that lowers the number of crossing internal edges of the new
/// inner node. Leaves and the root keep their vertex sets.
ReassemblingTree improve_tree(const FlowNetwork& net, const ReassemblingTree& tree);

/// Left comb over a breadth-first order of the underlying undirected graph,
/// one connected piece after another.
ReassemblingTree bfs_comb_tree(const FlowNetwork& net);

/// Uniformly random leaf order merged by uniformly random pairs.
ReassemblingTree random_tree(const FlowNetwork& net, std::mt19937_64& rng);

}  // namespace flowtype
