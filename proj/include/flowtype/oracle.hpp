#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "flowtype/network.hpp"

namespace flowtype {

/// (A ⊆ E_in, B ⊆ E_out) as masks over inputs() / outputs().
struct SubsetPair {
  Mask inputs = 0;
  Mask outputs = 0;
};

/// Arguments of maxFromToAft(A1,B1 | A2,B2). Legal shapes: A1∩A2=∅ with
/// B1=B2, or A1=A2 with B1∩B2=∅.
struct AftQuery {
  SubsetPair first;
  SubsetPair after;
};

inline constexpr std::size_t kDefaultOracleLimit = 12;

/// Max flow from A to B with the other dangling edges blocked, computed on
/// a super-source/super-sink reduction. Throws on an invalid pair, and
/// throws std::logic_error if f(A) != f(B) for the computed flow.
Capacity max_from_to(const FlowNetwork& net, SubsetPair pair);

/// maxFromTo for every (A,B), indexed A | (B << |inputs|).
std::vector<Capacity> max_from_to_table(const FlowNetwork& net);

/// maxFromToAft as a difference of two max_from_to values:
/// maxFromTo(A1 ∪ A2, B) − maxFromTo(A2, B) or the output-side analogue.
Capacity max_from_to_aft(const FlowNetwork& net, const AftQuery& query);

/// Direct semantics: route a maximum flow for the conditioning pair, then
/// maximise the additional flow from the first pair in the residual network
/// without releasing the conditioning flow.
Capacity max_from_to_aft_two_phase(const FlowNetwork& net, const AftQuery& query);

/// tau(A,B) = [-maxFromTo(complement A, B), maxFromTo(A, complement B)].
Typing typing_from_table(const FlowNetwork& net, const std::vector<Capacity>& table);

/// Brute-force principal typing; refuses networks with more than io_limit
/// dangling edges.
Typing principal_typing_oracle(const FlowNetwork& net, std::size_t io_limit = kDefaultOracleLimit);

/// Feasible flow whose IO restriction is g, or nullopt.
std::optional<Flow> extend_to_feasible(const FlowNetwork& net, const IOAssignment& g);

/// Random feasible flow built from random augmenting paths.
Flow random_feasible_flow(const FlowNetwork& net, std::mt19937_64& rng);

struct SamplingOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  /// Soundness candidates tried per requested sample before giving up.
  std::size_t attempts_per_sample = 50;
};

struct PrincipalityReport {
  std::size_t flows_checked = 0;
  std::size_t assignments_checked = 0;
  std::size_t assignments_rejected = 0;
  std::vector<std::string> completeness_counterexamples;
  std::vector<std::string> soundness_counterexamples;

  bool ok() const { return completeness_counterexamples.empty() && soundness_counterexamples.empty(); }
};

/// Sampled check of the two principality conditions of tau.
PrincipalityReport check_principal(const FlowNetwork& net, const Typing& tau, const SamplingOptions& options = {});

std::string describe(const FlowNetwork& net, const IOAssignment& g);

}  // namespace flowtype
