// Acceptance suite: one PASS/FAIL line per criterion, details below it.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flowtype/detail/union_find.hpp"
#include "flowtype/embed.hpp"
#include "flowtype/generators.hpp"
#include "flowtype/io_json.hpp"
#include "flowtype/layered.hpp"
#include "flowtype/oracle.hpp"
#include "flowtype/pipeline.hpp"
#include "flowtype/plane.hpp"
#include "flowtype/regularize.hpp"
#include "flowtype/trees.hpp"

using namespace flowtype;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void note(std::string line) { details.push_back(std::move(line)); }
  void fail(std::string line) {
    pass = false;
    details.push_back("failure: " + std::move(line));
  }
};

template <class... Args>
std::string format(const char* fmt, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

// --- shared runs ---------------------------------------------------------------

/// One engine run and the numbers the criteria look at.
struct RunRecord {
  std::string label;
  std::size_t n = 0, m = 0, io = 0;
  EngineStats stats;
};

struct CorpusNet {
  FlowNetwork net;
  Typing oracle;
  std::vector<ReassemblingTree> trees;
};

bool disconnected(const FlowNetwork& net) {
  if (net.vertex_count() < 2) return false;
  detail::UnionFind pieces(net.vertex_count());
  for (EdgeIndex e : net.internal()) pieces.unite(net.edge(e).tail, net.edge(e).head);
  for (VertexIndex v = 1; v < net.vertex_count(); ++v)
    if (pieces.find(v) != pieces.find(0)) return true;
  return false;
}

/// Up to three distinct trees: a breadth-first comb, a greedy tree and
/// random ones, skipping repeats. Networks with one or two vertices have
/// fewer than three trees in total.
std::vector<ReassemblingTree> pick_trees(const FlowNetwork& net, std::mt19937_64& rng) {
  std::vector<ReassemblingTree> trees;
  std::set<std::string> seen;
  auto offer = [&](ReassemblingTree t) {
    if (predicted_delta(net, t) > 20) return;
    if (seen.insert(tree_to_json(net, t).dump()).second) trees.push_back(std::move(t));
  };
  offer(bfs_comb_tree(net));
  offer(greedy_tree(net));
  for (int attempt = 0; attempt < 200 && trees.size() < 3; ++attempt) offer(random_tree(net, rng));
  return trees;
}

struct CuratedPlane {
  PlaneGraph pg;
  RegularizeResult regular;
};

std::vector<CuratedPlane> curated_corpus() {
  std::vector<PlaneGraph> graphs = {triangle_plane(true), prism_plane(3), prism_plane(3, true), cube_plane(),
                                    prism_plane(5),       prism_plane(6, true)};
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t n : {40, 100, 200}) {
      graphs.push_back(nested_cycles(k, n, k * 1000 + n));
      graphs.push_back(path_of_rings(k, n, k * 1000 + n));
    }
  }
  std::vector<CuratedPlane> out;
  for (auto& pg : graphs) {
    RegularizeResult r = three_regularize(pg);
    out.push_back({std::move(pg), std::move(r)});
  }
  return out;
}

class Suite {
 public:
  Suite(std::size_t corpus_size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < corpus_size; ++i) {
      CorpusNet c{random_small_network(rng), {}, {}};
      c.oracle = principal_typing_oracle(c.net, 8);
      c.trees = pick_trees(c.net, rng);
      corpus_.push_back(std::move(c));
    }
    curated_ = curated_corpus();
  }

  Outcome oracle_equivalence() {
    Outcome o;
    std::size_t runs = 0, cycles = 0, split = 0, short_of_three = 0, mismatches = 0;
    for (std::size_t i = 0; i < corpus_.size(); ++i) {
      const CorpusNet& c = corpus_[i];
      cycles += has_two_edge_cycle(c.net) ? 1 : 0;
      split += disconnected(c.net) ? 1 : 0;
      if (c.trees.size() < 3) {
        ++short_of_three;
        if (c.net.vertex_count() > 2) o.fail(format("net %zu: only %zu distinct trees", i, c.trees.size()));
      }
      for (const auto& tree : c.trees) {
        const auto run = run_reassembling(c.net, tree);
        record(format("corpus %zu", i), c.net, run.stats);
        ++runs;
        if (typing_from_table(c.net, run.full.table) != c.oracle) {
          ++mismatches;
          o.fail(format("net %zu: reassembled typing differs from the oracle", i));
        }
      }
    }
    o.note(format("%zu networks, %zu runs, %zu mismatching runs", corpus_.size(), runs, mismatches));
    o.note(format("%zu networks with a two-edge cycle, %zu disconnected", cycles, split));
    o.note(format("%zu networks have one or two vertices and so fewer than 3 trees; all others got 3", short_of_three));
    if (corpus_.size() < 500) o.fail("corpus smaller than 500");
    if (cycles == 0 || split == 0) o.fail("corpus lacks two-edge cycles or disconnected networks");
    return o;
  }

  Outcome principality() {
    Outcome o;
    std::size_t flows = 0, assignments = 0, rejected = 0, bad = 0;
    for (std::size_t i = 0; i < corpus_.size(); ++i) {
      const CorpusNet& c = corpus_[i];
      const auto report = check_principal(c.net, c.oracle, {.samples = 200, .seed = i});
      flows += report.flows_checked;
      assignments += report.assignments_checked;
      rejected += report.assignments_rejected;
      if (!report.ok()) {
        ++bad;
        for (const auto& s : report.completeness_counterexamples) o.fail(format("net %zu completeness: ", i) + s);
        for (const auto& s : report.soundness_counterexamples) o.fail(format("net %zu soundness: ", i) + s);
      }
    }
    o.note(format("%zu feasible flows and %zu satisfying assignments checked (%zu candidate assignments "
                  "violated the typing and were redrawn)",
                  flows, assignments, rejected));
    o.note(format("%zu networks with counterexamples", bad));
    return o;
  }

  Outcome difference_identities() {
    Outcome o;
    std::size_t components = 0, comparisons = 0;
    for (std::size_t i = 0; i < corpus_.size(); ++i) {
      const CorpusNet& c = corpus_[i];
      for (const auto& tree : c.trees) {
        EngineOptions options;
        options.observer = [&](const Component& comp) {
          if (comp.boundary() > 6) return;
          ++components;
          comparisons += check_component(o, i, c.net, comp);
        };
        run_reassembling(c.net, tree, options);
      }
    }
    o.note(format("%zu components with at most 6 dangling edges, %zu differences compared", components, comparisons));
    return o;
  }

  Outcome operation_accounting() {
    Outcome o;
    std::uint64_t worst_pm = 0, worst_min = 0, entries = 0, union_entries = 0;
    OpCounts all;
    for (const RunRecord& r : runs_) {
      const auto& ops = r.stats.splice_ops;
      worst_pm = std::max(worst_pm, ops.max_plus_minus_per_entry);
      worst_min = std::max(worst_min, ops.max_min_per_entry);
      all += ops.total;
      entries += r.stats.entries;
      union_entries += r.stats.union_entries;
      const std::uint64_t bound = static_cast<std::uint64_t>(r.m + r.n) << r.stats.delta;
      if (r.stats.entries > bound) {
        o.fail(r.label + format(": %llu entries above (m+n)*2^delta = %llu",
                                static_cast<unsigned long long>(r.stats.entries),
                                static_cast<unsigned long long>(bound)));
      }
    }
    if (worst_pm > 4) o.fail(format("an entry used %llu additions/subtractions", static_cast<unsigned long long>(worst_pm)));
    if (worst_min > 2) o.fail(format("an entry used %llu minima", static_cast<unsigned long long>(worst_min)));
    o.note(format("%zu runs; worst splice entry: %llu of {+,-}, %llu of {min}", runs_.size(),
                  static_cast<unsigned long long>(worst_pm), static_cast<unsigned long long>(worst_min)));
    o.note(format("splice totals: %llu +, %llu -, %llu min; no other operation exists on the counted type",
                  static_cast<unsigned long long>(all.plus), static_cast<unsigned long long>(all.minus),
                  static_cast<unsigned long long>(all.min)));
    o.note(format("%llu basis and splice entries; %llu more in unions of edge-disjoint parts (not counted)",
                  static_cast<unsigned long long>(entries), static_cast<unsigned long long>(union_entries)));
    return o;
  }

  Outcome lazy_bound() {
    Outcome o;
    std::size_t checked = 0, closed = 0, vacuous = 0;
    for (const RunRecord& r : runs_) {
      const auto& s = r.stats;
      if (s.delta == 0 && s.boundary_alpha == 0) {
        ++vacuous;
        continue;
      }
      ++checked;
      if (s.delta + 1 > 2 * s.boundary_alpha) {
        o.fail(r.label + format(": delta %zu, alpha counting dangling edges %zu", s.delta, s.boundary_alpha));
      }
      if (r.io == 0) {
        ++closed;
        if (s.delta + 1 > 2 * s.alpha) o.fail(r.label + format(": delta %zu, alpha %zu", s.delta, s.alpha));
      }
    }
    o.note(format("%zu runs checked against 2*alpha - 1 with dangling edges counted in alpha", checked));
    o.note(format("%zu of them have no dangling edges and were also checked with alpha over internal edges", closed));
    o.note(format("%zu runs on networks without edges skipped (delta = alpha = 0)", vacuous));
    return o;
  }

  Outcome peeling_fixtures() {
    Outcome o;
    std::vector<std::pair<std::string, std::size_t>> seen;
    auto expect = [&](const std::string& name, const PlaneGraph& pg, std::size_t golden) {
      const std::size_t k = peel_edge_layers(pg).k();
      if (k != golden) o.fail(format("%s: k = %zu, expected %zu", name.c_str(), k, golden));
      seen.emplace_back(name, k);
    };
    expect("triangle", triangle_plane(), 1);
    expect("prism", prism_plane(), 2);
    expect("cube", cube_plane(), 2);
    NetworkSpec k4{"K4", {"a", "b", "c", "d"}, {}};
    for (const char* e : {"ab", "ac", "ad", "bc", "bd", "cd"})
      k4.edges.push_back({e, std::string(1, e[0]), std::string(1, e[1]), Rational(1)});
    const auto k4_plane = embed_small(FlowNetwork(k4));
    if (!k4_plane) {
      o.fail("K4 was not embedded");
    } else {
      expect("K4", *k4_plane, 2);
    }
    for (std::size_t k = 1; k <= 4; ++k)
      for (std::size_t n : {24, 60, 120})
        expect(format("nested-cycles(%zu,%zu)", k, n), nested_cycles(k, n, n), k);
    std::string line;
    for (const auto& [name, k] : seen) line += name + "=" + std::to_string(k) + " ";
    o.note(line);
    return o;
  }

  Outcome vertex_edge_layers() {
    Outcome o;
    std::size_t graphs = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> histogram;
    auto check = [&](const std::string& name, const PlaneGraph& pg) {
      if (!is_three_regular(pg.net)) {
        o.fail(name + " is not 3-regular");
        return;
      }
      ++graphs;
      const std::size_t kv = peel_vertex_layers(pg), ke = peel_edge_layers(pg).k();
      ++histogram[{kv, ke}];
      if (kv > ke || ke > kv + 1) o.fail(format("%s: V-layers %zu, E-layers %zu", name.c_str(), kv, ke));
    };
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
      const std::size_t n = 10 + seed % 60;
      check(format("random-planar(%zu, seed %llu)", n, static_cast<unsigned long long>(seed)),
            three_regularize(random_planar(n, seed)).graph);
    }
    for (const auto& c : curated_) check(c.pg.net.name(), c.regular.graph);
    o.note(format("%zu 3-regular plane graphs", graphs));
    std::string line = "(V, E) layer counts:";
    for (const auto& [key, count] : histogram) line += format(" (%zu,%zu)x%zu", key.first, key.second, count);
    o.note(line);
    if (graphs < 100) o.fail("fewer than 100 graphs");
    return o;
  }

  Outcome regularization_contract() {
    Outcome o;
    std::size_t typed = 0, over_vertices = 0, over_edges = 0, over_edges_sparse = 0;
    // n = |V| and m = number of internal edges of the input.
    auto contract = [&](const std::string& name, const FlowNetwork& in, const FlowNetwork& out) {
      const std::size_t n = in.vertex_count(), m = in.internal().size();
      if (!is_three_regular(out)) o.fail(name + ": not 3-regular");
      if (has_two_edge_cycle(out)) o.fail(name + ": two-edge cycle left");
      if (out.vertex_count() > 9 * n) {
        ++over_vertices;
        o.fail(name + format(": %zu vertices from %zu", out.vertex_count(), n));
      }
      if (out.internal().size() > 9 * m) {
        ++over_edges;
        over_edges_sparse += m < n ? 1 : 0;
        o.fail(name + format(": %zu internal edges from %zu (n = %zu)", out.internal().size(), m, n));
      }
      if (in.inputs().size() + in.outputs().size() <= 8) {
        ++typed;
        if (principal_typing_oracle(out, 8) != principal_typing_oracle(in, 8)) o.fail(name + ": typing changed");
      }
    };
    for (std::size_t i = 0; i < corpus_.size(); ++i) {
      const auto r = three_regularize(corpus_[i].net);
      contract(format("corpus %zu", i), corpus_[i].net, r.graph.net);
    }
    std::size_t kept = 0;
    std::string moved;
    for (const auto& c : curated_) {
      const std::string& name = c.pg.net.name();
      contract(name, c.pg.net, c.regular.graph.net);
      const std::size_t before = peel_edge_layers(c.pg).k(), after = peel_edge_layers(c.regular.graph).k();
      if (before == after) {
        ++kept;
      } else {
        moved += format(" %s (%zu->%zu)", name.c_str(), before, after);
        o.fail(format("%s: E-outerplanarity %zu became %zu", name.c_str(), before, after));
      }
    }
    o.note(format("%zu random networks and %zu plane graphs transformed; %zu typings compared with the oracle",
                  corpus_.size(), curated_.size(), typed));
    o.note(format("vertex bound exceeded %zu times; internal edge bound exceeded %zu times, %zu of them on inputs "
                  "with fewer internal edges than vertices",
                  over_vertices, over_edges, over_edges_sparse));
    o.note(format("E-outerplanarity kept on %zu of %zu plane graphs; changed:%s", kept, curated_.size(),
                  moved.empty() ? " none" : moved.c_str()));
    return o;
  }

  Outcome layered_target() {
    Outcome o;
    std::string line;
    for (const auto& c : curated_) {
      const auto result = layered_reassembling(c.regular.graph);
      const std::size_t alpha = alpha_measure(c.regular.graph.net, result.tree);
      line += format("%s: k=%zu alpha=%zu; ", c.pg.net.name().c_str(), result.k, alpha);
      if (alpha > 2 * result.k)
        o.fail(format("%s: alpha %zu above 2k = %zu", c.pg.net.name().c_str(), alpha, 2 * result.k));
      const auto run = run_reassembling(c.regular.graph.net, result.tree);
      record(c.pg.net.name() + " (layered)", c.regular.graph.net, run.stats);
    }
    o.note(line);
    return o;
  }

  Outcome linear_scaling() {
    Outcome o;
    auto ops_of = [&](std::size_t k, std::size_t n) {
      const PlaneGraph pg = path_of_rings(k, n, 7);
      PipelineOptions options;
      options.embedding = pg;
      const auto result = run_pipeline(pg.net, options);
      record(pg.net.name() + " (pipeline)", pg.net, result.stats);
      const OpCounts& t = result.stats.splice_ops.total;
      return static_cast<double>(t.plus + t.minus + t.min);
    };
    const std::vector<std::size_t> sizes{50, 100, 200, 400};
    std::vector<double> ops;
    for (std::size_t n : sizes) ops.push_back(ops_of(2, n));
    std::string line = "k=2:";
    for (std::size_t i = 0; i < sizes.size(); ++i) line += format(" n=%zu ops=%.0f", sizes[i], ops[i]);
    o.note(line);
    for (std::size_t i = 1; i < sizes.size(); ++i) {
      const double ratio = ops[i] / ops[i - 1];
      o.note(format("ratio %zu->%zu: %.3f", sizes[i - 1], sizes[i], ratio));
      if (ratio < 1.7 || ratio > 2.4) o.fail(format("per-doubling ratio %.3f outside [1.7, 2.4]", ratio));
    }
    // Least squares ops = a + b n, reported for reference.
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      const double x = static_cast<double>(sizes[i]), y = ops[i];
      sx += x, sy += y, sxx += x * x, sxy += x * y, syy += y * y;
    }
    const double cnt = static_cast<double>(sizes.size());
    const double b = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx), a = (sy - b * sx) / cnt;
    const double r = (cnt * sxy - sx * sy) / std::sqrt((cnt * sxx - sx * sx) * (cnt * syy - sy * sy));
    o.note(format("linear fit: ops = %.1f + %.1f n, r^2 = %.5f", a, b, r * r));

    std::vector<double> by_k;
    for (std::size_t k = 1; k <= 3; ++k) by_k.push_back(ops_of(k, 100));
    const double c = by_k[0] / 4.0;
    for (std::size_t k = 1; k <= 3; ++k) {
      const double cap = c * std::pow(4.0, static_cast<double>(k));
      o.note(format("n=100 k=%zu: ops=%.0f, C*4^k=%.0f (C fitted at k=1: %.1f)", k, by_k[k - 1], cap, c));
      if (by_k[k - 1] > cap * (1 + 1e-12)) o.fail(format("k=%zu grows faster than C*4^k", k));
    }
    return o;
  }

 private:
  void record(std::string label, const FlowNetwork& net, const EngineStats& stats) {
    runs_.push_back({std::move(label), net.vertex_count(), net.edge_count(), net.inputs().size() + net.outputs().size(),
                     stats});
  }

  /// Compares both difference forms read off the component's table with
  /// the two-phase oracle on the component's own network.
  std::size_t check_component(Outcome& o, std::size_t net_index, const FlowNetwork& net, const Component& comp) {
    const ComponentNetwork sub = component_network(net, comp);
    const std::size_t p = comp.inputs.size(), q = comp.outputs.size();
    const Mask all_in = (Mask{1} << p) - 1, all_out = (Mask{1} << q) - 1;
    std::size_t compared = 0;
    auto compare = [&](Mask a1, Mask b1, Mask a2, Mask b2, std::int64_t diff) {
      ++compared;
      const AftQuery query{{sub.inputs_mask(a1), sub.outputs_mask(b1)}, {sub.inputs_mask(a2), sub.outputs_mask(b2)}};
      const std::int64_t direct = max_from_to_aft_two_phase(sub.net, query).units();
      if (diff < 0 || diff != direct) {
        o.fail(format("net %zu: difference %lld, two-phase oracle %lld", net_index, static_cast<long long>(diff),
                      static_cast<long long>(direct)));
      }
    };
    for (Mask a2 = 0; a2 <= all_in; ++a2) {
      const Mask rest = all_in & ~a2;
      for (Mask a1 = rest;; a1 = (a1 - 1) & rest) {
        for (Mask b = 0; b <= all_out; ++b) compare(a1, b, a2, b, comp.at(a1 | a2, b).units() - comp.at(a2, b).units());
        if (a1 == 0) break;
      }
    }
    for (Mask b2 = 0; b2 <= all_out; ++b2) {
      const Mask rest = all_out & ~b2;
      for (Mask b1 = rest;; b1 = (b1 - 1) & rest) {
        for (Mask a = 0; a <= all_in; ++a) compare(a, b1, a, b2, comp.at(a, b1 | b2).units() - comp.at(a, b2).units());
        if (b1 == 0) break;
      }
    }
    return compared;
  }

  std::vector<CorpusNet> corpus_;
  std::vector<CuratedPlane> curated_;
  std::vector<RunRecord> runs_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite for flow-network typings"};
  std::size_t corpus = 500;
  std::uint64_t seed = 0;
  std::vector<int> allowed;
  bool verbose = false;
  app.add_option("--corpus", corpus, "Random networks in the oracle corpus")->capture_default_str();
  app.add_option("--seed", seed, "Seed for the random corpus")->capture_default_str();
  app.add_option("--allow-fail", allowed, "Criteria whose failure does not change the exit code");
  app.add_flag("-v,--verbose", verbose, "Print every failure instead of the first few");
  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  Suite suite(corpus, seed);
  // Criterion 4 and 5 read the runs recorded by 1, 9 and 10, so those go first.
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {1, "oracle equivalence", [&] { return suite.oracle_equivalence(); }},
      {2, "principality sampling", [&] { return suite.principality(); }},
      {3, "difference identities", [&] { return suite.difference_identities(); }},
      {9, "layered reassembling alpha <= 2k", [&] { return suite.layered_target(); }},
      {10, "fixed-parameter linear scaling", [&] { return suite.linear_scaling(); }},
      {4, "operation accounting", [&] { return suite.operation_accounting(); }},
      {5, "lazy splicing bound", [&] { return suite.lazy_bound(); }},
      {6, "peeling fixtures", [&] { return suite.peeling_fixtures(); }},
      {7, "vertex vs edge outerplanarity", [&] { return suite.vertex_edge_layers(); }},
      {8, "3-regularization contract", [&] { return suite.regularization_contract(); }},
  };
  std::map<int, std::pair<std::string, Outcome>> results;
  for (auto& c : criteria) results[c.id] = {c.title, c.run()};

  bool gate = true;
  for (const auto& [id, entry] : results) {
    const auto& [title, outcome] = entry;
    const bool waived = std::find(allowed.begin(), allowed.end(), id) != allowed.end();
    std::printf("%s %2d %s%s\n", outcome.pass ? "PASS" : "FAIL", id, title.c_str(),
                !outcome.pass && waived ? " (known failure)" : "");
    std::size_t failures = 0;
    for (const auto& line : outcome.details) {
      const bool is_failure = line.rfind("failure: ", 0) == 0;
      if (is_failure && !verbose && ++failures > 5) continue;
      std::printf("       %s\n", line.c_str());
    }
    if (failures > 5) std::printf("       ... %zu more failures (use --verbose)\n", failures - 5);
    if (!outcome.pass && !waived) gate = false;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("total time %.1f s\n", seconds);
  return gate ? 0 : 1;
}
