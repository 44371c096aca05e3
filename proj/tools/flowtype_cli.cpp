// flowtype: principal typings of flow networks from the command line.
//
//   flowtype typing --input net.json [--embedding emb.json] [--tree tree.json]
//   flowtype verify --input net.json [--perturb]
//   flowtype peel   --input plane.json
//   flowtype bench  --family nested-cycles --k 2 --sizes 20,40,80,160
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flowtype/embed.hpp"
#include "flowtype/generators.hpp"
#include "flowtype/io_json.hpp"
#include "flowtype/layered.hpp"
#include "flowtype/oracle.hpp"
#include "flowtype/pipeline.hpp"
#include "flowtype/plane.hpp"
#include "flowtype/regularize.hpp"

using namespace flowtype;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Config {
  std::string input;
  std::string embedding;
  std::string tree;
  std::string out;
  std::uint64_t seed = 0;
  std::size_t oracle_limit = kDefaultOracleLimit;
  std::size_t samples = 200;
  bool perturb = false;
  bool timing = false;

  std::string family = "nested-cycles";
  std::size_t k = 2;
  std::vector<std::size_t> sizes;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw Error("cannot write '" + cfg.out + "'");
  file << text;
}

struct Loaded {
  FlowNetwork net;
  std::optional<PlaneGraph> embedding;
  std::optional<ReassemblingTree> tree;
};

/// The embedding comes from --embedding, or from the input itself when it
/// carries a rotation.
Loaded load(const Config& cfg) {
  if (cfg.input.empty()) throw Error("--input is required");
  const Json in = read_json_file(cfg.input);
  Loaded l{network_from_json(in), std::nullopt, std::nullopt};
  if (!cfg.embedding.empty()) {
    l.embedding = plane_graph_from_json(l.net, read_json_file(cfg.embedding));
  } else if (has_embedding(in)) {
    l.embedding = plane_graph_from_json(l.net, in);
  }
  if (!cfg.tree.empty()) l.tree = tree_from_json(l.net, read_json_file(cfg.tree));
  return l;
}

PipelineResult pipeline(const Loaded& l) {
  PipelineOptions options;
  options.embedding = l.embedding;
  options.tree = l.tree;
  return run_pipeline(l.net, options);
}

std::string set_name(const std::vector<std::string>& ids, Mask m) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!(m >> i & 1)) continue;
    if (!first) s += ",";
    s += ids[i];
    first = false;
  }
  return s + "}";
}

std::string entry_name(const Typing& t, std::size_t index) {
  const std::size_t p = t.inputs.size();
  const Mask a = index & ((Mask{1} << p) - 1);
  const Mask b = index >> p;
  return "(" + set_name(t.inputs, a) + "," + set_name(t.outputs, b) + ")";
}

std::string interval_str(const Interval& iv) { return "[" + iv.lo.str() + ", " + iv.hi.str() + "]"; }

int cmd_typing(const Config& cfg) {
  const Loaded l = load(cfg);
  const auto start = std::chrono::steady_clock::now();
  const PipelineResult r = pipeline(l);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  Json stats = stats_to_json(r.stats);
  stats["strategy"] = r.strategy;
  stats["vertices"] = r.vertices;
  stats["edges"] = r.edges;
  stats["k_input"] = r.k_input ? Json(*r.k_input) : Json(nullptr);
  stats["k"] = r.k_regular ? Json(*r.k_regular) : Json(nullptr);
  if (cfg.timing) stats["time_ms"] = ms;
  Json out{{"typing", typing_to_json(l.net, r.typing)}, {"stats", stats}, {"warnings", r.warnings}};
  emit(cfg, dump_canonical(out));
  return kOk;
}

int cmd_verify(const Config& cfg) {
  const Loaded l = load(cfg);
  const std::size_t io = l.net.inputs().size() + l.net.outputs().size();
  if (io > cfg.oracle_limit) {
    throw Error("network has " + std::to_string(io) + " dangling edges, above the oracle limit " +
                std::to_string(cfg.oracle_limit) + " (--oracle-limit)");
  }
  PipelineResult r = pipeline(l);
  std::ostringstream report;
  if (cfg.perturb) {
    std::mt19937_64 rng(cfg.seed);
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, r.typing.entries.size() - 1)(rng);
    r.typing.entries[i].hi = r.typing.entries[i].hi + Rational(1);
    report << "perturbed entry " << entry_name(r.typing, i) << "\n";
  }
  const Typing oracle = principal_typing_oracle(l.net, cfg.oracle_limit);

  std::size_t equal = 0;
  std::vector<std::string> mismatches;
  for (std::size_t i = 0; i < oracle.entries.size(); ++i) {
    if (r.typing.entries[i] == oracle.entries[i]) {
      ++equal;
      continue;
    }
    mismatches.push_back("entry " + entry_name(oracle, i) + ": reassembled " + interval_str(r.typing.entries[i]) +
                         ", oracle " + interval_str(oracle.entries[i]));
  }

  SamplingOptions sampling;
  sampling.samples = cfg.samples;
  sampling.seed = cfg.seed;
  const PrincipalityReport sampled = check_principal(l.net, r.typing, sampling);

  const bool pass = mismatches.empty() && sampled.ok();
  report << (pass ? "PASS" : "FAIL") << " " << l.net.name() << ": " << equal << "/" << oracle.entries.size()
         << " entries equal; " << sampled.flows_checked << " flows and " << sampled.assignments_checked
         << " assignments sampled\n";
  for (const auto& m : mismatches) report << "  mismatch " << m << "\n";
  for (const auto& c : sampled.completeness_counterexamples) report << "  not complete: " << c << "\n";
  for (const auto& c : sampled.soundness_counterexamples) report << "  not sound: " << c << "\n";
  emit(cfg, report.str());
  return pass ? kOk : kVerifyFailed;
}

int cmd_peel(const Config& cfg) {
  const Loaded l = load(cfg);
  std::optional<PlaneGraph> pg = l.embedding;
  if (!pg) pg = embed_small(l.net);
  if (!pg) throw Error("network is not planar or too large to embed; supply --embedding");

  const LayerPartition layers = peel_edge_layers(*pg);
  const std::size_t kv = peel_vertex_layers(*pg);
  Json out = layers_to_json(l.net, layers);
  out["vertex_outerplanarity"] = kv;
  out["three_regular"] = is_three_regular(l.net);
  if (is_three_regular(l.net)) {
    const bool ok = kv <= layers.k() && layers.k() <= kv + 1;
    out["vertex_edge_check"] = std::string(ok ? "OK" : "VIOLATED") + " (" + std::to_string(kv) + " <= " +
                               std::to_string(layers.k()) + " <= " + std::to_string(kv + 1) + ")";
  }
  emit(cfg, dump_canonical(out));
  return kOk;
}

/// Least squares ops = a + b n over the rows, reported on stderr.
void fit_report(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) return;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : points) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(points.size());
  const double b = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double a = (sy - b * sx) / m;
  double worst = 0;
  for (auto [x, y] : points) worst = std::max(worst, std::abs(y - (a + b * x)) / std::max(y, 1.0));
  std::fprintf(stderr, "linear fit: ops = %.1f + %.2f n, largest relative residual %.3f\n", a, b, worst);
}

int cmd_bench(const Config& cfg) {
  std::ostringstream csv;
  csv << "n,k,delta,alpha,ops,time\n";
  std::vector<std::pair<double, double>> points;
  for (std::size_t n : cfg.sizes) {
    if (n == 0) continue;
    const PlaneGraph pg = generate_family(cfg.family, cfg.k, n, cfg.seed);
    const auto start = std::chrono::steady_clock::now();
    PipelineOptions options;
    options.embedding = pg;
    const PipelineResult r = run_pipeline(pg.net, options);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    OpCounts all = r.stats.splice_ops.total;
    all += r.stats.basis_ops.total;
    all += r.stats.union_ops.total;
    const std::uint64_t ops = all.plus + all.minus + all.min;
    csv << r.vertices << "," << *r.k_regular << "," << r.stats.delta << "," << r.stats.alpha << "," << ops << ",";
    if (cfg.timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", ms);
      csv << buf;
    }
    csv << "\n";
    points.emplace_back(static_cast<double>(r.vertices), static_cast<double>(ops));
  }
  emit(cfg, csv.str());
  fit_report(points);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal typings of flow networks by graph reassembling"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "Network JSON");
    sub->add_option("--embedding", cfg.embedding, "Rotation system JSON");
    sub->add_option("--seed", cfg.seed, "Seed for every random choice")->capture_default_str();
    sub->add_option("--out", cfg.out, "Write output here instead of stdout");
  };

  CLI::App* typing = app.add_subcommand("typing", "Principal typing and engine statistics as JSON");
  add_common(typing);
  typing->add_option("--tree", cfg.tree, "Reassembling tree JSON; skips the planar pipeline");
  typing->add_flag("--timing", cfg.timing, "Include wall time in the statistics");

  CLI::App* verify = app.add_subcommand("verify", "Compare the computed typing with the brute-force oracle");
  add_common(verify);
  verify->add_option("--tree", cfg.tree, "Reassembling tree JSON; skips the planar pipeline");
  verify->add_option("--oracle-limit", cfg.oracle_limit, "Largest number of dangling edges")->capture_default_str();
  verify->add_option("--samples", cfg.samples, "Flows sampled by the principality check")->capture_default_str();
  verify->add_flag("--perturb", cfg.perturb, "Corrupt one typing entry before comparing");

  CLI::App* peel = app.add_subcommand("peel", "Edge layers of a plane graph as JSON");
  add_common(peel);

  CLI::App* bench = app.add_subcommand("bench", "CSV of n, k, delta, alpha, ops, time over a size sweep");
  bench->add_option("--family", cfg.family, "nested-cycles, path-of-rings or random-planar")->capture_default_str();
  bench->add_option("--k", cfg.k, "Nesting depth")->capture_default_str();
  bench->add_option("--sizes", cfg.sizes, "Vertex counts")->delimiter(',')->required();
  bench->add_option("--seed", cfg.seed, "Generator seed")->capture_default_str();
  bench->add_option("--out", cfg.out, "Write the CSV here instead of stdout");
  bench->add_flag("--timing", cfg.timing, "Fill the time column (milliseconds)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*typing) return cmd_typing(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*peel) return cmd_peel(cfg);
    return cmd_bench(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
