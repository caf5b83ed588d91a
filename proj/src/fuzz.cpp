#include "factorkit/fuzz.hpp"

#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "factorkit/errors.hpp"
#include "factorkit/factor.hpp"
#include "factorkit/sufficient.hpp"

namespace factorkit {

namespace {

struct TrialResult {
  std::uint64_t regenerations = 0;
  // Set when the generator could not produce an in-cap instance; surfaced as
  // ResourceError after the merge (exceptions cannot cross the parallel loop).
  bool gave_up = false;
  std::optional<Disagreement> disagreement;
};

constexpr std::uint64_t kMaxRegenerations = 1000;

bool reports_equal(const DeficiencyReport& a, const DeficiencyReport& b) {
  return a.holds == b.holds && a.min_deficiency == b.min_deficiency &&
         a.witness_S == b.witness_S && a.witness_T == b.witness_T && a.scanned == b.scanned;
}

// One seeded trial.  The draw sequence is fixed up front (instance, then the
// super-H coin flips) so the stream never depends on check outcomes.
TrialResult run_trial(const FuzzConfig& cfg, std::uint64_t trial) {
  Prng rng = Prng::derive(cfg.seed, trial);
  TrialResult result;

  std::optional<Instance> inst;
  while (true) {
    int span = cfg.n_max - cfg.n_min + 1;
    int n = cfg.n_min + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(span)));
    Graph graph = gen_random_graph(n, cfg.p_num, rng);
    EdgeSubset h = gen_random_edge_subset(graph, cfg.q_num, rng);
    auto [g, f] = gen_random_gf(n, cfg.gmax, cfg.fmax, rng);
    if (r_function_count(g, f) > cfg.r_cap) {
      // Oversized for the oracle; regenerate rather than skip so every trial
      // still contributes a cross-validated instance.
      if (++result.regenerations >= kMaxRegenerations) {
        result.gave_up = true;
        return result;
      }
      continue;
    }
    inst = Instance{std::move(graph), std::move(h), std::move(g), std::move(f), std::nullopt};
    break;
  }

  // Random super-H for the monotonicity check: every non-member edge joins
  // with probability 1/2.
  std::vector<Edge> super_members = inst->h.edges();
  for (const Edge& e : inst->graph.edges()) {
    if (inst->h.contains(e.u, e.v)) continue;
    if (rng.next_u53() < kProbabilityOne / 2) super_members.push_back(e);
  }
  EdgeSubset super_h(inst->graph, std::move(super_members));

  auto fail = [&](const std::string& kind) {
    result.disagreement = Disagreement{trial, kind, instance_to_text(*inst), ""};
  };

  try {
    CheckOptions opts{cfg.subset_cap, 1};
    const Graph& graph = inst->graph;
    const EdgeSubset& h = inst->h;
    const VertexFunc& g = inst->g;
    const VertexFunc& f = inst->f;

    DeficiencyReport checker = check_all_gf_excluding(graph, h, g, f, opts);
    OracleVerdict oracle = brute_force_all_excluding(graph, h, g, f, cfg.r_cap);
    if (checker.holds != oracle.all_exist) {
      fail("checker-vs-oracle");
      return result;
    }
    if (!reports_equal(check_all_gf_excluding(graph, EdgeSubset(graph), g, f, opts),
                       check_all_gf(graph, g, f, opts))) {
      fail("empty-h-specialization");
      return result;
    }
    if (checker.holds != check_all_gf(graph.remove_edges(h), g, f, opts).holds) {
      fail("reduction-identity");
      return result;
    }
    if (check_all_gf_excluding(graph, super_h, g, f, opts).holds && !checker.holds) {
      fail("monotonicity");
      return result;
    }
    if (checker.holds) {
      for (int x = 0; x < graph.vertex_count(); ++x) {
        if (graph.degree(x) < f[x] + h.degree(x)) {
          fail("necessary-degree-condition");
          return result;
        }
      }
    }
    if (g == f && checker.holds != construct_excluding(graph, h, g).has_value()) {
      fail("gf-collapse");
      return result;
    }
    if (check_degree_ratio_premise(graph, h, g, f).premise_holds && !checker.holds) {
      fail("degree-ratio-soundness");
      return result;
    }
  } catch (const std::exception& e) {
    fail(std::string("internal-error: ") + e.what());
  }
  return result;
}

}  // namespace

CrossValidationEntry cross_validate(const Instance& inst, const OracleCaps& caps) {
  CrossValidationEntry entry;
  entry.checker = check_all_gf_excluding(inst.graph, inst.h, inst.g, inst.f,
                                         CheckOptions{caps.subset_cap, 1});
  entry.oracle = brute_force_all_excluding(inst.graph, inst.h, inst.g, inst.f, caps.r_cap);
  entry.agreed = entry.checker.holds == entry.oracle.all_exist;
  return entry;
}

CrossValidationReport fuzz_campaign(const FuzzConfig& config) {
  if (config.n_min < 1 || config.n_min > config.n_max) {
    throw UsageError("fuzz: needs 1 <= n-min <= n-max");
  }
  if (config.n_max > config.subset_cap) {
    throw UsageError("fuzz: n-max " + std::to_string(config.n_max) +
                     " exceeds the subset enumeration cap " + std::to_string(config.subset_cap));
  }
  if (config.gmax < 1 || config.gmax > config.fmax) {
    throw UsageError("fuzz: needs 1 <= gmax <= fmax");
  }
  if (config.p_num > kProbabilityOne || config.q_num > kProbabilityOne) {
    throw UsageError("fuzz: probability numerators must not exceed 2^53");
  }
  if (config.jobs < 1) throw UsageError("fuzz: jobs must be >= 1");

  auto started = std::chrono::steady_clock::now();

  std::vector<TrialResult> results(static_cast<std::size_t>(config.trials));
#pragma omp parallel for num_threads(config.jobs) schedule(dynamic) if (config.jobs > 1)
  for (long long t = 0; t < static_cast<long long>(config.trials); ++t) {
    results[static_cast<std::size_t>(t)] = run_trial(config, static_cast<std::uint64_t>(t));
  }

  CrossValidationReport report;
  report.trials = config.trials;
  report.seed = config.seed;
  for (std::size_t t = 0; t < results.size(); ++t) {
    if (results[t].gave_up) {
      throw ResourceError("fuzz: trial " + std::to_string(t) + " regenerated " +
                          std::to_string(kMaxRegenerations) +
                          " oversized instances; raise --r-cap or shrink gmax/fmax/n");
    }
    report.oversized += results[t].regenerations;
    if (results[t].disagreement) report.disagreements.push_back(*results[t].disagreement);
  }
  report.agreements = report.trials - report.disagreements.size();

  // Replay artifacts are written after the merge, in trial order, so the
  // emitted paths are independent of the worker count.
  if (!config.dump_dir.empty() && !report.disagreements.empty()) {
    std::filesystem::create_directories(config.dump_dir);
    for (Disagreement& d : report.disagreements) {
      std::string tag = d.kind;
      for (char& c : tag) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-') c = '-';
      }
      std::string name = "trial-" + std::to_string(d.trial) + "-" + tag + ".json";
      std::filesystem::path path = std::filesystem::path(config.dump_dir) / name;
      std::ofstream out(path);
      out << d.instance_json << "\n";
      d.path = path.string();
    }
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

Json campaign_to_json(const CrossValidationReport& report) {
  Json doc;
  doc["trials"] = report.trials;
  doc["agreements"] = report.agreements;
  doc["oversized"] = report.oversized;
  Json list = Json::array();
  for (const Disagreement& d : report.disagreements) {
    list.push_back(d.path.empty() ? d.instance_json : d.path);
  }
  doc["disagreements"] = list;
  doc["seed"] = report.seed;
  return doc;
}

}  // namespace factorkit
