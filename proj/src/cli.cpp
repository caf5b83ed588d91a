#include "factorkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "factorkit/errors.hpp"
#include "factorkit/factor.hpp"
#include "factorkit/fuzz.hpp"
#include "factorkit/instance_io.hpp"
#include "factorkit/sufficient.hpp"

namespace factorkit {

namespace {

// --r takes "g", "f", or a path to a whitespace-separated list of n integers.
VertexFunc resolve_r(const Instance& inst, const std::string& arg) {
  if (arg == "g") return inst.g;
  if (arg == "f") return inst.f;
  std::ifstream in(arg);
  if (!in) throw UsageError("--r: cannot open r-function file: " + arg);
  std::vector<int> values;
  long long x = 0;
  while (in >> x) {
    if (x < 1 || x > 1073741823) {
      throw UsageError("--r: value " + std::to_string(x) + " outside [1, 2^30 - 1]");
    }
    values.push_back(static_cast<int>(x));
  }
  if (!in.eof()) throw UsageError("--r: file contains a non-integer token: " + arg);
  if (static_cast<int>(values.size()) != inst.graph.vertex_count()) {
    throw UsageError("--r: expected " + std::to_string(inst.graph.vertex_count()) +
                     " integers, found " + std::to_string(values.size()));
  }
  return VertexFunc(std::move(values));
}

void dump_network(const FlowNetwork& net, const std::optional<Flow>& flow, std::ostream& err) {
  for (int i = 0; i < net.arc_count(); ++i) {
    const Arc& a = net.arcs()[static_cast<std::size_t>(i)];
    err << a.tail << " " << a.head << " " << a.lower << " " << a.upper << " ";
    if (flow) {
      err << flow->on_arc[static_cast<std::size_t>(i)];
    } else {
      err << "-";
    }
    err << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fractional (g,f)-factor toolkit"};
  app.require_subcommand(1);

  std::string file;
  std::string r_arg = "f";
  int jobs = 1;
  bool verify_conclusion = false;
  bool want_dump_network = false;

  auto add_common = [&](CLI::App* cmd, bool with_jobs) {
    cmd->add_option("file", file, "instance JSON file")->required();
    if (with_jobs) {
      cmd->add_option("--jobs", jobs, "enumeration workers; output is identical for any value");
    }
  };

  CLI::App* check_factor = app.add_subcommand(
      "check-factor", "decide fractional (g,f)-factor existence");
  add_common(check_factor, true);

  CLI::App* check_all = app.add_subcommand(
      "check-all", "decide existence of fractional r-factors for every g <= r <= f");
  add_common(check_all, true);

  CLI::App* check_all_ex = app.add_subcommand(
      "check-all-excluding", "like check-all, with zero weight forced on h_edges");
  add_common(check_all_ex, true);

  CLI::App* construct = app.add_subcommand(
      "construct", "build a half-integral fractional r-factor avoiding h_edges");
  add_common(construct, false);
  construct->add_option("--r", r_arg, "r function: g, f, or a path to n integers (default f)");
  construct->add_flag("--dump-network", want_dump_network,
                      "print the circulation network to stderr as 'tail head lower upper flow'");

  CLI::App* theorem6 = app.add_subcommand(
      "theorem6", "clique-partition sufficiency check (needs a partition field)");
  add_common(theorem6, true);
  theorem6->add_flag("--verify-conclusion", verify_conclusion,
                     "also run the exclusion criterion on the full instance");

  CLI::App* theorem9 = app.add_subcommand(
      "theorem9", "degree-ratio sufficiency check");
  add_common(theorem9, true);
  theorem9->add_flag("--verify-conclusion", verify_conclusion,
                     "also run the exclusion criterion on the full instance");

  FuzzConfig fuzz_cfg;
  CLI::App* fuzz = app.add_subcommand(
      "fuzz", "cross-validate the checker against the brute-force oracle on random instances");
  fuzz->add_option("--trials", fuzz_cfg.trials, "number of trials")->required();
  fuzz->add_option("--seed", fuzz_cfg.seed, "campaign seed")->required();
  fuzz->add_option("--n-min", fuzz_cfg.n_min, "smallest vertex count")->required();
  fuzz->add_option("--n-max", fuzz_cfg.n_max, "largest vertex count")->required();
  fuzz->add_option("--p", fuzz_cfg.p_num, "edge probability numerator over 2^53")->required();
  fuzz->add_option("--q", fuzz_cfg.q_num, "h-edge probability numerator over 2^53")->required();
  fuzz->add_option("--gmax", fuzz_cfg.gmax, "largest g value")->required();
  fuzz->add_option("--fmax", fuzz_cfg.fmax, "largest f value")->required();
  fuzz->add_option("--jobs", fuzz_cfg.jobs, "trial workers; the report is identical for any value");
  fuzz->add_option("--dump-dir", fuzz_cfg.dump_dir, "directory for disagreeing instances");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    CheckOptions opts;
    opts.jobs = jobs;

    if (check_factor->parsed()) {
      Instance inst = load_instance(file);
      DeficiencyReport report = check_fractional_gf(inst.graph, inst.g, inst.f, opts);
      out << report_to_json(report).dump() << "\n";
      return report.holds ? 0 : 1;
    }
    if (check_all->parsed()) {
      Instance inst = load_instance(file);
      DeficiencyReport report = check_all_gf(inst.graph, inst.g, inst.f, opts);
      out << report_to_json(report).dump() << "\n";
      return report.holds ? 0 : 1;
    }
    if (check_all_ex->parsed()) {
      Instance inst = load_instance(file);
      DeficiencyReport report = check_all_gf_excluding(inst.graph, inst.h, inst.g, inst.f, opts);
      out << report_to_json(report).dump() << "\n";
      return report.holds ? 0 : 1;
    }
    if (construct->parsed()) {
      Instance inst = load_instance(file);
      VertexFunc r = resolve_r(inst, r_arg);
      if (want_dump_network) {
        Graph reduced = inst.graph.remove_edges(inst.h);
        FlowNetwork net = build_factor_network(reduced, r, r);
        dump_network(net, feasible_circulation(net), err);
      }
      std::optional<FactorWitness> witness = construct_excluding(inst.graph, inst.h, r);
      if (witness) {
        // Independent re-validation before anything is printed.
        if (auto bad = validate_witness(inst.graph, *witness, r, r, inst.h)) {
          throw SoundnessError("construct produced an invalid witness: " + *bad);
        }
      }
      out << witness_to_json(inst.graph, witness).dump() << "\n";
      return witness ? 0 : 1;
    }
    if (theorem6->parsed()) {
      Instance inst = load_instance(file);
      if (!inst.partition) {
        throw UsageError("partition: field is required for theorem6");
      }
      SufficiencyReport report = check_clique_partition(inst.graph, *inst.partition, inst.h,
                                                        inst.g, inst.f, verify_conclusion, opts);
      out << sufficiency_to_json(report).dump() << "\n";
      return report.premise_holds ? 0 : 1;
    }
    if (theorem9->parsed()) {
      Instance inst = load_instance(file);
      SufficiencyReport report =
          check_degree_ratio(inst.graph, inst.h, inst.g, inst.f, verify_conclusion, opts);
      out << sufficiency_to_json(report).dump() << "\n";
      return report.premise_holds ? 0 : 1;
    }
    if (fuzz->parsed()) {
      CrossValidationReport report = fuzz_campaign(fuzz_cfg);
      out << campaign_to_json(report).dump() << "\n";
      return report.disagreements.empty() ? 0 : 1;
    }
  } catch (const SoundnessError& e) {
    err << "soundness abort: " << e.what() << "\n";
    return 4;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace factorkit
