#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "factorkit/criteria.hpp"
#include "factorkit/generators.hpp"
#include "factorkit/instance_io.hpp"
#include "factorkit/oracle.hpp"

namespace factorkit {

struct OracleCaps {
  std::uint64_t r_cap = kDefaultRFunctionCap;
  int subset_cap = kDefaultSubsetCap;
};

struct CrossValidationEntry {
  bool agreed = false;
  DeficiencyReport checker;
  OracleVerdict oracle;
};

// Runs the exclusion checker and the brute-force oracle on one instance and
// records whether their verdicts agree.
CrossValidationEntry cross_validate(const Instance& inst, const OracleCaps& caps = {});

struct FuzzConfig {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int n_min = 3;
  int n_max = 8;
  std::uint64_t p_num = kProbabilityOne / 2;
  std::uint64_t q_num = kProbabilityOne / 4;
  int gmax = 1;
  int fmax = 2;
  int jobs = 1;
  std::uint64_t r_cap = kDefaultRFunctionCap;
  int subset_cap = kDefaultSubsetCap;
  // When set, disagreeing instances are written here as standalone instance
  // files for replay; otherwise they are kept inline in the report.
  std::string dump_dir;
};

struct Disagreement {
  std::uint64_t trial = 0;
  std::string kind;           // which cross-check failed
  std::string instance_json;  // serialized offending instance
  std::string path;           // file path when dumped, otherwise empty
};

struct CrossValidationReport {
  std::uint64_t trials = 0;
  std::uint64_t agreements = 0;
  // Instances regenerated because an enumeration cap would have been exceeded.
  std::uint64_t oversized = 0;
  std::vector<Disagreement> disagreements;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0;  // informational; excluded from the JSON report
};

// Seeded campaign.  Trial t derives its own stream via Prng::derive(seed, t),
// so the outcome is a pure function of the config: any jobs value produces a
// byte-identical report.  Per trial the checker verdict is cross-validated
// against the oracle and the criterion invariants (empty-H specialization,
// reduction identity, monotonicity under a super-H, the necessary degree
// condition, g = f collapse, degree-ratio soundness); any failure becomes a
// disagreement record.  agreements + |disagreements| = trials.
CrossValidationReport fuzz_campaign(const FuzzConfig& config);

Json campaign_to_json(const CrossValidationReport& report);

}  // namespace factorkit
