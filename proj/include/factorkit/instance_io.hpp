#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "factorkit/criteria.hpp"
#include "factorkit/factor.hpp"
#include "factorkit/graph.hpp"
#include "factorkit/sufficient.hpp"

namespace factorkit {

// ordered_json keeps insertion order, which pins the documented key order of
// every emitted document.
using Json = nlohmann::ordered_json;

// One problem instance as carried by the JSON schema:
//   { "n": int, "edges": [[u,v],...], "h_edges": [[u,v],...], "g": [...],
//     "f": [...], "partition": [[...],...] }
// h_edges defaults to [] and partition is optional.
struct Instance {
  Graph graph;
  EdgeSubset h;
  VertexFunc g;
  VertexFunc f;
  std::optional<CliquePartition> partition;
};

// Parses and validates; violations raise UsageError naming the offending field.
Instance parse_instance(const Json& doc);
Instance parse_instance_text(const std::string& text);
Instance load_instance(const std::string& path);

Json instance_to_json(const Instance& inst);
std::string instance_to_text(const Instance& inst);

Json report_to_json(const DeficiencyReport& report);
Json witness_to_json(const Graph& graph, const std::optional<FactorWitness>& witness);
Json sufficiency_to_json(const SufficiencyReport& report);

}  // namespace factorkit
