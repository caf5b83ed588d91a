#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "factorkit/criteria.hpp"
#include "factorkit/graph.hpp"

namespace factorkit {

// Ordered partition of V(G) into parts that each induce a clique: a spanning
// complete-factor whose component count is the number of parts.
struct CliquePartition {
  std::vector<VertexSet> parts;
};

// Outcome of a sufficiency check.  At most one violating_* field is set; a
// premise that holds while the verified conclusion fails is an implementation
// bug and raises SoundnessError instead of being reported here.
struct SufficiencyReport {
  bool premise_holds = true;
  std::optional<int> violating_part;                  // clique-partition premise
  std::optional<int> violating_vertex;                // degree bound d(x) >= f(x) + d_H(x)
  std::optional<std::pair<int, int>> violating_pair;  // ratio bound g(x)(d(y)-d_H(y)) >= d(x)f(y)
  bool conclusion_checked = false;
  bool conclusion_holds = false;
};

// nullopt when parts are nonempty, disjoint, cover V(G) and each induces a
// clique; otherwise a description naming the first offending part.
std::optional<std::string> validate_complete_factor(const Graph& graph,
                                                    const CliquePartition& partition);

// Instance restricted to V(G) - removed: induced graph, surviving member edges
// of h, and g, f restricted, all relabeled via the included maps.
struct RestrictedInstance {
  Graph graph;
  EdgeSubset h;
  VertexFunc g;
  VertexFunc f;
  std::vector<int> old_to_new;
  std::vector<int> new_to_old;
};
RestrictedInstance restrict_instance(const Graph& graph, const EdgeSubset& h,
                                     const VertexFunc& g, const VertexFunc& f,
                                     VertexSet removed);

// Degree-ratio premise: d(x) >= f(x) + d_H(x) for every vertex x, and
// g(x) (d(y) - d_H(y)) >= d(x) f(y) for every ordered pair (x, y), x = y
// included.  On failure reports the first violating x, then the first
// violating pair in lexicographic order.
SufficiencyReport check_degree_ratio_premise(const Graph& graph, const EdgeSubset& h,
                                             const VertexFunc& g, const VertexFunc& f);

// Premise plus, when verify_conclusion is set, the exclusion criterion on the
// full instance.  Premise true with conclusion false aborts via SoundnessError.
SufficiencyReport check_degree_ratio(const Graph& graph, const EdgeSubset& h,
                                     const VertexFunc& g, const VertexFunc& f,
                                     bool verify_conclusion, const CheckOptions& opts = {});

// Clique-partition sufficiency: with at least two parts, if every G - V(C)
// admits all fractional (g,f)-factors excluding h (checked on the restricted
// instance), the full graph does too.  Reports the first failing part.
SufficiencyReport check_clique_partition(const Graph& graph, const CliquePartition& partition,
                                         const EdgeSubset& h, const VertexFunc& g,
                                         const VertexFunc& f, bool verify_conclusion,
                                         const CheckOptions& opts = {});

}  // namespace factorkit
