#pragma once

#include <optional>
#include <vector>

namespace factorkit {

struct Arc {
  int tail = 0;
  int head = 0;
  long long lower = 0;
  long long upper = 0;
};

// Arc-list description of a directed flow network with [lower, upper] bounds.
// Node indices live in 0..node_count-1; arcs keep their insertion order, which
// solvers rely on for determinism.
class FlowNetwork {
 public:
  explicit FlowNetwork(int node_count);

  // Returns the arc id (position in arcs()).
  int add_arc(int tail, int head, long long lower, long long upper);

  int node_count() const { return node_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  int node_count_;
  std::vector<Arc> arcs_;
};

// Per-arc flow values, aligned with FlowNetwork::arcs().
struct Flow {
  std::vector<long long> on_arc;
};

struct MaxFlowResult {
  long long value = 0;
  Flow flow;
};

// Blocking-flow max flow (shortest augmenting paths, exact integer arithmetic).
// Requires every lower bound to be 0 and source != sink.  Deterministic: arcs
// are scanned in insertion order, so identical inputs give identical flows.
MaxFlowResult max_flow(const FlowNetwork& net, int source, int sink);

// Integral circulation respecting all bounds (every node conserving), or
// nullopt when none exists.  Uses the standard lower-bounds transformation on
// top of max_flow.
std::optional<Flow> feasible_circulation(const FlowNetwork& net);

// Validation helpers, used by tests and by internal self-checks.
bool flow_within_bounds(const FlowNetwork& net, const Flow& flow);
// Every node conserves except source/sink when given (pass -1, -1 for a circulation).
bool flow_conserving(const FlowNetwork& net, const Flow& flow, int source = -1, int sink = -1);

}  // namespace factorkit
