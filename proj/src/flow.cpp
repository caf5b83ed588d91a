#include "factorkit/flow.hpp"

#include <limits>
#include <string>
#include <vector>

#include "factorkit/errors.hpp"

namespace factorkit {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max();

// Residual graph for the blocking-flow solver.  Arc i of the caller becomes
// residual arcs 2i (forward) and 2i+1 (backward), so flows read back without
// any id mapping.  Adjacency lists are filled in insertion order and the
// search scans them front to back, which pins the solver's determinism.
class Dinic {
 public:
  explicit Dinic(int n) : adj_(static_cast<std::size_t>(n)) {}

  int add(int u, int v, long long cap) {
    int id = static_cast<int>(to_.size());
    to_.push_back(v);
    cap_.push_back(cap);
    adj_[static_cast<std::size_t>(u)].push_back(id);
    to_.push_back(u);
    cap_.push_back(0);
    adj_[static_cast<std::size_t>(v)].push_back(id + 1);
    return id;
  }

  long long run(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
      iter_.assign(adj_.size(), 0);
      while (long long pushed = dfs(s, t, kInf)) total += pushed;
    }
    return total;
  }

  // Flow pushed through residual arc id = original capacity minus what is left.
  long long flow_on(int id, long long original_cap) const {
    return original_cap - cap_[static_cast<std::size_t>(id)];
  }

 private:
  bool bfs(int s, int t) {
    level_.assign(adj_.size(), -1);
    queue_.clear();
    queue_.push_back(s);
    level_[static_cast<std::size_t>(s)] = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      int u = queue_[head];
      for (int id : adj_[static_cast<std::size_t>(u)]) {
        int v = to_[static_cast<std::size_t>(id)];
        if (cap_[static_cast<std::size_t>(id)] > 0 && level_[static_cast<std::size_t>(v)] < 0) {
          level_[static_cast<std::size_t>(v)] = level_[static_cast<std::size_t>(u)] + 1;
          queue_.push_back(v);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  long long dfs(int u, int t, long long limit) {
    if (u == t) return limit;
    for (std::size_t& i = iter_[static_cast<std::size_t>(u)]; i < adj_[static_cast<std::size_t>(u)].size(); ++i) {
      int id = adj_[static_cast<std::size_t>(u)][i];
      int v = to_[static_cast<std::size_t>(id)];
      if (cap_[static_cast<std::size_t>(id)] <= 0) continue;
      if (level_[static_cast<std::size_t>(v)] != level_[static_cast<std::size_t>(u)] + 1) continue;
      long long cap = cap_[static_cast<std::size_t>(id)];
      long long pushed = dfs(v, t, limit < cap ? limit : cap);
      if (pushed > 0) {
        cap_[static_cast<std::size_t>(id)] -= pushed;
        cap_[static_cast<std::size_t>(id ^ 1)] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> to_;
  std::vector<long long> cap_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
  std::vector<int> queue_;
};

void require_node(const FlowNetwork& net, int v, const char* role) {
  if (v < 0 || v >= net.node_count()) {
    throw UsageError(std::string(role) + ": node " + std::to_string(v) + " out of range");
  }
}

}  // namespace

FlowNetwork::FlowNetwork(int node_count) : node_count_(node_count) {
  if (node_count_ < 1) {
    throw UsageError("flow network: node count must be positive, got " + std::to_string(node_count_));
  }
}

int FlowNetwork::add_arc(int tail, int head, long long lower, long long upper) {
  require_node(*this, tail, "add_arc");
  require_node(*this, head, "add_arc");
  if (lower < 0 || lower > upper) {
    throw UsageError("add_arc: bounds [" + std::to_string(lower) + ", " + std::to_string(upper) +
                     "] must satisfy 0 <= lower <= upper");
  }
  arcs_.push_back(Arc{tail, head, lower, upper});
  return static_cast<int>(arcs_.size()) - 1;
}

MaxFlowResult max_flow(const FlowNetwork& net, int source, int sink) {
  require_node(net, source, "max_flow");
  require_node(net, sink, "max_flow");
  if (source == sink) throw UsageError("max_flow: source and sink must differ");
  for (const Arc& a : net.arcs()) {
    if (a.lower != 0) {
      throw UsageError("max_flow: requires all lower bounds to be 0; use feasible_circulation");
    }
  }

  Dinic solver(net.node_count());
  for (const Arc& a : net.arcs()) solver.add(a.tail, a.head, a.upper);

  MaxFlowResult result;
  result.value = solver.run(source, sink);
  result.flow.on_arc.resize(net.arcs().size());
  for (std::size_t i = 0; i < net.arcs().size(); ++i) {
    result.flow.on_arc[i] = solver.flow_on(static_cast<int>(2 * i), net.arcs()[i].upper);
  }
  if (!flow_within_bounds(net, result.flow) || !flow_conserving(net, result.flow, source, sink)) {
    throw SoundnessError("max_flow produced a flow violating bounds or conservation");
  }
  return result;
}

std::optional<Flow> feasible_circulation(const FlowNetwork& net) {
  // Standard lower-bounds reduction: route every mandatory lower unit through
  // a super source/sink pair; the circulation is feasible iff all of that
  // mandatory excess can be carried.
  int n = net.node_count();
  int super_source = n;
  int super_sink = n + 1;

  Dinic solver(n + 2);
  std::vector<long long> excess(static_cast<std::size_t>(n), 0);
  for (const Arc& a : net.arcs()) {
    if (a.lower < 0 || a.lower > a.upper) {
      throw UsageError("feasible_circulation: arc bounds must satisfy 0 <= lower <= upper");
    }
    solver.add(a.tail, a.head, a.upper - a.lower);
    excess[static_cast<std::size_t>(a.head)] += a.lower;
    excess[static_cast<std::size_t>(a.tail)] -= a.lower;
  }
  long long need = 0;
  for (int v = 0; v < n; ++v) {
    if (excess[static_cast<std::size_t>(v)] > 0) {
      solver.add(super_source, v, excess[static_cast<std::size_t>(v)]);
      need += excess[static_cast<std::size_t>(v)];
    } else if (excess[static_cast<std::size_t>(v)] < 0) {
      solver.add(v, super_sink, -excess[static_cast<std::size_t>(v)]);
    }
  }

  if (solver.run(super_source, super_sink) != need) return std::nullopt;

  Flow flow;
  flow.on_arc.resize(net.arcs().size());
  for (std::size_t i = 0; i < net.arcs().size(); ++i) {
    const Arc& a = net.arcs()[i];
    flow.on_arc[i] = a.lower + solver.flow_on(static_cast<int>(2 * i), a.upper - a.lower);
  }
  if (!flow_within_bounds(net, flow) || !flow_conserving(net, flow)) {
    throw SoundnessError("feasible_circulation produced a flow violating bounds or conservation");
  }
  return flow;
}

bool flow_within_bounds(const FlowNetwork& net, const Flow& flow) {
  if (flow.on_arc.size() != net.arcs().size()) return false;
  for (std::size_t i = 0; i < net.arcs().size(); ++i) {
    const Arc& a = net.arcs()[i];
    if (flow.on_arc[i] < a.lower || flow.on_arc[i] > a.upper) return false;
  }
  return true;
}

bool flow_conserving(const FlowNetwork& net, const Flow& flow, int source, int sink) {
  if (flow.on_arc.size() != net.arcs().size()) return false;
  std::vector<long long> balance(static_cast<std::size_t>(net.node_count()), 0);
  for (std::size_t i = 0; i < net.arcs().size(); ++i) {
    balance[static_cast<std::size_t>(net.arcs()[i].tail)] -= flow.on_arc[i];
    balance[static_cast<std::size_t>(net.arcs()[i].head)] += flow.on_arc[i];
  }
  for (int v = 0; v < net.node_count(); ++v) {
    if (v == source || v == sink) continue;
    if (balance[static_cast<std::size_t>(v)] != 0) return false;
  }
  return true;
}

}  // namespace factorkit
