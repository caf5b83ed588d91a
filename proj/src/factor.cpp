#include "factorkit/factor.hpp"

#include <cassert>
#include <string>

#include "factorkit/errors.hpp"

namespace factorkit {

namespace {

void require_sized(const Graph& graph, const VertexFunc& func, const char* role) {
  if (func.size() != graph.vertex_count()) {
    throw UsageError(std::string(role) + ": function is defined on " + std::to_string(func.size()) +
                     " vertices, graph has " + std::to_string(graph.vertex_count()));
  }
}

std::string fraction_str(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

std::vector<int> loads_of(const Graph& graph, const std::vector<int>& twice) {
  std::vector<int> load(static_cast<std::size_t>(graph.vertex_count()), 0);
  for (std::size_t i = 0; i < twice.size(); ++i) {
    load[static_cast<std::size_t>(graph.edges()[i].u)] += twice[i];
    load[static_cast<std::size_t>(graph.edges()[i].v)] += twice[i];
  }
  return load;
}

}  // namespace

FlowNetwork build_factor_network(const Graph& g, const VertexFunc& lo, const VertexFunc& hi) {
  require_sized(g, lo, "build_factor_network");
  require_sized(g, hi, "build_factor_network");
  if (!pointwise_le(lo, hi)) {
    throw UsageError("build_factor_network: lower bound exceeds upper bound at some vertex");
  }

  int n = g.vertex_count();
  FlowNetwork net(2 + 2 * n);
  auto a_node = [](int v) { return 2 + v; };
  auto b_node = [n](int v) { return 2 + n + v; };

  for (const Edge& e : g.edges()) {
    net.add_arc(a_node(e.u), b_node(e.v), 0, 1);
    net.add_arc(a_node(e.v), b_node(e.u), 0, 1);
  }
  for (int v = 0; v < n; ++v) {
    net.add_arc(0, a_node(v), lo[v], hi[v]);
    net.add_arc(b_node(v), 1, lo[v], hi[v]);
  }
  long long total_hi = hi.sum();
  // Desk-scale inputs keep every capacity far below 64-bit range.
  assert(total_hi <= (1ll << 40));
  net.add_arc(1, 0, 0, total_hi);
  return net;
}

std::optional<FactorWitness> construct_fractional_factor(const Graph& graph,
                                                         const VertexFunc& g,
                                                         const VertexFunc& f) {
  require_sized(graph, g, "construct_fractional_factor");
  require_sized(graph, f, "construct_fractional_factor");
  if (!pointwise_le(g, f)) {
    throw UsageError("construct_fractional_factor: needs g <= f pointwise");
  }

  FlowNetwork net = build_factor_network(graph, g, f);
  std::optional<Flow> circulation = feasible_circulation(net);
  if (!circulation) return std::nullopt;

  int m = graph.edge_count();
  FactorWitness witness;
  witness.assignment.twice.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    witness.assignment.twice[static_cast<std::size_t>(i)] =
        static_cast<int>(circulation->on_arc[static_cast<std::size_t>(2 * i)] +
                         circulation->on_arc[static_cast<std::size_t>(2 * i + 1)]);
  }
  witness.twice_load = loads_of(graph, witness.assignment.twice);

  if (auto bad = validate_witness(graph, witness, g, f, EdgeSubset(graph))) {
    throw SoundnessError("construct_fractional_factor assembled an invalid witness: " + *bad);
  }
  return witness;
}

std::optional<FactorWitness> construct_excluding(const Graph& graph, const EdgeSubset& h,
                                                 const VertexFunc& r) {
  require_sized(graph, r, "construct_excluding");
  Graph reduced = graph.remove_edges(h);
  std::optional<FactorWitness> inner = construct_fractional_factor(reduced, r, r);
  if (!inner) return std::nullopt;

  // Lift back to the host edge list: surviving edges keep their value, member
  // edges of h get 0.  Both edge lists are sorted, so one walk suffices.
  FactorWitness witness;
  witness.assignment.twice.assign(static_cast<std::size_t>(graph.edge_count()), 0);
  std::size_t j = 0;
  const std::vector<Edge>& host_edges = graph.edges();
  const std::vector<Edge>& kept_edges = reduced.edges();
  for (std::size_t i = 0; i < host_edges.size(); ++i) {
    if (j < kept_edges.size() && kept_edges[j] == host_edges[i]) {
      witness.assignment.twice[i] = inner->assignment.twice[j];
      ++j;
    }
  }
  witness.twice_load = loads_of(graph, witness.assignment.twice);

  if (auto bad = validate_witness(graph, witness, r, r, h)) {
    throw SoundnessError("construct_excluding assembled an invalid witness: " + *bad);
  }
  return witness;
}

std::optional<std::string> validate_witness(const Graph& graph, const FactorWitness& witness,
                                            const VertexFunc& g, const VertexFunc& f,
                                            const EdgeSubset& h) {
  require_sized(graph, g, "validate_witness");
  require_sized(graph, f, "validate_witness");
  if (static_cast<int>(witness.assignment.twice.size()) != graph.edge_count()) {
    throw UsageError("validate_witness: assignment covers " +
                     std::to_string(witness.assignment.twice.size()) + " edges, graph has " +
                     std::to_string(graph.edge_count()));
  }
  if (h.host_vertex_count() != graph.vertex_count()) {
    throw UsageError("validate_witness: edge subset was built for a different vertex count");
  }

  for (std::size_t i = 0; i < witness.assignment.twice.size(); ++i) {
    int t = witness.assignment.twice[i];
    const Edge& e = graph.edges()[i];
    if (t < 0 || t > 2) {
      return "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}: weight " +
             fraction_str(t) + " outside [0, 1]";
    }
  }
  std::vector<int> load = loads_of(graph, witness.assignment.twice);
  for (int v = 0; v < graph.vertex_count(); ++v) {
    int l = load[static_cast<std::size_t>(v)];
    if (l < 2 * g[v] || l > 2 * f[v]) {
      return "vertex " + std::to_string(v) + ": load " + fraction_str(l) + " outside [" +
             std::to_string(g[v]) + ", " + std::to_string(f[v]) + "]";
    }
  }
  for (const Edge& e : h.edges()) {
    int idx = graph.edge_index(e.u, e.v);
    if (idx < 0) {
      throw UsageError("validate_witness: excluded edge {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "} is not an edge of the graph");
    }
    int t = witness.assignment.twice[static_cast<std::size_t>(idx)];
    if (t != 0) {
      return "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
             "}: excluded edge carries weight " + fraction_str(t);
    }
  }
  return std::nullopt;
}

}  // namespace factorkit
