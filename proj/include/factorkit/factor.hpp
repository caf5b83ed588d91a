#pragma once

#include <optional>
#include <string>
#include <vector>

#include "factorkit/flow.hpp"
#include "factorkit/graph.hpp"

namespace factorkit {

// Edge weights in {0, 1/2, 1} stored as twice-values in {0, 1, 2}, aligned
// with Graph::edges().  Keeping doubled integers avoids floating point.
struct HalfIntegralAssignment {
  std::vector<int> twice;
};

struct FactorWitness {
  HalfIntegralAssignment assignment;
  // Per vertex: sum of twice-values over incident edges (= 2 * load).
  std::vector<int> twice_load;
};

// Double-cover circulation network deciding fractional (lo,hi)-factor existence.
// Layout (fixed, relied on to read flows back):
//   node 0 = s, node 1 = t, node 2+v = A_v, node 2+n+v = B_v;
//   arc 2i   = A_u -> B_v  bounds [0,1]   for edge i = {u,v} in edges() order,
//   arc 2i+1 = A_v -> B_u  bounds [0,1];
//   then per vertex v ascending: s -> A_v [lo(v), hi(v)], B_v -> t [lo(v), hi(v)];
//   final arc t -> s [0, sum hi].
// A feasible circulation exists iff a fractional (lo,hi)-factor exists, and
// twice(e_i) = flow(2i) + flow(2i+1) recovers a half-integral one.
FlowNetwork build_factor_network(const Graph& g, const VertexFunc& lo, const VertexFunc& hi);

// Half-integral fractional (g,f)-factor, or nullopt when none exists.
// Deterministic: identical inputs yield the identical witness.
std::optional<FactorWitness> construct_fractional_factor(const Graph& graph,
                                                         const VertexFunc& g,
                                                         const VertexFunc& f);

// Fractional r-factor carrying zero weight on every member edge of h,
// i.e. a factor of graph - E(h) reported on the host graph's edge list.
std::optional<FactorWitness> construct_excluding(const Graph& graph,
                                                 const EdgeSubset& h,
                                                 const VertexFunc& r);

// nullopt when the witness is a fractional (g,f)-factor avoiding h; otherwise
// a description naming the first offending vertex or edge.
std::optional<std::string> validate_witness(const Graph& graph,
                                            const FactorWitness& witness,
                                            const VertexFunc& g,
                                            const VertexFunc& f,
                                            const EdgeSubset& h);

}  // namespace factorkit
