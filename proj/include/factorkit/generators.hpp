#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "factorkit/graph.hpp"
#include "factorkit/prng.hpp"
#include "factorkit/sufficient.hpp"

namespace factorkit {

// Probabilities are passed as integer numerators over 2^53: a draw of the top
// 53 prng bits is accepted iff draw < numerator.  Numerator 2^53 means always.
inline constexpr std::uint64_t kProbabilityOne = std::uint64_t{1} << 53;

// G(n, p): all pairs u < v scanned in lexicographic order, one draw per pair.
Graph gen_random_graph(int n, std::uint64_t p_num, Prng& rng);

// Each edge of g kept independently with probability q_num / 2^53, scanned in
// sorted edge order, one draw per edge.
EdgeSubset gen_random_edge_subset(const Graph& g, std::uint64_t q_num, Prng& rng);

// g(x) uniform in [1, gmax], then f(x) uniform in [g(x), fmax]; two draws per
// vertex in vertex order.  Requires 1 <= gmax <= fmax.
std::pair<VertexFunc, VertexFunc> gen_random_gf(int n, int gmax, int fmax, Prng& rng);

struct CliqueInstance {
  Graph graph;
  CliquePartition partition;
};

// Vertices assigned to consecutive parts of the given sizes (at least two).
// All intra-part edges are present; pairs across parts are scanned in
// lexicographic order and added independently with probability p_extra.
CliqueInstance gen_clique_partition_instance(const std::vector<int>& part_sizes,
                                             std::uint64_t p_extra_num, Prng& rng);

}  // namespace factorkit
