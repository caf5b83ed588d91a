#include "factorkit/generators.hpp"

#include <numeric>
#include <string>

#include "factorkit/errors.hpp"

namespace factorkit {

namespace {

void require_probability(std::uint64_t num, const char* role) {
  if (num > kProbabilityOne) {
    throw UsageError(std::string(role) + ": probability numerator " + std::to_string(num) +
                     " exceeds 2^53");
  }
}

}  // namespace

Graph gen_random_graph(int n, std::uint64_t p_num, Prng& rng) {
  if (n < 1 || n > 64) {
    throw UsageError("gen_random_graph: n must be in [1, 64], got " + std::to_string(n));
  }
  require_probability(p_num, "gen_random_graph");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_u53() < p_num) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

EdgeSubset gen_random_edge_subset(const Graph& g, std::uint64_t q_num, Prng& rng) {
  require_probability(q_num, "gen_random_edge_subset");
  std::vector<Edge> members;
  for (const Edge& e : g.edges()) {
    if (rng.next_u53() < q_num) members.push_back(e);
  }
  return EdgeSubset(g, std::move(members));
}

std::pair<VertexFunc, VertexFunc> gen_random_gf(int n, int gmax, int fmax, Prng& rng) {
  if (n < 1) throw UsageError("gen_random_gf: n must be positive");
  if (gmax < 1 || gmax > fmax) {
    throw UsageError("gen_random_gf: needs 1 <= gmax <= fmax, got gmax = " + std::to_string(gmax) +
                     ", fmax = " + std::to_string(fmax));
  }
  std::vector<int> g(static_cast<std::size_t>(n));
  std::vector<int> f(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    g[static_cast<std::size_t>(v)] =
        1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(gmax)));
    int span = fmax - g[static_cast<std::size_t>(v)] + 1;
    f[static_cast<std::size_t>(v)] =
        g[static_cast<std::size_t>(v)] +
        static_cast<int>(rng.next_below(static_cast<std::uint64_t>(span)));
  }
  return {VertexFunc(std::move(g)), VertexFunc(std::move(f))};
}

CliqueInstance gen_clique_partition_instance(const std::vector<int>& part_sizes,
                                             std::uint64_t p_extra_num, Prng& rng) {
  if (part_sizes.size() < 2) {
    throw UsageError("gen_clique_partition_instance: needs at least 2 parts");
  }
  require_probability(p_extra_num, "gen_clique_partition_instance");
  int n = 0;
  for (int size : part_sizes) {
    if (size < 1) throw UsageError("gen_clique_partition_instance: part sizes must be positive");
    n += size;
  }
  if (n > 64) {
    throw UsageError("gen_clique_partition_instance: total size " + std::to_string(n) +
                     " exceeds 64 vertices");
  }

  std::vector<int> part_of(static_cast<std::size_t>(n));
  CliquePartition partition;
  int next = 0;
  for (std::size_t idx = 0; idx < part_sizes.size(); ++idx) {
    std::uint64_t bits = 0;
    for (int k = 0; k < part_sizes[idx]; ++k) {
      part_of[static_cast<std::size_t>(next)] = static_cast<int>(idx);
      bits |= std::uint64_t{1} << next;
      ++next;
    }
    partition.parts.push_back(VertexSet(bits));
  }

  // Intra-part pairs are always edges and consume no draw; inter-part pairs
  // draw once each, in lexicographic order.
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[static_cast<std::size_t>(u)] == part_of[static_cast<std::size_t>(v)]) {
        edges.emplace_back(u, v);
      } else if (rng.next_u53() < p_extra_num) {
        edges.emplace_back(u, v);
      }
    }
  }
  return CliqueInstance{Graph(n, std::move(edges)), std::move(partition)};
}

}  // namespace factorkit
