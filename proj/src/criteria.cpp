#include "factorkit/criteria.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <vector>

#include "factorkit/errors.hpp"

namespace factorkit {

namespace {

void require_instance(const Graph& graph, const VertexFunc& g, const VertexFunc& f) {
  if (g.size() != graph.vertex_count() || f.size() != graph.vertex_count()) {
    throw UsageError("criterion check: g and f must be defined on every vertex of the graph");
  }
  if (!pointwise_le(g, f)) {
    throw UsageError("criterion check: needs g <= f pointwise");
  }
}

void require_subset_cap(int n, int cap) {
  if (n > cap) {
    throw ResourceError("subset enumeration cap exceeded: n = " + std::to_string(n) +
                        " > cap " + std::to_string(cap) + " (the scan visits 2^n subsets)");
  }
}

// Contiguous chunking of [0, 2^n) used by the parallel kernels.  The merge
// prefers strictly smaller deficiencies in chunk order, so because chunks are
// ascending mask ranges the combined witness equals the serial one for every
// chunk count.
template <typename ScanRange>
ScanResult scan_chunked(std::uint64_t total, int jobs, ScanRange&& scan_range) {
  if (jobs < 1) throw UsageError("scan: jobs must be >= 1");
  std::uint64_t chunks = static_cast<std::uint64_t>(jobs);
  if (chunks > total) chunks = total;
  if (chunks <= 1) return scan_range(std::uint64_t{0}, total);

  std::vector<ScanResult> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for num_threads(jobs) schedule(static)
  for (long long c = 0; c < static_cast<long long>(chunks); ++c) {
    std::uint64_t begin = total / chunks * static_cast<std::uint64_t>(c) +
                          std::min<std::uint64_t>(static_cast<std::uint64_t>(c), total % chunks);
    std::uint64_t len = total / chunks + (static_cast<std::uint64_t>(c) < total % chunks ? 1 : 0);
    partial[static_cast<std::size_t>(c)] = scan_range(begin, begin + len);
  }
  ScanResult best = partial[0];
  for (std::size_t c = 1; c < partial.size(); ++c) {
    if (partial[c].min_deficiency < best.min_deficiency) best = partial[c];
  }
  return best;
}

}  // namespace

VertexSet t_set_anstee(const Graph& graph, VertexSet s, const VertexFunc& g) {
  if (g.size() != graph.vertex_count()) {
    throw UsageError("t_set_anstee: g must be defined on every vertex");
  }
  std::uint64_t t = 0;
  for (int x = 0; x < graph.vertex_count(); ++x) {
    if (s.contains(x)) continue;
    if (graph.degree_minus(s, x) < g[x]) t |= std::uint64_t{1} << x;
  }
  return VertexSet(t);
}

VertexSet t_set_excluding(const Graph& graph, const EdgeSubset& h, VertexSet s,
                          const VertexFunc& f) {
  if (f.size() != graph.vertex_count()) {
    throw UsageError("t_set_excluding: f must be defined on every vertex");
  }
  if (h.host_vertex_count() != graph.vertex_count()) {
    throw UsageError("t_set_excluding: edge subset was built for a different vertex count");
  }
  std::uint64_t t = 0;
  for (int x = 0; x < graph.vertex_count(); ++x) {
    if (s.contains(x)) continue;
    int corrected = graph.degree_minus(s, x) - h.degree(x) + h.edges_to_set(x, s);
    if (corrected < f[x]) t |= std::uint64_t{1} << x;
  }
  return VertexSet(t);
}

long long excluding_deficiency(const Graph& graph, const EdgeSubset& h, const VertexFunc& g,
                               const VertexFunc& f, VertexSet s) {
  require_instance(graph, g, f);
  VertexSet t = t_set_excluding(graph, h, s, f);
  long long value = g.sum_over(s);
  for (int x : t.vertices()) value += graph.degree_minus(s, x) - h.degree(x);
  value -= f.sum_over(t);
  value += h.edges_between(s, t);
  return value;
}

ScanResult scan_fractional_serial(const Graph& graph, const VertexFunc& g, const VertexFunc& f,
                                  std::uint64_t begin, std::uint64_t end) {
  int n = graph.vertex_count();
  const std::uint64_t* adj = graph.adjacency_masks().data();
  ScanResult best{std::numeric_limits<long long>::max(), 0};
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    long long def = 0;
    for (int x = 0; x < n; ++x) {
      if ((mask >> x) & 1u) {
        def += f[x];
      } else {
        int d = std::popcount(adj[x] & ~mask);
        if (d < g[x]) def += d - g[x];
      }
    }
    if (def < best.min_deficiency) best = ScanResult{def, mask};
  }
  return best;
}

ScanResult scan_excluding_serial(const Graph& graph, const EdgeSubset& h, const VertexFunc& g,
                                 const VertexFunc& f, std::uint64_t begin, std::uint64_t end) {
  int n = graph.vertex_count();
  const std::uint64_t* adj = graph.adjacency_masks().data();
  ScanResult best{std::numeric_limits<long long>::max(), 0};
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    long long def = 0;
    for (int x = 0; x < n; ++x) {
      if ((mask >> x) & 1u) {
        def += g[x];
      } else {
        // d_{G-S}(x) - d_H(x) + e_H(x,S); summing e_H(x,S) over x in T is
        // exactly e_H(S,T), so the per-vertex form matches the set formula.
        int c = std::popcount(adj[x] & ~mask) - h.degree(x) +
                std::popcount(h.adjacency_mask(x) & mask);
        if (c < f[x]) def += c - f[x];
      }
    }
    if (def < best.min_deficiency) best = ScanResult{def, mask};
  }
  return best;
}

ScanResult scan_fractional_parallel(const Graph& graph, const VertexFunc& g, const VertexFunc& f,
                                    int jobs) {
  std::uint64_t total = std::uint64_t{1} << graph.vertex_count();
  return scan_chunked(total, jobs, [&](std::uint64_t b, std::uint64_t e) {
    return scan_fractional_serial(graph, g, f, b, e);
  });
}

ScanResult scan_excluding_parallel(const Graph& graph, const EdgeSubset& h, const VertexFunc& g,
                                   const VertexFunc& f, int jobs) {
  std::uint64_t total = std::uint64_t{1} << graph.vertex_count();
  return scan_chunked(total, jobs, [&](std::uint64_t b, std::uint64_t e) {
    return scan_excluding_serial(graph, h, g, f, b, e);
  });
}

DeficiencyReport check_fractional_gf(const Graph& graph, const VertexFunc& g, const VertexFunc& f,
                                     const CheckOptions& opts) {
  require_instance(graph, g, f);
  require_subset_cap(graph.vertex_count(), opts.subset_cap);
  std::uint64_t total = std::uint64_t{1} << graph.vertex_count();
  ScanResult scan = opts.jobs <= 1 ? scan_fractional_serial(graph, g, f, 0, total)
                                   : scan_fractional_parallel(graph, g, f, opts.jobs);
  DeficiencyReport report;
  report.holds = scan.min_deficiency >= 0;
  report.min_deficiency = scan.min_deficiency;
  report.witness_S = VertexSet(scan.witness_mask);
  report.witness_T = t_set_anstee(graph, report.witness_S, g);
  report.scanned = total;
  return report;
}

DeficiencyReport check_all_gf_excluding(const Graph& graph, const EdgeSubset& h,
                                        const VertexFunc& g, const VertexFunc& f,
                                        const CheckOptions& opts) {
  require_instance(graph, g, f);
  if (h.host_vertex_count() != graph.vertex_count()) {
    throw UsageError("check_all_gf_excluding: edge subset was built for a different vertex count");
  }
  require_subset_cap(graph.vertex_count(), opts.subset_cap);
  std::uint64_t total = std::uint64_t{1} << graph.vertex_count();
  ScanResult scan = opts.jobs <= 1 ? scan_excluding_serial(graph, h, g, f, 0, total)
                                   : scan_excluding_parallel(graph, h, g, f, opts.jobs);
  DeficiencyReport report;
  report.holds = scan.min_deficiency >= 0;
  report.min_deficiency = scan.min_deficiency;
  report.witness_S = VertexSet(scan.witness_mask);
  report.witness_T = t_set_excluding(graph, h, report.witness_S, f);
  report.scanned = total;
  return report;
}

DeficiencyReport check_all_gf(const Graph& graph, const VertexFunc& g, const VertexFunc& f,
                              const CheckOptions& opts) {
  return check_all_gf_excluding(graph, EdgeSubset(graph), g, f, opts);
}

}  // namespace factorkit
