#pragma once

#include <cstdint>

#include "factorkit/graph.hpp"

namespace factorkit {

// Checks enumerate all 2^n vertex subsets, so n is capped.  The cap is a
// configuration value; exceeding it raises ResourceError, never silent sampling.
inline constexpr int kDefaultSubsetCap = 26;

struct CheckOptions {
  int subset_cap = kDefaultSubsetCap;
  // Worker count for the partitioned scan.  Results are bit-identical for any value.
  int jobs = 1;
};

// Verdict of a subset-enumeration criterion.  holds iff min_deficiency >= 0.
// witness_S is the minimizing subset (ties broken by smallest bitmask value)
// and witness_T the T-set it induces under the criterion's rule.
struct DeficiencyReport {
  bool holds = false;
  long long min_deficiency = 0;
  VertexSet witness_S;
  VertexSet witness_T;
  std::uint64_t scanned = 0;
};

// T-set of the single-factor criterion: vertices x outside s with d_{G-S}(x) < g(x).
VertexSet t_set_anstee(const Graph& graph, VertexSet s, const VertexFunc& g);

// T-set of the exclusion criterion: x outside s with
// d_{G-S}(x) - d_H(x) + e_H(x,S) < f(x).
VertexSet t_set_excluding(const Graph& graph, const EdgeSubset& h, VertexSet s,
                          const VertexFunc& f);

// g(S) + sum_{x in T} d_{G-S}(x) - f(T) - sum_{x in T} d_H(x) + e_H(S,T),
// with T = t_set_excluding(graph, h, s, f).  Negative iff s witnesses failure.
long long excluding_deficiency(const Graph& graph, const EdgeSubset& h,
                               const VertexFunc& g, const VertexFunc& f, VertexSet s);

struct ScanResult {
  long long min_deficiency = 0;
  std::uint64_t witness_mask = 0;
};

// Serial reference kernels scanning subset masks in [begin, end).  The first
// mask attaining the minimum wins, so the witness is the smallest such mask.
ScanResult scan_fractional_serial(const Graph& graph, const VertexFunc& g,
                                  const VertexFunc& f, std::uint64_t begin,
                                  std::uint64_t end);
ScanResult scan_excluding_serial(const Graph& graph, const EdgeSubset& h,
                                 const VertexFunc& g, const VertexFunc& f,
                                 std::uint64_t begin, std::uint64_t end);

// Partitioned kernels: the mask range is split into contiguous chunks scanned
// by an OpenMP team, merged in chunk order.  Bit-identical to the serial scan
// for every job count.
ScanResult scan_fractional_parallel(const Graph& graph, const VertexFunc& g,
                                    const VertexFunc& f, int jobs);
ScanResult scan_excluding_parallel(const Graph& graph, const EdgeSubset& h,
                                   const VertexFunc& g, const VertexFunc& f, int jobs);

// Single-factor existence: holds iff f(S) + sum_{x in T} d_{G-S}(x) - g(T) >= 0
// for every S, T = t_set_anstee.  Decides fractional (g,f)-factor existence.
DeficiencyReport check_fractional_gf(const Graph& graph, const VertexFunc& g,
                                     const VertexFunc& f, const CheckOptions& opts = {});

// All-factors existence: holds iff g(S) + sum_{x in T} d_{G-S}(x) - f(T) >= 0
// for every S, T = {x outside S : d_{G-S}(x) < f(x)}.  Decides whether a
// fractional r-factor exists for every integer g <= r <= f.
DeficiencyReport check_all_gf(const Graph& graph, const VertexFunc& g,
                              const VertexFunc& f, const CheckOptions& opts = {});

// Exclusion variant: decides whether, for every integer g <= r <= f, a
// fractional r-factor exists with zero weight on the member edges of h.
DeficiencyReport check_all_gf_excluding(const Graph& graph, const EdgeSubset& h,
                                        const VertexFunc& g, const VertexFunc& f,
                                        const CheckOptions& opts = {});

}  // namespace factorkit
