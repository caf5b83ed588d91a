#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "factorkit/vertex_set.hpp"

namespace factorkit {

// Unordered pair of distinct vertices, normalized to u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

class EdgeSubset;
struct VertexDeletion;

// Simple undirected graph on vertices 0..n-1, 1 <= n <= 64.
// No loops, no parallel edges.  Immutable after construction.
// Adjacency is kept both as sorted neighbor lists and as per-vertex bitmasks
// so that degrees of the form d_{G-S}(x) are single popcounts.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  // Sorted lexicographically by (u, v).
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;
  // Position of {u,v} in edges(), or -1 when absent.
  int edge_index(int u, int v) const;

  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;
  std::uint64_t adjacency_mask(int v) const { return adj_mask_[v]; }
  const std::vector<std::uint64_t>& adjacency_masks() const { return adj_mask_; }

  // Degree of x in G - S, i.e. neighbors of x outside S.  Requires x outside S.
  int degree_minus(VertexSet s, int x) const;

  // Number of edges with one end in s and the other in t.  Requires s and t disjoint.
  int edges_between(VertexSet s, VertexSet t) const;

  // Copy of the graph without the member edges of h.  Every member must be an edge.
  Graph remove_edges(const EdgeSubset& h) const;

  // Induced subgraph on V(G) - s with vertices relabeled to 0..n'-1 preserving
  // order.  s must be a proper subset of V(G).
  VertexDeletion delete_vertices(VertexSet s) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::uint64_t> adj_mask_;
};

// Result of Graph::delete_vertices: the subgraph plus the invertible label maps.
struct VertexDeletion {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for deleted vertices
  std::vector<int> new_to_old;
};

// Subset of a host graph's edges (the excluded subgraph H).  Spans the host's
// vertex set; only the edge set is restricted.
class EdgeSubset {
 public:
  explicit EdgeSubset(const Graph& host);  // empty subset
  EdgeSubset(const Graph& host, std::vector<Edge> members);

  int host_vertex_count() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool contains(int u, int v) const;
  // d_H(v): member edges incident to v.
  int degree(int v) const { return degree_[v]; }
  std::uint64_t adjacency_mask(int v) const { return adj_mask_[v]; }

  // e_H(x, s): member edges joining x to a vertex of s.  Requires x outside s.
  int edges_to_set(int x, VertexSet s) const;

  // e_H(s, t): member edges with one end in s and the other in t, disjoint s and t.
  int edges_between(VertexSet s, VertexSet t) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
  std::vector<std::uint64_t> adj_mask_;
};

// Total positive-integer function on the vertices of a host graph (g, f, r, ...).
class VertexFunc {
 public:
  explicit VertexFunc(std::vector<int> values);
  static VertexFunc constant(int n, int value);

  int size() const { return static_cast<int>(values_.size()); }
  int operator[](int v) const { return values_[v]; }
  const std::vector<int>& values() const { return values_; }

  long long sum() const;
  long long sum_over(VertexSet s) const;

  friend bool operator==(const VertexFunc&, const VertexFunc&) = default;

 private:
  std::vector<int> values_;
};

// True when lo(x) <= hi(x) for every vertex.  Sizes must match.
bool pointwise_le(const VertexFunc& lo, const VertexFunc& hi);

}  // namespace factorkit
