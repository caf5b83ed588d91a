#include "factorkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "factorkit/errors.hpp"

namespace factorkit {

namespace {

std::string edge_str(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

// Bits at positions >= n mean the set refers to vertices the host lacks.
void require_within(VertexSet s, int n, const char* role) {
  if ((s.bits() & ~VertexSet::full(n).bits()) != 0) {
    throw UsageError(std::string(role) + ": vertex set is not a subset of the host's vertices");
  }
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1 || n_ > 64) {
    throw UsageError("vertex count must be in [1, 64], got " + std::to_string(n_));
  }
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= n_) {
      throw UsageError("edge " + edge_str(e) + ": endpoint out of range for n = " + std::to_string(n_));
    }
    if (e.u == e.v) {
      throw UsageError("edge " + edge_str(e) + ": loops are not allowed");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw UsageError("edge " + edge_str(*dup) + ": duplicate edge");
  }

  neighbors_.assign(static_cast<std::size_t>(n_), {});
  adj_mask_.assign(static_cast<std::size_t>(n_), 0);
  for (const Edge& e : edges_) {
    neighbors_[static_cast<std::size_t>(e.u)].push_back(e.v);
    neighbors_[static_cast<std::size_t>(e.v)].push_back(e.u);
    adj_mask_[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
    adj_mask_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
  }
  for (auto& nbrs : neighbors_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
  return (adj_mask_[static_cast<std::size_t>(u)] >> v) & 1u;
}

int Graph::edge_index(int u, int v) const {
  Edge key(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

int Graph::degree(int v) const {
  if (v < 0 || v >= n_) throw UsageError("degree: vertex " + std::to_string(v) + " out of range");
  return static_cast<int>(neighbors_[static_cast<std::size_t>(v)].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw UsageError("neighbors: vertex " + std::to_string(v) + " out of range");
  return neighbors_[static_cast<std::size_t>(v)];
}

int Graph::degree_minus(VertexSet s, int x) const {
  if (x < 0 || x >= n_) throw UsageError("degree_minus: vertex " + std::to_string(x) + " out of range");
  require_within(s, n_, "degree_minus");
  if (s.contains(x)) {
    throw UsageError("degree_minus: vertex " + std::to_string(x) + " lies in S, d_{G-S} is undefined there");
  }
  return std::popcount(adj_mask_[static_cast<std::size_t>(x)] & ~s.bits());
}

int Graph::edges_between(VertexSet s, VertexSet t) const {
  require_within(s, n_, "edges_between");
  require_within(t, n_, "edges_between");
  if (s.intersects(t)) throw UsageError("edges_between: the two sets must be disjoint");
  int count = 0;
  for (const Edge& e : edges_) {
    bool crosses = (s.contains(e.u) && t.contains(e.v)) || (s.contains(e.v) && t.contains(e.u));
    count += crosses ? 1 : 0;
  }
  return count;
}

Graph Graph::remove_edges(const EdgeSubset& h) const {
  if (h.host_vertex_count() != n_) {
    throw UsageError("remove_edges: edge subset was built for a different vertex count");
  }
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  const std::vector<Edge>& members = h.edges();
  // Both lists are sorted; a single merge walk filters the members out.
  std::size_t j = 0;
  for (const Edge& e : edges_) {
    while (j < members.size() && members[j] < e) ++j;
    if (j < members.size() && members[j] == e) continue;
    kept.push_back(e);
  }
  // Membership of h in E(G) was checked at construction; a stale subset from
  // another graph with the same n would slip through the walk above.
  if (edges_.size() - kept.size() != members.size()) {
    throw UsageError("remove_edges: a member of the subset is not an edge of this graph");
  }
  return Graph(n_, std::move(kept));
}

VertexDeletion Graph::delete_vertices(VertexSet s) const {
  require_within(s, n_, "delete_vertices");
  if (s == VertexSet::full(n_)) {
    throw UsageError("delete_vertices: deleting every vertex leaves no graph");
  }
  std::vector<int> old_to_new(static_cast<std::size_t>(n_), -1);
  std::vector<int> new_to_old;
  new_to_old.reserve(static_cast<std::size_t>(n_ - s.count()));
  for (int v = 0; v < n_; ++v) {
    if (s.contains(v)) continue;
    old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(new_to_old.size());
    new_to_old.push_back(v);
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (s.contains(e.u) || s.contains(e.v)) continue;
    kept.emplace_back(old_to_new[static_cast<std::size_t>(e.u)],
                      old_to_new[static_cast<std::size_t>(e.v)]);
  }
  return VertexDeletion{Graph(static_cast<int>(new_to_old.size()), std::move(kept)),
                        std::move(old_to_new), std::move(new_to_old)};
}

EdgeSubset::EdgeSubset(const Graph& host) : n_(host.vertex_count()) {
  degree_.assign(static_cast<std::size_t>(n_), 0);
  adj_mask_.assign(static_cast<std::size_t>(n_), 0);
}

EdgeSubset::EdgeSubset(const Graph& host, std::vector<Edge> members)
    : n_(host.vertex_count()), edges_(std::move(members)) {
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw UsageError("edge subset: duplicate member " + edge_str(*dup));
  }
  for (const Edge& e : edges_) {
    if (!host.has_edge(e.u, e.v)) {
      throw UsageError("edge subset: member " + edge_str(e) + " is not an edge of the host graph");
    }
  }
  degree_.assign(static_cast<std::size_t>(n_), 0);
  adj_mask_.assign(static_cast<std::size_t>(n_), 0);
  for (const Edge& e : edges_) {
    degree_[static_cast<std::size_t>(e.u)] += 1;
    degree_[static_cast<std::size_t>(e.v)] += 1;
    adj_mask_[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
    adj_mask_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
  }
}

bool EdgeSubset::contains(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
  return (adj_mask_[static_cast<std::size_t>(u)] >> v) & 1u;
}

int EdgeSubset::edges_to_set(int x, VertexSet s) const {
  if (x < 0 || x >= n_) throw UsageError("edges_to_set: vertex " + std::to_string(x) + " out of range");
  require_within(s, n_, "edges_to_set");
  if (s.contains(x)) {
    throw UsageError("edges_to_set: vertex " + std::to_string(x) + " lies in the set");
  }
  return std::popcount(adj_mask_[static_cast<std::size_t>(x)] & s.bits());
}

int EdgeSubset::edges_between(VertexSet s, VertexSet t) const {
  require_within(s, n_, "edges_between");
  require_within(t, n_, "edges_between");
  if (s.intersects(t)) throw UsageError("edges_between: the two sets must be disjoint");
  int count = 0;
  for (const Edge& e : edges_) {
    bool crosses = (s.contains(e.u) && t.contains(e.v)) || (s.contains(e.v) && t.contains(e.u));
    count += crosses ? 1 : 0;
  }
  return count;
}

VertexFunc::VertexFunc(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw UsageError("vertex function: must be defined on at least one vertex");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 1) {
      throw UsageError("vertex function: value at vertex " + std::to_string(i) +
                       " is " + std::to_string(values_[i]) + ", must be positive");
    }
  }
}

VertexFunc VertexFunc::constant(int n, int value) {
  return VertexFunc(std::vector<int>(static_cast<std::size_t>(n), value));
}

long long VertexFunc::sum() const {
  long long total = 0;
  for (int v : values_) total += v;
  return total;
}

long long VertexFunc::sum_over(VertexSet s) const {
  long long total = 0;
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) {
    int v = std::countr_zero(b);
    if (v >= size()) throw UsageError("sum_over: vertex set exceeds the function's domain");
    total += values_[static_cast<std::size_t>(v)];
  }
  return total;
}

bool pointwise_le(const VertexFunc& lo, const VertexFunc& hi) {
  if (lo.size() != hi.size()) {
    throw UsageError("pointwise_le: functions are defined on different vertex counts");
  }
  for (int v = 0; v < lo.size(); ++v) {
    if (lo[v] > hi[v]) return false;
  }
  return true;
}

}  // namespace factorkit
