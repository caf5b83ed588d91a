#include "factorkit/sufficient.hpp"

#include <string>

#include "factorkit/errors.hpp"

namespace factorkit {

namespace {

void require_instance(const Graph& graph, const EdgeSubset& h, const VertexFunc& g,
                      const VertexFunc& f, const char* role) {
  if (g.size() != graph.vertex_count() || f.size() != graph.vertex_count()) {
    throw UsageError(std::string(role) + ": g and f must be defined on every vertex");
  }
  if (!pointwise_le(g, f)) {
    throw UsageError(std::string(role) + ": needs g <= f pointwise");
  }
  if (h.host_vertex_count() != graph.vertex_count()) {
    throw UsageError(std::string(role) + ": edge subset was built for a different vertex count");
  }
}

// Compact one-line instance dump for soundness diagnostics; kept free of any
// serializer dependency so this module stays self-contained.
std::string describe_instance(const Graph& graph, const EdgeSubset& h, const VertexFunc& g,
                              const VertexFunc& f) {
  std::string out = "n=" + std::to_string(graph.vertex_count()) + " edges=[";
  for (std::size_t i = 0; i < graph.edges().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(graph.edges()[i].u) + "-" + std::to_string(graph.edges()[i].v);
  }
  out += "] h=[";
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(h.edges()[i].u) + "-" + std::to_string(h.edges()[i].v);
  }
  out += "] g=[";
  for (int v = 0; v < g.size(); ++v) out += (v ? "," : "") + std::to_string(g[v]);
  out += "] f=[";
  for (int v = 0; v < f.size(); ++v) out += (v ? "," : "") + std::to_string(f[v]);
  out += "]";
  return out;
}

}  // namespace

std::optional<std::string> validate_complete_factor(const Graph& graph,
                                                    const CliquePartition& partition) {
  int n = graph.vertex_count();
  VertexSet covered;
  for (std::size_t idx = 0; idx < partition.parts.size(); ++idx) {
    VertexSet part = partition.parts[idx];
    if (part.empty()) {
      return "part " + std::to_string(idx) + ": empty";
    }
    if (!part.subset_of(VertexSet::full(n))) {
      return "part " + std::to_string(idx) + ": vertex out of range";
    }
    if (part.intersects(covered)) {
      return "part " + std::to_string(idx) + ": overlaps an earlier part";
    }
    covered = covered | part;
    std::vector<int> members = part.vertices();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (!graph.has_edge(members[i], members[j])) {
          return "part " + std::to_string(idx) + ": {" + std::to_string(members[i]) + "," +
                 std::to_string(members[j]) + "} is not an edge, the part is not a clique";
        }
      }
    }
  }
  if (covered != VertexSet::full(n)) {
    VertexSet missing = VertexSet::full(n) - covered;
    return "parts do not cover vertex " + std::to_string(missing.vertices().front());
  }
  return std::nullopt;
}

RestrictedInstance restrict_instance(const Graph& graph, const EdgeSubset& h, const VertexFunc& g,
                                     const VertexFunc& f, VertexSet removed) {
  require_instance(graph, h, g, f, "restrict_instance");
  VertexDeletion del = graph.delete_vertices(removed);

  std::vector<Edge> surviving;
  for (const Edge& e : h.edges()) {
    if (removed.contains(e.u) || removed.contains(e.v)) continue;
    surviving.emplace_back(del.old_to_new[static_cast<std::size_t>(e.u)],
                           del.old_to_new[static_cast<std::size_t>(e.v)]);
  }
  std::vector<int> gv, fv;
  gv.reserve(del.new_to_old.size());
  fv.reserve(del.new_to_old.size());
  for (int old : del.new_to_old) {
    gv.push_back(g[old]);
    fv.push_back(f[old]);
  }
  EdgeSubset restricted_h(del.graph, std::move(surviving));
  return RestrictedInstance{del.graph, std::move(restricted_h), VertexFunc(std::move(gv)),
                            VertexFunc(std::move(fv)), std::move(del.old_to_new),
                            std::move(del.new_to_old)};
}

SufficiencyReport check_degree_ratio_premise(const Graph& graph, const EdgeSubset& h,
                                             const VertexFunc& g, const VertexFunc& f) {
  require_instance(graph, h, g, f, "check_degree_ratio_premise");
  SufficiencyReport report;
  int n = graph.vertex_count();
  for (int x = 0; x < n; ++x) {
    if (graph.degree(x) < f[x] + h.degree(x)) {
      report.premise_holds = false;
      report.violating_vertex = x;
      return report;
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      long long lhs = static_cast<long long>(g[x]) * (graph.degree(y) - h.degree(y));
      long long rhs = static_cast<long long>(graph.degree(x)) * f[y];
      if (lhs < rhs) {
        report.premise_holds = false;
        report.violating_pair = std::make_pair(x, y);
        return report;
      }
    }
  }
  return report;
}

SufficiencyReport check_degree_ratio(const Graph& graph, const EdgeSubset& h, const VertexFunc& g,
                                     const VertexFunc& f, bool verify_conclusion,
                                     const CheckOptions& opts) {
  SufficiencyReport report = check_degree_ratio_premise(graph, h, g, f);
  if (verify_conclusion) {
    report.conclusion_checked = true;
    report.conclusion_holds = check_all_gf_excluding(graph, h, g, f, opts).holds;
    if (report.premise_holds && !report.conclusion_holds) {
      throw SoundnessError(
          "implementation bug: degree-ratio premise holds but the exclusion criterion fails on " +
          describe_instance(graph, h, g, f));
    }
  }
  return report;
}

SufficiencyReport check_clique_partition(const Graph& graph, const CliquePartition& partition,
                                         const EdgeSubset& h, const VertexFunc& g,
                                         const VertexFunc& f, bool verify_conclusion,
                                         const CheckOptions& opts) {
  require_instance(graph, h, g, f, "check_clique_partition");
  if (auto bad = validate_complete_factor(graph, partition)) {
    throw UsageError("check_clique_partition: invalid partition: " + *bad);
  }
  if (partition.parts.size() < 2) {
    throw UsageError("check_clique_partition: the complete-factor must have at least 2 components");
  }

  SufficiencyReport report;
  for (std::size_t idx = 0; idx < partition.parts.size(); ++idx) {
    RestrictedInstance sub = restrict_instance(graph, h, g, f, partition.parts[idx]);
    if (!check_all_gf_excluding(sub.graph, sub.h, sub.g, sub.f, opts).holds) {
      report.premise_holds = false;
      report.violating_part = static_cast<int>(idx);
      break;
    }
  }
  if (verify_conclusion) {
    report.conclusion_checked = true;
    report.conclusion_holds = check_all_gf_excluding(graph, h, g, f, opts).holds;
    if (report.premise_holds && !report.conclusion_holds) {
      throw SoundnessError(
          "implementation bug: clique-partition premise holds but the exclusion criterion fails on " +
          describe_instance(graph, h, g, f));
    }
  }
  return report;
}

}  // namespace factorkit
