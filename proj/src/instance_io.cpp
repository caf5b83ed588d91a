#include "factorkit/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "factorkit/errors.hpp"

namespace factorkit {

namespace {

long long get_int(const Json& value, const std::string& field) {
  if (!value.is_number_integer()) {
    throw UsageError(field + ": expected an integer");
  }
  return value.get<long long>();
}

// [u, v] with 0 <= u < v < n.  The strict order is part of the schema, so
// [1, 0] is rejected rather than normalized.
Edge get_edge(const Json& value, int n, const std::string& field) {
  if (!value.is_array() || value.size() != 2) {
    throw UsageError(field + ": expected a pair [u, v]");
  }
  long long u = get_int(value[0], field);
  long long v = get_int(value[1], field);
  if (u < 0 || v >= n || u >= v) {
    throw UsageError(field + ": needs 0 <= u < v < n, got [" + std::to_string(u) + ", " +
                     std::to_string(v) + "] with n = " + std::to_string(n));
  }
  return Edge(static_cast<int>(u), static_cast<int>(v));
}

std::vector<Edge> get_edge_list(const Json& value, int n, const std::string& field) {
  if (!value.is_array()) {
    throw UsageError(field + ": expected an array of [u, v] pairs");
  }
  std::vector<Edge> edges;
  edges.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    edges.push_back(get_edge(value[i], n, field + "[" + std::to_string(i) + "]"));
  }
  return edges;
}

std::vector<int> get_int_list(const Json& value, int n, const std::string& field) {
  if (!value.is_array() || static_cast<int>(value.size()) != n) {
    throw UsageError(field + ": expected an array of " + std::to_string(n) + " integers");
  }
  std::vector<int> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    long long x = get_int(value[i], field + "[" + std::to_string(i) + "]");
    // The upper bound keeps doubled values and degree products inside int range.
    if (x < 1 || x > 1073741823) {
      throw UsageError(field + "[" + std::to_string(i) + "]: value " + std::to_string(x) +
                       " outside [1, 2^30 - 1]");
    }
    out.push_back(static_cast<int>(x));
  }
  return out;
}

Json edges_to_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(Json::array({e.u, e.v}));
  return out;
}

Json vertices_to_json(VertexSet s) {
  Json out = Json::array();
  for (int v : s.vertices()) out.push_back(v);
  return out;
}

}  // namespace

Instance parse_instance(const Json& doc) {
  if (!doc.is_object()) throw UsageError("instance: expected a JSON object");
  if (!doc.contains("n")) throw UsageError("n: field is required");
  long long n64 = get_int(doc.at("n"), "n");
  if (n64 < 1 || n64 > 64) {
    throw UsageError("n: must be in [1, 64], got " + std::to_string(n64));
  }
  int n = static_cast<int>(n64);

  if (!doc.contains("edges")) throw UsageError("edges: field is required");
  std::vector<Edge> edges = get_edge_list(doc.at("edges"), n, "edges");
  for (std::size_t i = 1; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (edges[i] == edges[j]) {
        throw UsageError("edges[" + std::to_string(i) + "]: duplicate pair");
      }
    }
  }
  Graph graph(n, edges);

  std::vector<Edge> h_edges;
  if (doc.contains("h_edges")) {
    h_edges = get_edge_list(doc.at("h_edges"), n, "h_edges");
    for (std::size_t i = 0; i < h_edges.size(); ++i) {
      if (!graph.has_edge(h_edges[i].u, h_edges[i].v)) {
        throw UsageError("h_edges[" + std::to_string(i) + "]: not an edge of the graph");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (h_edges[i] == h_edges[j]) {
          throw UsageError("h_edges[" + std::to_string(i) + "]: duplicate pair");
        }
      }
    }
  }
  EdgeSubset h(graph, std::move(h_edges));

  if (!doc.contains("g")) throw UsageError("g: field is required");
  if (!doc.contains("f")) throw UsageError("f: field is required");
  std::vector<int> gv = get_int_list(doc.at("g"), n, "g");
  std::vector<int> fv = get_int_list(doc.at("f"), n, "f");
  for (int v = 0; v < n; ++v) {
    if (gv[static_cast<std::size_t>(v)] > fv[static_cast<std::size_t>(v)]) {
      throw UsageError("f[" + std::to_string(v) + "]: must be >= g[" + std::to_string(v) +
                       "] = " + std::to_string(gv[static_cast<std::size_t>(v)]));
    }
  }

  std::optional<CliquePartition> partition;
  if (doc.contains("partition")) {
    const Json& parts = doc.at("partition");
    if (!parts.is_array()) {
      throw UsageError("partition: expected an array of vertex arrays");
    }
    CliquePartition cp;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Json& part = parts[i];
      std::string field = "partition[" + std::to_string(i) + "]";
      if (!part.is_array()) throw UsageError(field + ": expected an array of vertices");
      std::uint64_t bits = 0;
      for (std::size_t j = 0; j < part.size(); ++j) {
        long long v = get_int(part[j], field + "[" + std::to_string(j) + "]");
        if (v < 0 || v >= n) {
          throw UsageError(field + "[" + std::to_string(j) + "]: vertex " + std::to_string(v) +
                           " out of range for n = " + std::to_string(n));
        }
        bits |= std::uint64_t{1} << v;
      }
      cp.parts.push_back(VertexSet(bits));
    }
    partition = std::move(cp);
  }

  return Instance{std::move(graph), std::move(h), VertexFunc(std::move(gv)),
                  VertexFunc(std::move(fv)), std::move(partition)};
}

Instance parse_instance_text(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw UsageError("instance: not valid JSON");
  return parse_instance(doc);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_text(buffer.str());
}

Json instance_to_json(const Instance& inst) {
  Json doc;
  doc["n"] = inst.graph.vertex_count();
  doc["edges"] = edges_to_json(inst.graph.edges());
  doc["h_edges"] = edges_to_json(inst.h.edges());
  doc["g"] = inst.g.values();
  doc["f"] = inst.f.values();
  if (inst.partition) {
    Json parts = Json::array();
    for (VertexSet part : inst.partition->parts) parts.push_back(vertices_to_json(part));
    doc["partition"] = parts;
  }
  return doc;
}

std::string instance_to_text(const Instance& inst) { return instance_to_json(inst).dump(); }

Json report_to_json(const DeficiencyReport& report) {
  Json doc;
  doc["holds"] = report.holds;
  doc["min_deficiency"] = report.min_deficiency;
  doc["witness_S"] = vertices_to_json(report.witness_S);
  doc["witness_T"] = vertices_to_json(report.witness_T);
  doc["scanned"] = report.scanned;
  return doc;
}

Json witness_to_json(const Graph& graph, const std::optional<FactorWitness>& witness) {
  Json doc;
  if (!witness) {
    doc["exists"] = false;
    return doc;
  }
  doc["exists"] = true;
  Json h2 = Json::array();
  for (std::size_t i = 0; i < witness->assignment.twice.size(); ++i) {
    const Edge& e = graph.edges()[i];
    h2.push_back(Json::array({e.u, e.v, witness->assignment.twice[i]}));
  }
  doc["h2"] = h2;
  return doc;
}

Json sufficiency_to_json(const SufficiencyReport& report) {
  Json doc;
  doc["premise_holds"] = report.premise_holds;
  if (report.violating_part) {
    doc["violating"] = *report.violating_part;
  } else if (report.violating_vertex) {
    doc["violating"] = Json::array({*report.violating_vertex});
  } else if (report.violating_pair) {
    doc["violating"] = Json::array({report.violating_pair->first, report.violating_pair->second});
  } else {
    doc["violating"] = nullptr;
  }
  doc["conclusion_checked"] = report.conclusion_checked;
  doc["conclusion_holds"] = report.conclusion_holds;
  return doc;
}

}  // namespace factorkit
