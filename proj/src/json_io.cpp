#include "parity/json_io.hpp"

#include <algorithm>

namespace parity::io {

namespace {

Edge edge_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw InputError("edge must be a nonempty array of vertex ids");
  }
  Edge e;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) {
      throw InputError("vertex ids must be non-negative integers");
    }
    e.push_back(v.get<VertexId>());
  }
  return make_edge(std::move(e));
}

json edge_to_json(const Edge& e) {
  json out = json::array();
  for (VertexId v : e) out.push_back(v);
  return out;
}

json edges_to_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back(edge_to_json(e));
  return out;
}

}  // namespace

json hypergraph_to_json(const Hypergraph& h) {
  json out;
  out["vertices"] = json::array();
  for (VertexId v : h.vertices()) out["vertices"].push_back(v);
  out["edges"] = edges_to_json(h.edges());
  return out;
}

Hypergraph hypergraph_from_json(const json& j) {
  if (!j.is_object()) throw InputError("hypergraph JSON must be an object");
  std::vector<VertexId> vertices;
  if (j.contains("vertices")) {
    if (!j["vertices"].is_array()) throw InputError("\"vertices\" must be an array");
    for (const auto& v : j["vertices"]) {
      if (!v.is_number_unsigned()) {
        throw InputError("vertex ids must be non-negative integers");
      }
      vertices.push_back(v.get<VertexId>());
    }
  }
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InputError("\"edges\" must be an array");
    for (const auto& e : j["edges"]) edges.push_back(edge_from_json(e));
  }
  if (!j.contains("vertices")) {
    return Hypergraph::from_edges(std::move(edges));
  }
  return Hypergraph::create(std::move(vertices), std::move(edges));
}

std::string hypergraph_to_string(const Hypergraph& h) {
  return hypergraph_to_json(h).dump();
}

Hypergraph hypergraph_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return hypergraph_from_json(j);
}

json basis_to_json(const Gf2Basis& b) {
  json out;
  out["dim"] = b.dim();
  out["edge_index"] = b.index() ? edges_to_json(b.index()->edges()) : json::array();
  json vectors = json::array();
  for (const EdgeVector& v : b.vectors()) {
    vectors.push_back(edges_to_json(v.support()));
  }
  out["vectors"] = std::move(vectors);
  out["fundamental"] = b.is_fundamental();
  out["weakly_fundamental"] = b.is_weakly_fundamental();
  return out;
}

Gf2Basis basis_from_json(const json& j) {
  if (!j.is_object() || !j.contains("edge_index") || !j.contains("vectors")) {
    throw InputError("basis JSON needs \"edge_index\" and \"vectors\"");
  }
  std::vector<Edge> index_edges;
  for (const auto& e : j["edge_index"]) index_edges.push_back(edge_from_json(e));
  EdgeIndexPtr index = EdgeIndex::from_edges(std::move(index_edges));
  std::vector<EdgeVector> vectors;
  for (const auto& vec : j["vectors"]) {
    std::vector<Edge> support;
    for (const auto& e : vec) support.push_back(edge_from_json(e));
    vectors.push_back(EdgeVector::from_edges(index, support));
  }
  return Gf2Basis::create(std::move(vectors), index);
}

json compiled_to_json(const CompiledHypergraph& c) {
  json out;
  out["num_vertices"] = c.hypergraph.num_vertices();
  out["edges"] = edges_to_json(c.hypergraph.edges());
  out["source_edges"] = edges_to_json(c.source_edges);
  return out;
}

CompiledHypergraph compiled_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num_vertices") || !j.contains("edges")) {
    throw InputError("compiled hypergraph JSON needs \"num_vertices\" and \"edges\"");
  }
  std::size_t m = j["num_vertices"].get<std::size_t>();
  std::vector<VertexId> vertices;
  for (std::size_t i = 1; i <= m; ++i) vertices.push_back(static_cast<VertexId>(i));
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) edges.push_back(edge_from_json(e));
  CompiledHypergraph out;
  out.hypergraph = Hypergraph::create(std::move(vertices), std::move(edges));
  if (j.contains("source_edges")) {
    for (const auto& e : j["source_edges"]) {
      out.source_edges.push_back(edge_from_json(e));
    }
    if (out.source_edges.size() != m) {
      throw InputError("source_edges must list one edge per compiled vertex");
    }
  }
  return out;
}

CompiledHypergraph compiled_from_layout(Hypergraph h) {
  CompiledHypergraph out;
  out.hypergraph = std::move(h);
  return out;
}

json labeling_to_json(const LoopLabeling& l) {
  json labels = json::object();
  for (const auto& [v, lab] : l.labels) {
    labels[std::to_string(v)] = json::array({lab.first, lab.second});
  }
  json out;
  out["labels"] = std::move(labels);
  return out;
}

LoopLabeling labeling_from_json(const json& j) {
  if (!j.is_object() || !j.contains("labels") || !j["labels"].is_object()) {
    throw InputError("labeling JSON needs a \"labels\" object");
  }
  LoopLabeling out;
  for (const auto& [key, value] : j["labels"].items()) {
    if (!value.is_array() || value.size() != 2) {
      throw InputError("label must be a pair [i, j]");
    }
    VertexId v = static_cast<VertexId>(std::stoul(key));
    out.labels[v] = make_label(value[0].get<std::uint32_t>(),
                               value[1].get<std::uint32_t>());
  }
  return out;
}

json preimage_to_json(const PreimageResult& r) {
  json classes = json::array();
  for (const CanonicalForm& f : r.classes) {
    classes.push_back(hypergraph_to_json(f.representative()));
  }
  json out;
  out["classes"] = std::move(classes);
  out["exhaustive"] = r.exhaustive;
  out["labelings_examined"] = r.labelings_examined;
  return out;
}

json compiled_set_to_json(const CompiledSet& s) {
  json classes = json::array();
  for (const CanonicalForm& f : s.classes) {
    classes.push_back(hypergraph_to_json(f.representative()));
  }
  json out;
  out["classes"] = std::move(classes);
  out["exhaustive"] = s.exhaustive;
  out["count"] = s.classes.size();
  return out;
}

json rect_layout_to_json(const RectLayout& r) {
  json grid = json::array();
  for (const auto& row : r.grid) {
    json jrow = json::array();
    for (VertexId v : row) jrow.push_back(v);
    grid.push_back(std::move(jrow));
  }
  json out;
  out["m"] = r.m;
  out["n"] = r.n;
  out["grid"] = std::move(grid);
  return out;
}

json rect_to_json(const RectCompilation& r) {
  json grid = json::array();
  for (std::size_t a = 0; a < r.layout.m; ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < r.layout.n; ++b) {
      row.push_back(edge_to_json(r.vertex_map[a * r.layout.n + b]));
    }
    grid.push_back(std::move(row));
  }
  json plaquettes = json::array();
  const std::size_t n = r.layout.n;
  for (std::size_t k = 0; k < r.layout.num_plaquettes(); ++k) {
    const std::size_t a = k / (n - 1);
    const std::size_t b = k % (n - 1);
    auto id = [&](std::size_t i, std::size_t j) {
      return static_cast<VertexId>(i * n + j + 1);
    };
    plaquettes.push_back(json::array(
        {id(a, b), id(a, b + 1), id(a + 1, b), id(a + 1, b + 1)}));
  }
  json out;
  out["m"] = r.layout.m;
  out["n"] = r.layout.n;
  out["grid"] = std::move(grid);
  out["plaquettes"] = std::move(plaquettes);
  json rows = json::array();
  for (VertexId v : r.row_partition) rows.push_back(v);
  json cols = json::array();
  for (VertexId v : r.col_partition) cols.push_back(v);
  out["row_partition"] = std::move(rows);
  out["col_partition"] = std::move(cols);
  return out;
}

std::string dumps(const json& j) { return j.dump(2) + "\n"; }

}  // namespace parity::io
