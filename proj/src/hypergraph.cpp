#include "parity/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace parity {

Edge make_edge(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.empty()) {
    throw InputError("edge must contain at least one vertex");
  }
  return vertices;
}

Hypergraph Hypergraph::create(std::vector<VertexId> vertices, std::vector<Edge> edges) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  for (auto& e : edges) {
    e = make_edge(std::move(e));
    for (VertexId v : e) {
      if (!std::binary_search(vertices.begin(), vertices.end(), v)) {
        throw InputError("edge mentions vertex " + std::to_string(v) +
                         " which is not in the vertex set");
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Hypergraph h;
  h.vertices_ = std::move(vertices);
  h.edges_ = std::move(edges);
  return h;
}

Hypergraph Hypergraph::from_edges(std::vector<Edge> edges) {
  std::vector<VertexId> vertices;
  for (auto& e : edges) {
    e = make_edge(std::move(e));
    vertices.insert(vertices.end(), e.begin(), e.end());
  }
  return create(std::move(vertices), std::move(edges));
}

bool Hypergraph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Hypergraph::has_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool Hypergraph::is_graph() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.size() == 2; });
}

namespace {

// Plain union-find over dense positions.
class Dsu {
 public:
  explicit Dsu(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::size_t Hypergraph::num_components() const {
  VertexIndex idx(*this);
  Dsu dsu(idx.size());
  for (const Edge& e : edges_) {
    for (std::size_t i = 1; i < e.size(); ++i) {
      dsu.unite(idx.position(e[0]), idx.position(e[i]));
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t p = 0; p < idx.size(); ++p) {
    roots.insert(dsu.find(p));
  }
  return roots.size();
}

std::vector<VertexId> Hypergraph::isolated_vertices() const {
  std::set<VertexId> covered;
  for (const Edge& e : edges_) {
    covered.insert(e.begin(), e.end());
  }
  std::vector<VertexId> out;
  for (VertexId v : vertices_) {
    if (!covered.count(v)) out.push_back(v);
  }
  return out;
}

Hypergraph Hypergraph::relabel(
    const std::vector<std::pair<VertexId, VertexId>>& mapping) const {
  std::map<VertexId, VertexId> f(mapping.begin(), mapping.end());
  std::set<VertexId> images;
  for (const auto& [from, to] : f) {
    (void)from;
    images.insert(to);
  }
  if (f.size() != mapping.size() || images.size() != f.size()) {
    throw InputError("relabeling map is not injective");
  }
  std::vector<VertexId> new_vertices;
  for (VertexId v : vertices_) {
    auto it = f.find(v);
    if (it == f.end()) {
      throw InputError("relabeling map missing vertex " + std::to_string(v));
    }
    new_vertices.push_back(it->second);
  }
  std::vector<Edge> new_edges;
  for (const Edge& e : edges_) {
    Edge mapped;
    mapped.reserve(e.size());
    for (VertexId v : e) mapped.push_back(f.at(v));
    new_edges.push_back(make_edge(std::move(mapped)));
  }
  return create(std::move(new_vertices), std::move(new_edges));
}

Hypergraph restrict_to_edges(const Hypergraph& h, const std::vector<Edge>& edges) {
  std::vector<Edge> kept;
  for (const Edge& raw : edges) {
    Edge e = raw;
    std::sort(e.begin(), e.end());
    if (!h.has_edge(e)) {
      throw InputError("restriction references an edge not present in the hypergraph");
    }
    kept.push_back(std::move(e));
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return Hypergraph::from_edges(std::move(kept));
}

VertexIndex::VertexIndex(const Hypergraph& h) : ids_(h.vertices()) {}

std::size_t VertexIndex::position(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) {
    throw InputError("vertex " + std::to_string(v) + " not indexed");
  }
  return static_cast<std::size_t>(it - ids_.begin());
}

}  // namespace parity
