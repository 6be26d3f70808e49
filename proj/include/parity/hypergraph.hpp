#ifndef PARITY_HYPERGRAPH_HPP
#define PARITY_HYPERGRAPH_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "parity/errors.hpp"

namespace parity {

using VertexId = std::uint32_t;

// An edge is a nonempty set of vertices, stored sorted ascending without
// duplicates. Edges compare lexicographically on that sorted sequence,
// which fixes every "sorted edges" ordering used in this library.
using Edge = std::vector<VertexId>;

Edge make_edge(std::vector<VertexId> vertices);

// Immutable value type: a finite vertex set plus a set of edges, each a
// nonempty vertex subset. Isolated vertices are allowed. A Hypergraph whose
// edges all have exactly two vertices is a graph (see is_graph()).
class Hypergraph {
 public:
  Hypergraph() = default;

  // Normalizes (sorts, dedupes) and validates. Throws InputError if an edge
  // is empty or mentions a vertex missing from the vertex set.
  static Hypergraph create(std::vector<VertexId> vertices, std::vector<Edge> edges);

  // Convenience: vertex set = union of edge endpoints.
  static Hypergraph from_edges(std::vector<Edge> edges);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool has_vertex(VertexId v) const;
  bool has_edge(const Edge& e) const;

  bool is_graph() const;

  // Number of connected components, counting isolated vertices.
  std::size_t num_components() const;

  // Vertices with no incident edge.
  std::vector<VertexId> isolated_vertices() const;

  // The isomorphic hypergraph induced by the bijection v -> mapping[v].
  // mapping must be defined (and injective) on every vertex.
  Hypergraph relabel(const std::vector<std::pair<VertexId, VertexId>>& mapping) const;

  bool operator==(const Hypergraph& other) const = default;

 private:
  std::vector<VertexId> vertices_;  // sorted ascending
  std::vector<Edge> edges_;         // sorted lexicographically
};

// H restricted to a subset of its edges; the vertex set becomes exactly the
// endpoints of the kept edges. Throws InputError on an unknown edge.
Hypergraph restrict_to_edges(const Hypergraph& h, const std::vector<Edge>& edges);

// Dense index assigning 0..n-1 to the (sorted) vertices of a hypergraph.
// Vertex ids are arbitrary non-negative integers; all positional work in the
// library goes through this map.
class VertexIndex {
 public:
  explicit VertexIndex(const Hypergraph& h);

  std::size_t size() const { return ids_.size(); }
  std::size_t position(VertexId v) const;
  VertexId id(std::size_t pos) const { return ids_[pos]; }

 private:
  std::vector<VertexId> ids_;
};

}  // namespace parity

#endif  // PARITY_HYPERGRAPH_HPP
