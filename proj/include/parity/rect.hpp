#ifndef PARITY_RECT_HPP
#define PARITY_RECT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "parity/gf2.hpp"
#include "parity/hypergraph.hpp"

namespace parity {

// Rectangular plaquette layout: m*n vertices on a grid whose edges are
// exactly the (m-1)(n-1) unit-square plaquettes. Canonicalized to m <= n
// (the two orientations are isomorphic).
struct RectLayout {
  std::size_t m = 0;  // vertical vertex count
  std::size_t n = 0;  // horizontal vertex count
  // grid[i][j] = vertex at row i+1, column j+1
  std::vector<std::vector<VertexId>> grid;

  std::size_t num_plaquettes() const { return (m - 1) * (n - 1); }
};

// Recovers the grid enumeration if h is a rectangular plaquette layout,
// starting from a corner plaquette and growing row by row; any
// inconsistency yields nullopt rather than repair.
std::optional<RectLayout> is_rect_layout(const Hypergraph& h);

// Result of compiling a graph onto a rectangular plaquette layout.
struct RectCompilation {
  RectLayout layout;                    // over compiled ids 1..m*n, row-major
  std::vector<VertexId> row_partition;  // i_1..i_m, sorted
  std::vector<VertexId> col_partition;  // j_1..j_n, sorted
  Gf2Basis basis;                       // plaquette cycles C_1..C_{(m-1)(n-1)}
  // compiled id k (1-based) corresponds to source edge vertex_map[k-1]
  std::vector<Edge> vertex_map;
  std::uint64_t op_count = 0;  // basic operations consumed (for scaling checks)
};

// Restriction of g to the edges lying on at least one cycle, computed from a
// spanning forest by collecting fundamental cycles through parent pointers.
Hypergraph cycle_edge_restriction(const Hypergraph& g);

// Partitions of g if it is a complete bipartite graph (two-coloring by
// breadth-first search plus a neighbor-count check); deterministic order:
// smaller side first, ties by minimum vertex id. Vertex-free or
// edge-free inputs yield nullopt.
std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>>
is_complete_bipartite(const Hypergraph& g);

// Decides whether g compiles onto a rectangular plaquette layout and builds
// the explicit plaquette basis when it does: the cycle-edge restriction must
// be a complete bipartite graph K_{m,n}, whose plaquette cycles
//   C_k = {{i_a, j_b}, {i_a, j_b+1}, {i_a+1, j_b+1}, {i_a+1, j_b}}
// (row-major k) form the basis. Disconnected inputs are handled per
// component: at most one component may carry cycles.
std::optional<RectCompilation> rect_compile(const Hypergraph& g);

}  // namespace parity

#endif  // PARITY_RECT_HPP
