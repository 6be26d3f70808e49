#ifndef PARITY_TESTS_FIXTURES_HPP
#define PARITY_TESTS_FIXTURES_HPP

// Small graphs and layouts shared as fixtures across the test suites.

#include <vector>

#include "parity/gf2.hpp"
#include "parity/hypergraph.hpp"
#include "parity/labeling.hpp"

namespace fixtures {

using parity::Edge;
using parity::Hypergraph;
using parity::VertexId;

// 5 vertices, 6 edges; cycle space has dimension 2 with three nonzero
// elements, all 4-cycles.
inline Hypergraph k23_labeled() {
  return Hypergraph::create({1, 2, 3, 4, 5},
                            {{1, 2}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {3, 5}});
}

inline std::vector<Edge> k23_cycle_a() { return {{1, 2}, {2, 3}, {3, 4}, {1, 4}}; }
inline std::vector<Edge> k23_cycle_b() { return {{1, 4}, {3, 4}, {3, 5}, {1, 5}}; }
inline std::vector<Edge> k23_cycle_c() { return {{1, 2}, {2, 3}, {3, 5}, {1, 5}}; }

// Hypergraph with one constraint C1; C2 fails at vertex 4.
inline Hypergraph mixed_hypergraph() {
  return Hypergraph::create({1, 2, 3, 4, 5},
                            {{1, 2}, {2, 5}, {1, 3}, {1, 2, 4}, {3, 4, 5}});
}

inline std::vector<Edge> mixed_constraint() { return {{2, 5}, {1, 3}, {1, 2, 4}, {3, 4, 5}}; }
inline std::vector<Edge> mixed_non_constraint() { return {{1, 2}, {2, 5}, {1, 3}, {3, 4, 5}}; }

// 4 vertices, 5 edges; exactly three cycle bases B1, B2, B3.
inline Hypergraph diamond_graph() {
  return Hypergraph::create({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {2, 4}});
}

inline std::vector<Edge> diamond_square() { return {{1, 2}, {2, 3}, {3, 4}, {1, 4}}; }
inline std::vector<Edge> diamond_triangle_124() { return {{1, 2}, {2, 4}, {1, 4}}; }
inline std::vector<Edge> diamond_triangle_234() { return {{2, 3}, {3, 4}, {2, 4}}; }

// the tabulated enumeration h: 1:{1,2} 2:{2,3} 3:{3,4} 4:{4,1} 5:{2,4}
inline std::vector<Edge> diamond_enumeration() {
  return {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {2, 4}};
}

// Two 4-body / 5-body edges sharing two vertices; loop labelings l1 and l2
// induce graphs on six and five vertices respectively.
inline Hypergraph overlapping_plaquettes() {
  return Hypergraph::create({1, 2, 3, 4, 5, 6, 7}, {{1, 2, 3, 4}, {3, 4, 5, 6, 7}});
}

inline parity::LoopLabeling overlapping_plaquettes_l1() {
  parity::LoopLabeling l;
  l.labels[1] = parity::make_label(1, 2);
  l.labels[2] = parity::make_label(1, 4);
  l.labels[3] = parity::make_label(2, 3);
  l.labels[4] = parity::make_label(3, 4);
  l.labels[5] = parity::make_label(2, 6);
  l.labels[6] = parity::make_label(4, 5);
  l.labels[7] = parity::make_label(5, 6);
  return l;
}

// A labeling on five integers: the two cycle images share the two
// non-adjacent edges {1,2} and {3,4} carried by the common vertices 3, 4.
inline parity::LoopLabeling overlapping_plaquettes_l2() {
  parity::LoopLabeling l;
  l.labels[1] = parity::make_label(2, 4);
  l.labels[2] = parity::make_label(1, 3);
  l.labels[3] = parity::make_label(1, 2);
  l.labels[4] = parity::make_label(3, 4);
  l.labels[5] = parity::make_label(2, 3);
  l.labels[6] = parity::make_label(4, 5);
  l.labels[7] = parity::make_label(1, 5);
  return l;
}

// The diamond graph plus the pendant edge {4,5}.
inline Hypergraph diamond_with_pendant() {
  return Hypergraph::create({1, 2, 3, 4, 5},
                            {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {2, 4}, {4, 5}});
}

// Non-isomorphic six-vertex pair with equal compiled hypergraphs: the third
// triangle hangs off vertex 3 in H1 and off vertex 4 in H2.
inline Hypergraph side_triangle_at_3() {
  return Hypergraph::create(
      {1, 2, 3, 4, 5, 6},
      {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {2, 4}, {3, 5}, {5, 6}, {3, 6}});
}

inline Hypergraph side_triangle_at_4() {
  return Hypergraph::create(
      {1, 2, 3, 4, 5, 6},
      {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {2, 4}, {4, 5}, {5, 6}, {4, 6}});
}

// Three four-body plaquettes in a chain, consecutive plaquettes sharing one
// vertex (2 and 6).
inline Hypergraph loose_plaquette_chain() {
  return Hypergraph::create({1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
                            {{1, 2, 3, 4}, {2, 5, 6, 7}, {6, 8, 9, 10}});
}

inline Hypergraph complete_graph(unsigned n) {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  for (VertexId a = 1; a <= n; ++a) {
    vertices.push_back(a);
    for (VertexId b = a + 1; b <= n; ++b) edges.push_back({a, b});
  }
  return Hypergraph::create(std::move(vertices), std::move(edges));
}

inline Hypergraph complete_bipartite(unsigned m, unsigned n) {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  for (VertexId a = 1; a <= m + n; ++a) vertices.push_back(a);
  for (VertexId a = 1; a <= m; ++a) {
    for (VertexId b = m + 1; b <= m + n; ++b) edges.push_back({a, b});
  }
  return Hypergraph::create(std::move(vertices), std::move(edges));
}

inline Hypergraph cycle_graph(unsigned n) {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  for (VertexId a = 1; a <= n; ++a) {
    vertices.push_back(a);
    edges.push_back({a, a % n + 1});
  }
  return Hypergraph::create(std::move(vertices), std::move(edges));
}

inline Hypergraph petersen_graph() {
  std::vector<Edge> edges;
  for (VertexId a = 0; a < 5; ++a) {
    edges.push_back({a + 1, (a + 1) % 5 + 1});          // outer 5-cycle
    edges.push_back({a + 6, (a + 2) % 5 + 6});          // inner pentagram
    edges.push_back({a + 1, a + 6});                    // spokes
  }
  return Hypergraph::from_edges(std::move(edges));
}

// m x n rectangular plaquette layout on row-major vertex ids 1..m*n.
inline Hypergraph rect_layout(unsigned m, unsigned n) {
  std::vector<VertexId> vertices;
  for (VertexId v = 1; v <= m * n; ++v) vertices.push_back(v);
  std::vector<Edge> edges;
  for (unsigned i = 0; i + 1 < m; ++i) {
    for (unsigned j = 0; j + 1 < n; ++j) {
      VertexId v = i * n + j + 1;
      edges.push_back({v, v + 1, v + n, v + n + 1});
    }
  }
  return Hypergraph::create(std::move(vertices), std::move(edges));
}

}  // namespace fixtures

#endif  // PARITY_TESTS_FIXTURES_HPP
