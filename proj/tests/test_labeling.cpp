#include <doctest.h>

#include <map>
#include <random>

#include "parity/json_io.hpp"
#include "parity/labeling.hpp"
#include "parity/oracle.hpp"
#include "fixtures.hpp"

using namespace parity;

namespace {

LoopLabeling labeling_from(
    const std::vector<std::pair<VertexId, std::pair<unsigned, unsigned>>>& rows) {
  LoopLabeling l;
  for (const auto& [v, pair] : rows) {
    l.labels[v] = make_label(pair.first, pair.second);
  }
  return l;
}

std::map<VertexId, std::size_t> degrees(const Hypergraph& g) {
  std::map<VertexId, std::size_t> deg;
  for (const Edge& e : g.edges()) {
    ++deg[e[0]];
    ++deg[e[1]];
  }
  return deg;
}

std::size_t max_degree(const Hypergraph& g) {
  std::size_t out = 0;
  for (const auto& [v, d] : degrees(g)) out = std::max(out, d);
  return out;
}

// The zigzag seven-plaquette chain with 16 vertices: consecutive plaquettes
// share a side, and three plaquettes meet at vertices 4, 5, 10 and 12.
Hypergraph zigzag_layout() {
  return Hypergraph::create({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16},
                            {{1, 2, 3, 4},
                             {2, 4, 5, 6},
                             {4, 5, 7, 8},
                             {5, 8, 9, 10},
                             {9, 10, 11, 12},
                             {10, 12, 13, 14},
                             {12, 14, 15, 16}});
}

// Frozen witnesses: l2 arises from l1 by switching the labels of vertices 9
// and 10 in the plaquette {5,8,9,10} (with the forced downstream swaps),
// which raises the maximum induced degree from five to six.
LoopLabeling zigzag_l1() {
  return labeling_from({{1, {1, 2}},
                        {2, {2, 3}},
                        {3, {1, 4}},
                        {4, {3, 4}},
                        {5, {4, 5}},
                        {6, {2, 5}},
                        {7, {3, 6}},
                        {8, {5, 6}},
                        {9, {4, 7}},
                        {10, {6, 7}},
                        {11, {4, 8}},
                        {12, {6, 8}},
                        {13, {7, 9}},
                        {14, {8, 9}},
                        {15, {9, 10}},
                        {16, {6, 10}}});
}

LoopLabeling zigzag_l2() {
  return labeling_from({{1, {1, 2}},
                        {2, {2, 3}},
                        {3, {1, 4}},
                        {4, {3, 4}},
                        {5, {4, 5}},
                        {6, {2, 5}},
                        {7, {3, 6}},
                        {8, {5, 6}},
                        {9, {6, 7}},
                        {10, {4, 7}},
                        {11, {6, 8}},
                        {12, {4, 8}},
                        {13, {7, 9}},
                        {14, {8, 9}},
                        {15, {9, 10}},
                        {16, {4, 10}}});
}

}  // namespace

TEST_CASE("induced graphs of the worked labelings") {
  Hypergraph h = fixtures::overlapping_plaquettes();

  Hypergraph g1 = induced_graph(h, fixtures::overlapping_plaquettes_l1());
  CHECK(g1.num_vertices() == 6);
  CHECK(g1.num_edges() == 7);

  Hypergraph g2 = induced_graph(h, fixtures::overlapping_plaquettes_l2());
  CHECK(g2.num_vertices() == 5);
  CHECK_FALSE(is_isomorphic(g1, g2));

  // a single 3-edge labeled with a triangle induces that triangle
  Hypergraph single = Hypergraph::create({1, 2, 3}, {{1, 2, 3}});
  LoopLabeling lt = labeling_from({{1, {1, 2}}, {2, {2, 3}}, {3, {1, 3}}});
  CHECK(induced_graph(single, lt) == fixtures::complete_graph(3));

  LoopLabeling missing = labeling_from({{1, {1, 2}}});
  CHECK_THROWS_AS(induced_graph(single, missing), InputError);
}

TEST_CASE("loop labeling validation") {
  Hypergraph h = fixtures::overlapping_plaquettes();
  CHECK(is_loop_labeling(h, fixtures::overlapping_plaquettes_l1()));
  CHECK(is_loop_labeling(h, fixtures::overlapping_plaquettes_l2()));

  // breaking injectivity invalidates the labeling
  LoopLabeling broken = fixtures::overlapping_plaquettes_l1();
  broken.labels[7] = broken.labels[1];
  CHECK_FALSE(is_loop_labeling(h, broken));

  // a labeling whose image of an edge is no cycle fails
  LoopLabeling bad = fixtures::overlapping_plaquettes_l1();
  bad.labels[1] = make_label(9, 10);
  CHECK_FALSE(is_loop_labeling(h, bad));
}

TEST_CASE("weakly fundamental edge orders") {
  CHECK(weakly_fundamental_edge_order(fixtures::loose_plaquette_chain()).has_value());
  CHECK(weakly_fundamental_edge_order(fixtures::rect_layout(3, 3)).has_value());

  // three edges on four vertices where every edge is covered by the other two
  Hypergraph no_order = Hypergraph::create(
      {1, 2, 3, 4}, {{1, 2, 3}, {1, 2, 4}, {3, 4}});
  auto order = weakly_fundamental_edge_order(no_order);
  CHECK_FALSE(order.has_value());
}

TEST_CASE("search on a single plaquette finds only 4-cycles") {
  Hypergraph layout = Hypergraph::create({1, 2, 3, 4}, {{1, 2, 3, 4}});
  CompiledHypergraph p = io::compiled_from_layout(layout);
  LabelingSearchResult r = search_labelings(p);
  CHECK(r.labelings.size() == 3);  // assignments modulo renaming
  for (const LoopLabeling& l : r.labelings) {
    CHECK(is_loop_labeling(layout, l));
    Hypergraph g = induced_graph(layout, l);
    CHECK(is_isomorphic(g, fixtures::cycle_graph(4)));
  }
  PreimageResult pre = preimage(p);
  CHECK(pre.classes.size() == 1);
  CHECK(*pre.classes.begin() == canonical_form(fixtures::cycle_graph(4)));
}

TEST_CASE("search output satisfies the structural invariants") {
  Hypergraph layout = fixtures::loose_plaquette_chain();
  CompiledHypergraph p = io::compiled_from_layout(layout);
  LabelingSearchResult r = search_labelings(p);
  REQUIRE(!r.labelings.empty());

  for (const LoopLabeling& l : r.labelings) {
    REQUIRE(is_loop_labeling(layout, l));
    Hypergraph g = induced_graph(layout, l);
    CHECK(dim_formula(g) == layout.num_edges());

    EdgeIndexPtr index = EdgeIndex::for_hypergraph(g);
    Gf2Basis basis = cycle_basis(g);

    // images of the compiled edges are simple cycles and independent
    std::vector<EdgeVector> images;
    for (const Edge& e : layout.edges()) {
      std::vector<Edge> support;
      for (VertexId v : e) {
        const Label& lab = l.labels.at(v);
        support.push_back(Edge{lab.first, lab.second});
      }
      EdgeVector vec = EdgeVector::from_edges(index, support);
      CHECK(is_simple_cycle(vec));
      CHECK(in_span(basis, vec).has_value());
      images.push_back(std::move(vec));
    }
    CHECK_NOTHROW(Gf2Basis::create(images, index));  // independence
  }
}

TEST_CASE("chain of single-vertex plaquettes has two preimage classes") {
  Hypergraph layout = fixtures::loose_plaquette_chain();
  PreimageResult pre = preimage(io::compiled_from_layout(layout));
  CHECK(pre.exhaustive);
  REQUIRE(pre.classes.size() == 2);

  std::multiset<std::size_t> maxdegs;
  for (const CanonicalForm& f : pre.classes) {
    maxdegs.insert(max_degree(f.representative()));
  }
  // the two degree profiles: one graph reaches degree four, the other stays
  // at three
  CHECK(maxdegs == std::multiset<std::size_t>{3, 4});
}

TEST_CASE("zigzag seven-plaquette layout separates at degree six") {
  Hypergraph layout = zigzag_layout();
  REQUIRE(layout.num_vertices() == 16);
  REQUIRE(layout.num_edges() == 7);

  LoopLabeling l1 = zigzag_l1();
  LoopLabeling l2 = zigzag_l2();
  CHECK(is_loop_labeling(layout, l1));
  CHECK(is_loop_labeling(layout, l2));

  Hypergraph g1 = induced_graph(layout, l1);
  Hypergraph g2 = induced_graph(layout, l2);
  CHECK(dim_formula(g1) == 7);
  CHECK(dim_formula(g2) == 7);
  CHECK_FALSE(is_isomorphic(g1, g2));
  CHECK(max_degree(g1) == 5);
  CHECK(max_degree(g2) == 6);

  // the two witnesses differ exactly on the plaquette {5,8,9,10} switch and
  // its forced continuation
  CHECK(l1.labels.at(9) == l2.labels.at(10));
  CHECK(l1.labels.at(10) == l2.labels.at(9));
  for (VertexId v : {1, 2, 3, 4, 5, 6, 7, 8, 13, 14, 15}) {
    CHECK(l1.labels.at(v) == l2.labels.at(v));
  }

  // the full search finds exactly these two classes
  PreimageResult pre = preimage(io::compiled_from_layout(layout));
  CHECK(pre.classes.size() == 2);
  CHECK(pre.classes.count(canonical_form(g1)) == 1);
  CHECK(pre.classes.count(canonical_form(g2)) == 1);
}

TEST_CASE("connected dimension-two sources have singleton preimages") {
  // compiled theta graph: two 3-edges sharing one vertex
  Hypergraph layout = Hypergraph::create({1, 2, 3, 4, 5}, {{1, 2, 3}, {3, 4, 5}});
  PreimageResult pre = preimage(io::compiled_from_layout(layout));
  CHECK(pre.classes.size() == 1);
}

TEST_CASE("preimage is invariant under relabeling of the layout") {
  std::mt19937 rng(777);
  Hypergraph layout = fixtures::loose_plaquette_chain();
  PreimageResult base = preimage(io::compiled_from_layout(layout));
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<VertexId> targets = layout.vertices();
    std::shuffle(targets.begin(), targets.end(), rng);
    std::vector<std::pair<VertexId, VertexId>> mapping;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      mapping.emplace_back(layout.vertices()[i], targets[i]);
    }
    Hypergraph relabeled = layout.relabel(mapping);
    PreimageResult moved = preimage(io::compiled_from_layout(relabeled));
    CHECK(moved.classes == base.classes);
  }
}

TEST_CASE("every graph appears in the preimage of its own compilation") {
  // cycle-edge-closed corpus slice
  std::vector<Hypergraph> corpus{
      fixtures::complete_graph(3), fixtures::cycle_graph(4), fixtures::cycle_graph(5),
      fixtures::complete_graph(4), fixtures::diamond_graph(),
      Hypergraph::create({1, 2, 3, 4, 5, 6},
                         {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}})};
  for (const Hypergraph& g : corpus) {
    CompiledHypergraph p = compile(g, cycle_basis(g));
    PreimageResult pre = preimage(p);
    CHECK(pre.classes.count(canonical_form(g)) == 1);
  }
}

TEST_CASE("search guards") {
  // an edge too small to carry a cycle
  Hypergraph tiny = Hypergraph::create({1, 2, 3}, {{1, 2}, {1, 2, 3}});
  CHECK_THROWS_AS(search_labelings(io::compiled_from_layout(tiny)), InputError);

  // no weakly fundamental order
  Hypergraph no_order =
      Hypergraph::create({1, 2, 3, 4, 5, 6},
                         {{1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}, {1, 2, 5, 6}});
  CHECK_THROWS_AS(search_labelings(io::compiled_from_layout(no_order)),
                  UnsupportedError);

  // label universe guard
  LabelingSearchOptions opts;
  opts.max_labels = 3;
  CHECK_THROWS_AS(
      search_labelings(io::compiled_from_layout(fixtures::loose_plaquette_chain()), opts),
      GuardError);
}

TEST_CASE("labeling JSON round trip") {
  LoopLabeling l = fixtures::overlapping_plaquettes_l1();
  io::json j = io::labeling_to_json(l);
  LoopLabeling back = io::labeling_from_json(j);
  CHECK(back.labels == l.labels);

  CHECK_THROWS_AS(io::labeling_from_json(io::json::parse("{\"labels\":{\"1\":[2]}}")),
                  InputError);
}
