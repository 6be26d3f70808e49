#include <doctest.h>

#include <random>

#include "parity/compile.hpp"
#include "parity/json_io.hpp"
#include "fixtures.hpp"

using namespace parity;

namespace {

Gf2Basis diamond_basis(const std::vector<std::vector<Edge>>& elements) {
  Hypergraph g = fixtures::diamond_graph();
  EdgeIndexPtr index = EdgeIndex::for_hypergraph(g);
  std::vector<EdgeVector> vectors;
  for (const auto& support : elements) {
    vectors.push_back(EdgeVector::from_edges(index, support));
  }
  return Gf2Basis::create(std::move(vectors), index);
}

std::set<Edge> compiled_edge_set(const CompiledHypergraph& c) {
  return {c.hypergraph.edges().begin(), c.hypergraph.edges().end()};
}

}  // namespace

TEST_CASE("compile reproduces the tabulated compiled hypergraphs") {
  Hypergraph g = fixtures::diamond_graph();
  std::vector<Edge> h = fixtures::diamond_enumeration();

  Gf2Basis b1 = diamond_basis({fixtures::diamond_square(), fixtures::diamond_triangle_124()});
  Gf2Basis b2 = diamond_basis({fixtures::diamond_square(), fixtures::diamond_triangle_234()});
  Gf2Basis b3 =
      diamond_basis({fixtures::diamond_triangle_124(), fixtures::diamond_triangle_234()});

  CompiledHypergraph p1 = compile_with_enumeration(g, b1, h);
  CompiledHypergraph p2 = compile_with_enumeration(g, b2, h);
  CompiledHypergraph p3 = compile_with_enumeration(g, b3, h);

  CHECK(p1.num_vertices() == 5);
  CHECK(compiled_edge_set(p1) == std::set<Edge>{{1, 2, 3, 4}, {1, 4, 5}});
  CHECK(compiled_edge_set(p2) == std::set<Edge>{{1, 2, 3, 4}, {2, 3, 5}});
  CHECK(compiled_edge_set(p3) == std::set<Edge>{{1, 4, 5}, {2, 3, 5}});

  // P_B1 and P_B2 are isomorphic; P_B3 is not
  CHECK(canonical_form(p1.hypergraph) == canonical_form(p2.hypergraph));
  CHECK(canonical_form(p1.hypergraph) != canonical_form(p3.hypergraph));

  // a single triangle compiles to one three-vertex edge
  Hypergraph triangle = fixtures::complete_graph(3);
  CompiledHypergraph pt = compile(triangle, cycle_basis(triangle));
  CHECK(pt.num_vertices() == 3);
  CHECK(compiled_edge_set(pt) == std::set<Edge>{{1, 2, 3}});
}

TEST_CASE("compile validates its basis") {
  Hypergraph g = fixtures::diamond_graph();
  EdgeIndexPtr index = EdgeIndex::for_hypergraph(g);
  EdgeVector square = EdgeVector::from_edges(index, fixtures::diamond_square());
  EdgeVector not_constraint = EdgeVector::from_edges(index, {{1, 2}, {2, 3}});

  CHECK_THROWS_AS(Gf2Basis::create({EdgeVector::zero(index)}, index), InputError);
  CHECK_THROWS_AS(Gf2Basis::create({square, square}, index), InputError);
  Gf2Basis bad = Gf2Basis::create({not_constraint}, index);
  CHECK_THROWS_AS(compile(g, bad), InputError);

  // enumeration must be a permutation of E_B
  Gf2Basis b1 = diamond_basis({fixtures::diamond_square(), fixtures::diamond_triangle_124()});
  CHECK_THROWS_AS(compile_with_enumeration(g, b1, {{1, 2}, {2, 3}}), InputError);
}

TEST_CASE("basis enumeration") {
  // the diamond graph has exactly three bases
  Hypergraph g = fixtures::diamond_graph();
  BasisEnumeration en = enumerate_bases(constraint_space_basis(g));
  CHECK_FALSE(en.truncated);
  REQUIRE(en.bases.size() == 3);

  std::set<std::set<std::vector<Edge>>> found;
  for (const Gf2Basis& b : en.bases) {
    std::set<std::vector<Edge>> supports;
    for (const EdgeVector& v : b.vectors()) supports.insert(v.support());
    found.insert(std::move(supports));
  }
  EdgeIndexPtr index = EdgeIndex::for_hypergraph(g);
  auto support = [&](const std::vector<Edge>& e) {
    return EdgeVector::from_edges(index, e).support();
  };
  std::set<std::set<std::vector<Edge>>> expected{
      {support(fixtures::diamond_square()), support(fixtures::diamond_triangle_124())},
      {support(fixtures::diamond_square()), support(fixtures::diamond_triangle_234())},
      {support(fixtures::diamond_triangle_124()), support(fixtures::diamond_triangle_234())}};
  CHECK(found == expected);

  // dim 1: a single basis
  BasisEnumeration one = enumerate_bases(constraint_space_basis(fixtures::complete_graph(3)));
  CHECK(one.bases.size() == 1);

  // dim 3: 28 bases = (2^3-1)(2^3-2)(2^3-4) / 3!
  BasisEnumeration d3 = enumerate_bases(cycle_basis(fixtures::complete_graph(4)));
  CHECK(d3.bases.size() == 28);
  CHECK_FALSE(d3.truncated);

  // cap truncation flags the result
  BasisEnumeration capped = enumerate_bases(cycle_basis(fixtures::complete_graph(4)), 10);
  CHECK(capped.truncated);
  CHECK(capped.bases.size() == 10);

  // dimension guard
  CHECK_THROWS_AS(enumerate_bases(cycle_basis(fixtures::complete_bipartite(6, 6))),
                  GuardError);
}

TEST_CASE("compiled set sizes") {
  // diamond graph: two classes
  CompiledSet s23 = compiled_set(fixtures::diamond_graph());
  CHECK(s23.exhaustive);
  CHECK(s23.classes.size() == 2);

  // triangle: one class
  CompiledSet st = compiled_set(fixtures::complete_graph(3));
  CHECK(st.classes.size() == 1);

  // labeled K_{2,3}: all three bases pair two 4-cycles sharing two edges, one
  // class (exhaustively verified golden value)
  CompiledSet s21 = compiled_set(fixtures::k23_labeled());
  CHECK(s21.exhaustive);
  CHECK(s21.classes.size() == 1);

  // truncation is reported, not thrown
  CompiledSet trunc = compiled_set(fixtures::complete_graph(4), 5);
  CHECK_FALSE(trunc.exhaustive);

  // threaded enumeration merges to the same set
  CompiledSet threaded = compiled_set(fixtures::diamond_graph(), kDefaultBasisCap, 4);
  CHECK(threaded.classes == s23.classes);
}

TEST_CASE("compiled sets are relabeling-invariant") {
  std::mt19937 rng(31337);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  int done = 0;
  while (done < 12) {
    std::vector<Edge> edges;
    for (VertexId a = 1; a <= 6; ++a) {
      for (VertexId b = a + 1; b <= 6; ++b) {
        if (coin(rng) < 0.4) edges.push_back({a, b});
      }
    }
    std::vector<VertexId> vertices{1, 2, 3, 4, 5, 6};
    Hypergraph g = Hypergraph::create(vertices, edges);
    if (dim_formula(g) > 3) continue;
    ++done;

    std::vector<VertexId> targets = g.vertices();
    std::shuffle(targets.begin(), targets.end(), rng);
    std::vector<std::pair<VertexId, VertexId>> mapping;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      mapping.emplace_back(g.vertices()[i], targets[i]);
    }
    Hypergraph relabeled = g.relabel(mapping);
    CHECK(compiled_set(g).classes == compiled_set(relabeled).classes);
  }
}

TEST_CASE("E_B is shared by all bases of a space") {
  for (const Hypergraph& g :
       {fixtures::diamond_graph(), fixtures::k23_labeled(), fixtures::side_triangle_at_3()}) {
    BasisEnumeration en = enumerate_bases(constraint_space_basis(g));
    REQUIRE(!en.bases.empty());
    auto union_of = [](const Gf2Basis& b) {
      std::set<Edge> out;
      for (const EdgeVector& v : b.vectors()) {
        for (const Edge& e : v.support()) out.insert(e);
      }
      return out;
    };
    std::set<Edge> first = union_of(en.bases[0]);
    for (const Gf2Basis& b : en.bases) CHECK(union_of(b) == first);
  }
}

TEST_CASE("compiled edge count equals basis size and weak fundamentality transfers") {
  Hypergraph g = fixtures::side_triangle_at_3();
  BasisEnumeration en = enumerate_bases(constraint_space_basis(g));
  for (const Gf2Basis& b : en.bases) {
    CompiledHypergraph p = compile(g, b);
    CHECK(p.hypergraph.num_edges() == b.dim());

    // Ordering the basis by private edges is ordering the compiled edges by
    // private vertices. classify_basis additionally demands simple cycles,
    // so it can only be stricter.
    BasisClassification bc = classify_basis(b);
    auto order = weakly_fundamental_edge_order(p.hypergraph);
    if (bc.is_weakly_fundamental) CHECK(order.has_value());
    bool all_cycles = true;
    for (const EdgeVector& v : b.vectors()) all_cycles &= is_simple_cycle(v);
    if (all_cycles) CHECK(bc.is_weakly_fundamental == order.has_value());
  }
}

TEST_CASE("par equality") {
  // a pendant edge does not change the compiled set
  CHECK(par_equal(fixtures::diamond_graph(), fixtures::diamond_with_pendant()));

  // equal compiled sets on non-isomorphic graphs
  CHECK(par_equal(fixtures::side_triangle_at_3(), fixtures::side_triangle_at_4()));
  CHECK_FALSE(is_isomorphic(fixtures::side_triangle_at_3(), fixtures::side_triangle_at_4()));

  // triangle vs square: single classes, different plaquette sizes
  CHECK_FALSE(par_equal(fixtures::complete_graph(3), fixtures::cycle_graph(4)));

  // acyclic graphs all compile to the empty hypergraph
  Hypergraph path = Hypergraph::create({1, 2, 3}, {{1, 2}, {2, 3}});
  Hypergraph star = Hypergraph::create({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}});
  CHECK(par_equal(path, star));
  CHECK_FALSE(par_equal(path, fixtures::complete_graph(3)));

  // reflexive and symmetric on a small corpus
  std::vector<Hypergraph> corpus{fixtures::diamond_graph(), fixtures::diamond_with_pendant(),
                                 fixtures::complete_graph(3),
                                 fixtures::cycle_graph(4)};
  for (const Hypergraph& a : corpus) {
    CHECK(par_equal(a, a));
    for (const Hypergraph& b : corpus) {
      CHECK(par_equal(a, b) == par_equal(b, a));
    }
  }

  CHECK_THROWS_AS(par_equal(fixtures::mixed_hypergraph(), fixtures::diamond_graph()),
                  InputError);

  // enumeration truncated by a tiny cap is an explicit guard error; the
  // pair must survive the cheap pre-checks (equal dims and cycle edges) and
  // miss the fundamental-basis fast path
  Hypergraph theta123 = Hypergraph::create(
      {1, 2, 3, 4, 5}, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {4, 5}, {2, 5}});
  CHECK_FALSE(par_equal(theta123, fixtures::complete_bipartite(2, 3)));
  CHECK_THROWS_AS(par_equal(theta123, fixtures::complete_bipartite(2, 3), 2),
                  GuardError);
}

TEST_CASE("par equality matches compiled-set equality when exhaustive") {
  std::vector<Hypergraph> corpus{
      fixtures::diamond_graph(),    fixtures::diamond_with_pendant(),       fixtures::side_triangle_at_3(),
      fixtures::side_triangle_at_4(),       fixtures::complete_graph(3),
      fixtures::cycle_graph(4),  fixtures::cycle_graph(5),
      fixtures::complete_graph(4)};
  for (const Hypergraph& a : corpus) {
    for (const Hypergraph& b : corpus) {
      CompiledSet sa = compiled_set(a);
      CompiledSet sb = compiled_set(b);
      REQUIRE(sa.exhaustive);
      REQUIRE(sb.exhaustive);
      CHECK(par_equal(a, b) == (sa.classes == sb.classes));
    }
  }
}

TEST_CASE("compiled hypergraph JSON round trip") {
  Hypergraph g = fixtures::diamond_graph();
  CompiledHypergraph p = compile(g, cycle_basis(g));
  io::json j = io::compiled_to_json(p);
  CompiledHypergraph back = io::compiled_from_json(j);
  CHECK(back.hypergraph == p.hypergraph);
  CHECK(back.source_edges == p.source_edges);
}
