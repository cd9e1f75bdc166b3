#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ergraph/graph.hpp"

using ergraph::Graph;
using ergraph::VertexSet;

TEST_CASE("VertexSet basics") {
  VertexSet s = VertexSet::of({0, 3, 61});
  CHECK(s.size() == 3);
  CHECK(s.contains(0));
  CHECK(s.contains(3));
  CHECK(s.contains(61));
  CHECK_FALSE(s.contains(1));
  CHECK_FALSE(s.contains(-1));
  CHECK_FALSE(s.contains(63));
  CHECK(s.elements() == std::vector<int>{0, 3, 61});

  s.remove(3);
  CHECK_FALSE(s.contains(3));
  s.remove(3);  // removing twice is harmless
  CHECK(s.size() == 2);

  CHECK_THROWS_AS(s.add(62), std::invalid_argument);
  CHECK_THROWS_AS(s.add(-1), std::invalid_argument);

  CHECK((VertexSet::of({1, 2}) & VertexSet::of({2, 3})) == VertexSet::of({2}));
  CHECK((VertexSet::of({1, 2}) | VertexSet::of({2, 3})) == VertexSet::of({1, 2, 3}));
  CHECK(VertexSet().empty());
}

TEST_CASE("from_edges builds and validates") {
  const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 1}, {1, 2}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);  // duplicates and reversals collapse
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 0);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(-1, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(63, {}), ergraph::graph_size_error);
  CHECK_NOTHROW(Graph::from_edges(62, {{0, 61}}));
}

TEST_CASE("from_rows validates symmetry, loops, range") {
  CHECK_NOTHROW(Graph::from_rows({0b010, 0b101, 0b010}));
  // asymmetric
  CHECK_THROWS_AS(Graph::from_rows({0b010, 0b000, 0b000}), std::invalid_argument);
  // loop bit on the diagonal
  CHECK_THROWS_AS(Graph::from_rows({0b001, 0b000, 0b000}), std::invalid_argument);
  // bit beyond n
  CHECK_THROWS_AS(Graph::from_rows({0b1000, 0b0000, 0b0000}), std::invalid_argument);

  const Graph p3 = Graph::from_rows({0b010, 0b101, 0b010});
  CHECK(p3 == ergraph::path_graph(3));
}

TEST_CASE("queries: neighborhoods and bounds") {
  const Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}});
  CHECK(g.neighborhood(1) == VertexSet::of({0, 2, 3}));
  CHECK(g.common_neighborhood(0, 1) == VertexSet::of({2}));
  CHECK(g.common_neighborhood(0, 3) == VertexSet::of({1}));  // adjacency not required
  CHECK(g.common_neighborhood(0, 4).empty());
  CHECK_THROWS_AS(g.common_neighborhood(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.has_edge(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(g.degree(-1), std::invalid_argument);
  CHECK(g.vertices() == VertexSet::of({0, 1, 2, 3, 4}));
  CHECK(Graph().vertices().empty());
}

TEST_CASE("induced subgraph relabels ascending") {
  const Graph g = Graph::from_edges(6, {{1, 3}, {3, 5}, {1, 5}, {0, 1}});
  const Graph tri = g.induced_subgraph(VertexSet::of({1, 3, 5}));
  CHECK(tri == ergraph::complete_graph(3));  // 1->0, 3->1, 5->2
  const Graph pair = g.induced_subgraph(VertexSet::of({0, 3}));
  CHECK(pair.vertex_count() == 2);
  CHECK(pair.edge_count() == 0);
  CHECK(g.induced_subgraph(VertexSet()) == Graph());
  CHECK_THROWS_AS(g.induced_subgraph(VertexSet::of({6})), std::invalid_argument);
}

TEST_CASE("complement") {
  CHECK(ergraph::complete_graph(4).complement() == ergraph::empty_graph(4));
  CHECK(ergraph::empty_graph(4).complement() == ergraph::complete_graph(4));
  CHECK(Graph().complement() == Graph());
  const Graph c5 = ergraph::cycle_graph(5);
  const Graph cc = c5.complement();
  CHECK(cc.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(cc.degree(v) == 2);
}

TEST_CASE("disjoint_sum and m_copies") {
  const Graph two_triangles = ergraph::disjoint_sum(ergraph::complete_graph(3),
                                                    ergraph::complete_graph(3));
  CHECK(two_triangles.vertex_count() == 6);
  CHECK(two_triangles.edge_count() == 6);
  CHECK(two_triangles.has_edge(3, 4));
  CHECK_FALSE(two_triangles.has_edge(2, 3));

  CHECK(ergraph::m_copies(0, ergraph::complete_graph(3)) == Graph());
  CHECK(ergraph::m_copies(1, ergraph::petersen_graph()) == ergraph::petersen_graph());
  const Graph triple = ergraph::m_copies(3, ergraph::complete_graph(3));
  CHECK(triple.vertex_count() == 9);
  CHECK(triple.edge_count() == 9);
  CHECK_THROWS_AS(ergraph::m_copies(-1, Graph()), std::invalid_argument);
  CHECK_THROWS_AS(ergraph::m_copies(7, ergraph::petersen_graph()), ergraph::graph_size_error);
}

TEST_CASE("named graphs: orders, sizes, pinned adjacencies") {
  const Graph pet = ergraph::petersen_graph();
  CHECK(pet.vertex_count() == 10);
  CHECK(pet.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
  CHECK(pet.has_edge(0, 1));
  CHECK(pet.has_edge(4, 0));   // outer cycle closes
  CHECK(pet.has_edge(0, 5));   // spoke
  CHECK(pet.has_edge(5, 7));   // inner pentagram step
  CHECK(pet.has_edge(8, 5));   // 8 = 3+5 -> (3+2)%5+5 = 5
  CHECK_FALSE(pet.has_edge(5, 6));

  const Graph k6pm = ergraph::k6_minus_perfect_matching();
  CHECK(k6pm.vertex_count() == 6);
  CHECK(k6pm.edge_count() == 12);
  for (int v = 0; v < 6; ++v) CHECK(k6pm.degree(v) == 4);
  CHECK_FALSE(k6pm.has_edge(0, 1));
  CHECK_FALSE(k6pm.has_edge(2, 3));
  CHECK_FALSE(k6pm.has_edge(4, 5));
  CHECK(k6pm.has_edge(0, 2));

  const Graph t93 = ergraph::turan_graph(9, 3);
  CHECK(t93.vertex_count() == 9);
  CHECK(t93.edge_count() == 27);
  CHECK_FALSE(t93.has_edge(0, 1));  // same block
  CHECK(t93.has_edge(0, 3));
  CHECK_THROWS_AS(ergraph::turan_graph(10, 3), std::invalid_argument);

  CHECK(ergraph::cycle_graph(3) == ergraph::complete_graph(3));
  CHECK(ergraph::path_graph(1) == ergraph::empty_graph(1));
  CHECK(ergraph::star_graph(2) == ergraph::path_graph(2));
  CHECK(ergraph::complete_bipartite_graph(1, 2).edge_count() == 2);

  const Graph w4 = ergraph::wheel_graph(4);
  CHECK(w4.vertex_count() == 5);
  CHECK(w4.edge_count() == 8);
  CHECK(w4.degree(4) == 4);  // hub is the last vertex

  CHECK(ergraph::empty_graph(0) == Graph());
  CHECK_THROWS_AS(ergraph::complete_graph(0), std::invalid_argument);
  CHECK_THROWS_AS(ergraph::cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(ergraph::wheel_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(ergraph::star_graph(1), std::invalid_argument);
  CHECK_THROWS_AS(ergraph::complete_graph(63), ergraph::graph_size_error);
}

TEST_CASE("named_graph dispatcher matches direct constructors") {
  using Spec = ergraph::NamedGraphSpec;
  using Kind = Spec::Kind;
  CHECK(ergraph::named_graph({Kind::complete, 5, 0}) == ergraph::complete_graph(5));
  CHECK(ergraph::named_graph({Kind::empty, 4, 0}) == ergraph::empty_graph(4));
  CHECK(ergraph::named_graph({Kind::path, 4, 0}) == ergraph::path_graph(4));
  CHECK(ergraph::named_graph({Kind::cycle, 5, 0}) == ergraph::cycle_graph(5));
  CHECK(ergraph::named_graph({Kind::star, 4, 0}) == ergraph::star_graph(4));
  CHECK(ergraph::named_graph({Kind::wheel, 5, 0}) == ergraph::wheel_graph(5));
  CHECK(ergraph::named_graph({Kind::turan, 9, 3}) == ergraph::turan_graph(9, 3));
  CHECK(ergraph::named_graph({Kind::complete_bipartite, 2, 3}) ==
        ergraph::complete_bipartite_graph(2, 3));
  CHECK(ergraph::named_graph({Kind::petersen, 0, 0}) == ergraph::petersen_graph());
  CHECK(ergraph::named_graph({Kind::k6_minus_pm, 0, 0}) == ergraph::k6_minus_perfect_matching());
}
