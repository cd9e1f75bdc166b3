#include "ergraph/products.hpp"

namespace ergraph {

namespace {

void check_product_order(long long n) {
  if (n > kMaxVertices)
    throw graph_size_error("product on " + std::to_string(n) + " vertices exceeds the ceiling of " +
                           std::to_string(kMaxVertices));
}

}  // namespace

std::pair<Graph, ProductVertexMap> cartesian_product(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  check_product_order(static_cast<long long>(n1) * n2);
  const ProductVertexMap map{ProductVertexMap::Kind::cartesian, n1, n2};
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n1; ++a)
    for (auto [b, d] : g2.edges()) edges.emplace_back(map.index(a, b), map.index(a, d));
  for (auto [a, c] : g1.edges())
    for (int b = 0; b < n2; ++b) edges.emplace_back(map.index(a, b), map.index(c, b));
  return {Graph::from_edges(n1 * n2, edges), map};
}

std::pair<Graph, ProductVertexMap> tensor_product(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  check_product_order(static_cast<long long>(n1) * n2);
  const ProductVertexMap map{ProductVertexMap::Kind::tensor, n1, n2};
  std::vector<std::pair<int, int>> edges;
  for (auto [a, c] : g1.edges())
    for (auto [b, d] : g2.edges()) {
      edges.emplace_back(map.index(a, b), map.index(c, d));
      edges.emplace_back(map.index(a, d), map.index(c, b));
    }
  return {Graph::from_edges(n1 * n2, edges), map};
}

std::pair<Graph, ProductVertexMap> shadow_graph(int m, const Graph& g) {
  if (m < 1) throw std::invalid_argument("shadow_graph: m must be at least 1");
  const int n = g.vertex_count();
  check_product_order(static_cast<long long>(m) * n);
  const ProductVertexMap map{ProductVertexMap::Kind::shadow, m, n};
  std::vector<std::pair<int, int>> edges;
  for (auto [j, l] : g.edges())
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) {
        const int a = map.index(i, j);
        const int b = map.index(k, l);
        if (a < b)
          edges.emplace_back(a, b);
        else
          edges.emplace_back(b, a);
      }
  return {Graph::from_edges(m * n, edges), map};
}

}  // namespace ergraph
