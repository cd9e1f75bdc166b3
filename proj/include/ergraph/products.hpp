// Graph products and the shadow construction.
//
// Vertex indexing is row-major: pair (a, b) lands at a*n2 + b, where n2 is
// the second factor's order (for shadows, the original graph's order). The
// returned map makes the coordinate convention explicit for callers.

#pragma once

#include <utility>

#include "ergraph/graph.hpp"

namespace ergraph {

struct ProductVertexMap {
  enum class Kind { cartesian, tensor, shadow };

  Kind kind;
  int n1 = 0;  // first factor order; for shadows, the number of copies
  int n2 = 0;  // second factor order; for shadows, the base graph order

  int index(int a, int b) const {
    if (a < 0 || a >= n1 || b < 0 || b >= n2)
      throw std::invalid_argument("ProductVertexMap: coordinate out of range");
    return a * n2 + b;
  }
  std::pair<int, int> coords(int idx) const {
    if (idx < 0 || idx >= n1 * n2)
      throw std::invalid_argument("ProductVertexMap: index out of range");
    return {idx / n2, idx % n2};
  }
};

// Cartesian product: (a, b) ~ (c, d) iff a = c and b ~ d, or b = d and a ~ c.
std::pair<Graph, ProductVertexMap> cartesian_product(const Graph& g1, const Graph& g2);

// Tensor (categorical) product: (a, b) ~ (c, d) iff a ~ c and b ~ d.
std::pair<Graph, ProductVertexMap> tensor_product(const Graph& g1, const Graph& g2);

// Shadow: m copies of g; copy i of vertex j is adjacent to copy k of vertex l
// exactly when j ~ l in g (i = k included). m >= 1.
std::pair<Graph, ProductVertexMap> shadow_graph(int m, const Graph& g);

}  // namespace ergraph
