#include "ergraph/graph.hpp"

#include <algorithm>

namespace ergraph {

namespace {

void check_order(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  if (n > kMaxVertices)
    throw graph_size_error("graph on " + std::to_string(n) + " vertices exceeds the ceiling of " +
                           std::to_string(kMaxVertices));
}

// Symmetry and loop-freedom are invariants of every Graph; rows coming from
// any assembly path go through here.
void validate_rows(const std::vector<std::uint64_t>& rows) {
  const int n = static_cast<int>(rows.size());
  const std::uint64_t range = n == 0 ? 0 : ~std::uint64_t{0} >> (64 - n);
  for (int v = 0; v < n; ++v) {
    if (rows[static_cast<std::size_t>(v)] & ~range)
      throw std::invalid_argument("adjacency row mentions a vertex out of range");
    if (rows[static_cast<std::size_t>(v)] >> v & 1) throw std::invalid_argument("loop edge");
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((rows[static_cast<std::size_t>(u)] >> v & 1) !=
          (rows[static_cast<std::size_t>(v)] >> u & 1))
        throw std::invalid_argument("adjacency not symmetric");
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  check_order(n);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop edge");
    rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  Graph g;
  g.n_ = n;
  g.adj_ = std::move(rows);
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(std::vector<std::uint64_t> rows) {
  check_order(static_cast<int>(rows.size()));
  validate_rows(rows);
  Graph g;
  g.n_ = static_cast<int>(rows.size());
  g.adj_ = std::move(rows);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (std::uint64_t r : adj_) twice += static_cast<std::size_t>(std::popcount(r));
  return twice / 2;
}

VertexSet Graph::common_neighborhood(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("common_neighborhood: vertices must be distinct");
  return VertexSet(adj_[static_cast<std::size_t>(u)] & adj_[static_cast<std::size_t>(v)]);
}

Graph Graph::induced_subgraph(VertexSet s) const {
  if (s.bits() & ~vertices().bits())
    throw std::invalid_argument("induced_subgraph: member out of range");
  const std::vector<int> keep = s.elements();  // ascending
  const int m = static_cast<int>(keep.size());
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(m), 0);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (row(keep[static_cast<std::size_t>(a)]) >> keep[static_cast<std::size_t>(b)] & 1) {
        rows[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
        rows[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
      }
  Graph g;
  g.n_ = m;
  g.adj_ = std::move(rows);
  return g;
}

Graph Graph::complement() const {
  const std::uint64_t range = vertices().bits();
  std::vector<std::uint64_t> rows(adj_);
  for (int v = 0; v < n_; ++v)
    rows[static_cast<std::size_t>(v)] =
        (~rows[static_cast<std::size_t>(v)] & range) & ~(std::uint64_t{1} << v);
  Graph g;
  g.n_ = n_;
  g.adj_ = std::move(rows);
  return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count());
  for (int u = 0; u < n_; ++u) {
    std::uint64_t later = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
    for (std::uint64_t b = later; b; b &= b - 1) out.emplace_back(u, std::countr_zero(b));
  }
  return out;
}

Graph disjoint_sum(const Graph& g, const Graph& h) {
  const int n = g.vertex_count() + h.vertex_count();
  check_order(n);
  std::vector<std::uint64_t> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < g.vertex_count(); ++v) rows.push_back(g.row(v));
  for (int v = 0; v < h.vertex_count(); ++v) rows.push_back(h.row(v) << g.vertex_count());
  return Graph::from_rows(std::move(rows));
}

Graph m_copies(int m, const Graph& g) {
  if (m < 0) throw std::invalid_argument("m_copies: m must be non-negative");
  check_order(m * g.vertex_count());
  Graph out;
  for (int i = 0; i < m; ++i) out = disjoint_sum(out, g);
  return out;
}

Graph complete_graph(int n) {
  check_order(n);
  if (n < 1) throw std::invalid_argument("complete_graph: n must be positive");
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  const std::uint64_t range = ~std::uint64_t{0} >> (64 - n);
  for (int v = 0; v < n; ++v)
    rows[static_cast<std::size_t>(v)] = range & ~(std::uint64_t{1} << v);
  return Graph::from_rows(std::move(rows));
}

Graph empty_graph(int n) {
  check_order(n);
  return Graph::from_edges(n, {});
}

Graph path_graph(int m) {
  check_order(m);
  if (m < 1) throw std::invalid_argument("path_graph: m must be positive");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(m, edges);
}

Graph cycle_graph(int m) {
  check_order(m);
  if (m < 3) throw std::invalid_argument("cycle_graph: m must be at least 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
  return Graph::from_edges(m, edges);
}

Graph star_graph(int l) {
  check_order(l);
  if (l < 2) throw std::invalid_argument("star_graph: l must be at least 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < l; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(l, edges);
}

Graph wheel_graph(int m) {
  check_order(m + 1);
  if (m < 3) throw std::invalid_argument("wheel_graph: m must be at least 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(i, (i + 1) % m);
    edges.emplace_back(i, m);
  }
  return Graph::from_edges(m + 1, edges);
}

Graph turan_graph(int n, int parts) {
  check_order(n);
  if (n < 1 || parts < 1) throw std::invalid_argument("turan_graph: parameters must be positive");
  if (n % parts != 0) throw std::invalid_argument("turan_graph: parts must divide n");
  const int size = n / parts;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u / size != v / size) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite_graph(int m1, int m2) {
  check_order(m1 + m2);
  if (m1 < 1 || m2 < 1)
    throw std::invalid_argument("complete_bipartite_graph: sides must be positive");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < m1; ++u)
    for (int v = 0; v < m2; ++v) edges.emplace_back(u, m1 + v);
  return Graph::from_edges(m1 + m2, edges);
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph::from_edges(10, edges);
}

Graph k6_minus_perfect_matching() {
  Graph g = complete_graph(6);
  std::vector<std::uint64_t> rows;
  rows.reserve(6);
  for (int v = 0; v < 6; ++v) rows.push_back(g.row(v));
  for (int i = 0; i < 6; i += 2) {
    rows[static_cast<std::size_t>(i)] &= ~(std::uint64_t{1} << (i + 1));
    rows[static_cast<std::size_t>(i + 1)] &= ~(std::uint64_t{1} << i);
  }
  return Graph::from_rows(std::move(rows));
}

Graph named_graph(const NamedGraphSpec& spec) {
  using Kind = NamedGraphSpec::Kind;
  switch (spec.kind) {
    case Kind::complete:
      return complete_graph(spec.p1);
    case Kind::empty:
      return empty_graph(spec.p1);
    case Kind::path:
      return path_graph(spec.p1);
    case Kind::cycle:
      return cycle_graph(spec.p1);
    case Kind::star:
      return star_graph(spec.p1);
    case Kind::wheel:
      return wheel_graph(spec.p1);
    case Kind::turan:
      return turan_graph(spec.p1, spec.p2);
    case Kind::complete_bipartite:
      return complete_bipartite_graph(spec.p1, spec.p2);
    case Kind::petersen:
      return petersen_graph();
    case Kind::k6_minus_pm:
      return k6_minus_perfect_matching();
  }
  throw std::invalid_argument("named_graph: unknown kind");
}

}  // namespace ergraph
