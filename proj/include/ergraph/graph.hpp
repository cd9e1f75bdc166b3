// Core graph type: simple undirected graphs on at most 62 vertices.
//
// Adjacency is stored as one 64-bit mask per vertex, so neighborhood
// intersection is a single AND. The 62-vertex ceiling matches the one-byte
// size header of the graph6 format and is enforced on every construction
// path.

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ergraph {

inline constexpr int kMaxVertices = 62;

// Thrown when a construction would exceed kMaxVertices.
struct graph_size_error : std::length_error {
  explicit graph_size_error(const std::string& what) : std::length_error(what) {}
};

// A subset of the vertices 0..61 of some graph, packed into one word.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  std::uint64_t bits() const { return bits_; }
  bool contains(int v) const { return v >= 0 && v < 64 && (bits_ >> v & 1); }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  void add(int v) {
    if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("VertexSet: vertex out of range");
    bits_ |= std::uint64_t{1} << v;
  }
  void remove(int v) {
    if (v >= 0 && v < 64) bits_ &= ~(std::uint64_t{1} << v);
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

// Immutable simple undirected graph. Vertices are 0..n-1; no loops, no
// multi-edges. The adjacency relation is kept symmetric by construction and
// re-validated whenever a graph is assembled from raw rows.
class Graph {
 public:
  Graph() = default;  // the graph on 0 vertices

  // Builds a graph from an edge list. Duplicate edges collapse; loops and
  // out-of-range endpoints are rejected.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  // Builds a graph from prebuilt adjacency rows (validated).
  static Graph from_rows(std::vector<std::uint64_t> rows);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const;

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u)] >> v & 1;
  }

  // Raw adjacency bits of v (no bounds check beyond debug assert).
  std::uint64_t row(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  int degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[static_cast<std::size_t>(v)]);
  }

  VertexSet neighborhood(int v) const {
    check_vertex(v);
    return VertexSet(adj_[static_cast<std::size_t>(v)]);
  }

  // N(u) & N(v) for distinct u, v (adjacency not required).
  VertexSet common_neighborhood(int u, int v) const;

  // All vertices as a set.
  VertexSet vertices() const {
    return VertexSet(n_ == 0 ? 0 : ~std::uint64_t{0} >> (64 - n_));
  }

  // Subgraph induced by s; members are relabeled 0..|s|-1 in ascending order
  // of their original indices.
  Graph induced_subgraph(VertexSet s) const;

  Graph complement() const;

  // Edge list, lower endpoint first, ascending.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
  }

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

// G + H on disjoint vertex sets; H's vertices are shifted by G's count.
Graph disjoint_sum(const Graph& g, const Graph& h);

// m disjoint copies of g (m >= 0).
Graph m_copies(int m, const Graph& g);

// --- Named constructions (fixed labelings, pinned by tests) ---

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int m);    // vertices 0..m-1 along the path
Graph cycle_graph(int m);   // m >= 3, i ~ (i+1) mod m
Graph star_graph(int l);    // l vertices: hub 0, leaves 1..l-1
Graph wheel_graph(int m);   // m+1 vertices: rim cycle 0..m-1, hub m
Graph turan_graph(int n, int parts);  // parts | n; part p = consecutive block
Graph complete_bipartite_graph(int m1, int m2);  // sides 0..m1-1, m1..m1+m2-1
Graph petersen_graph();     // outer cycle 0..4, spokes i~i+5, inner i+5~((i+2)%5)+5
Graph k6_minus_perfect_matching();  // K_6 minus {0-1, 2-3, 4-5}

struct NamedGraphSpec {
  enum class Kind {
    complete,
    empty,
    path,
    cycle,
    star,
    wheel,
    turan,
    complete_bipartite,
    petersen,
    k6_minus_pm,
  };
  Kind kind;
  int p1 = 0;  // size parameter (n, m, l, or m1 by kind)
  int p2 = 0;  // second parameter (parts or m2) where applicable
};

Graph named_graph(const NamedGraphSpec& spec);

}  // namespace ergraph
