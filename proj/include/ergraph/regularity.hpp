// Regularity classification: regular, edge-regular, strongly regular, and
// regular clique assembly parameters, plus shared neighborhood structures.
//
// Conventions: an edge-regular graph must have at least one edge (the common
// neighbor count is a property of edges), and a strongly regular one at least
// one non-adjacent pair. Classification returns the parameters when the
// property holds, nothing otherwise.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ergraph/graph.hpp"
#include "ergraph/iso.hpp"

namespace ergraph {

struct ERParams {
  int n, d, lambda;
  bool operator==(const ERParams&) const = default;
};

struct SRParams {
  int n, d, lambda, mu;
  bool operator==(const SRParams&) const = default;
};

// Regular clique assembly: clique number k >= 2, every maximal clique has
// size k, and every edge lies in exactly one maximum clique.
struct RCAParams {
  int n, d, k;
  bool operator==(const RCAParams&) const = default;
};

// Common degree, if all vertices agree; absent for the 0-vertex graph.
std::optional<int> regular_degree(const Graph& g);

std::optional<ERParams> classify_er(const Graph& g);
std::optional<SRParams> classify_sr(const Graph& g);
std::optional<RCAParams> classify_rca(const Graph& g);

// Shared neighborhood structure of an adjacent pair: the subgraph induced by
// N(u) & N(v), relabeled ascending. Throws if u, v are not adjacent.
Graph sns(const Graph& g, int u, int v);

struct SNSClass {
  CanonicalForm form;
  Graph representative;  // canonically labeled
  int multiplicity = 0;  // number of edges with this SNS class
};

struct SNSReport {
  enum class Status { usns, multiple, vacuous };

  Status status = Status::vacuous;
  std::vector<SNSClass> classes;  // ordered by canonical form bytes
  // One entry per edge (ascending): the index into classes of its SNS.
  std::vector<std::pair<std::pair<int, int>, int>> edge_classes;
  // Present exactly when there is a single class: the uniform shared
  // neighborhood structure, canonically labeled.
  std::optional<Graph> usns;
  // How many distinct edges produce each SNS vertex set (sets ascending by mask).
  std::vector<std::pair<VertexSet, int>> set_multiplicities;
};

SNSReport sns_report(const Graph& g);

// Every connected component is regular (degrees uniform within components).
// Vacuously true for the 0-vertex graph.
bool is_component_regular(const Graph& g);

}  // namespace ergraph
