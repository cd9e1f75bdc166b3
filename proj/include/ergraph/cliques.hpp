#pragma once

#include <cstdint>
#include <vector>

#include "ergraph/graph.hpp"

namespace ergraph {

// All maximal cliques as vertex masks (Bron-Kerbosch with pivoting).
// Deterministic output order for a given graph.
std::vector<std::uint64_t> maximal_cliques(const Graph& g);

// Size of a largest clique; 0 for the empty graph.
int clique_number(const Graph& g);

}  // namespace ergraph
