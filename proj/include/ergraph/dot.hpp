#pragma once

#include <string>
#include <vector>

#include "ergraph/graph.hpp"

namespace ergraph {

// Graphviz export. Node statements first, then edges with the lower endpoint
// first in ascending order, so output is deterministic. Optional labels are
// attached per vertex; the vector, when given, must have one entry per vertex.
std::string export_dot(const Graph& g, const std::vector<std::string>& labels = {});

}  // namespace ergraph
