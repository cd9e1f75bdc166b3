// graph6 serialization (the single-byte-header variant, n <= 62).
//
// Layout: one byte n+63, then ceil(n(n-1)/2 / 6) data bytes. The data bit
// stream lists the upper triangle column by column, x(0,1), x(0,2), x(1,2),
// x(0,3), ..., packed six bits per byte, first bit highest, each byte offset
// by 63. Trailing pad bits must be zero.

#pragma once

#include <string>
#include <string_view>

#include "ergraph/graph.hpp"

namespace ergraph {

std::string write_graph6(const Graph& g);

// Strict parse: rejects bad header bytes, bytes outside 63..126, wrong data
// length, and nonzero padding. A '~' header (extended sizes) is rejected with
// graph_size_error.
Graph parse_graph6(std::string_view line);

}  // namespace ergraph
