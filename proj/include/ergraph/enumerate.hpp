// Exhaustive, isomorph-free enumeration of edge-regular graphs ER(n, d, lambda).
//
// Graphs are grown one vertex at a time; a partial graph survives only while
// every placed vertex can still reach degree d, every completed edge can
// still reach exactly lambda common neighbors, and the backward-adjacency
// sequence built so far is the lexicographically maximal one over all
// relabelings of the partial graph (prefixes of maximal sequences are
// maximal, so no isomorphism class is produced twice). Results are emitted
// sorted by canonical form bytes.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ergraph/graph.hpp"

namespace ergraph {

struct Feasibility {
  bool feasible = false;
  std::string reason;  // set when infeasible
};

// Arithmetic screens: d < n, lambda < d, n*d even (handshake), and
// 6 | n*d*lambda (triangle double counting). Necessary, not sufficient.
Feasibility er_parameter_feasible(int n, int d, int lambda);

struct EnumSpec {
  int n = 0;
  int d = 0;
  int lambda = 0;
  std::optional<std::uint64_t> max_results;
  std::optional<double> time_budget_seconds;
  // Enumeration refuses n > 12 unless this is set (the hard ceiling of 62
  // still applies); large cells are expensive and usually a mistake.
  bool allow_large = false;
};

struct SearchStats {
  std::uint64_t nodes = 0;    // accepted vertex placements
  std::uint64_t emitted = 0;  // isomorphism classes found
  std::uint64_t pruned_degree_high = 0;
  std::uint64_t pruned_degree_low = 0;
  std::uint64_t pruned_lambda_high = 0;
  std::uint64_t pruned_lambda_low = 0;
  std::uint64_t pruned_capacity = 0;
  std::uint64_t pruned_noncanonical = 0;
  bool complete = true;
  std::string note;  // infeasibility reason, budget note, or empty
  double elapsed_seconds = 0;
};

struct EnumerationResult {
  std::vector<Graph> graphs;  // sorted by canonical form bytes
  SearchStats stats;
};

EnumerationResult enumerate_er(const EnumSpec& spec);

// Streaming variant; the sink sees the same sorted order.
void enumerate_er(const EnumSpec& spec, const std::function<void(const Graph&)>& sink,
                  SearchStats& stats);

}  // namespace ergraph
