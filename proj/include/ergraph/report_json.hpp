// JSON serialization for analysis results and theorem reports, plus the
// top-level report document emitted by the command-line tool. Key order is
// fixed and no wall-clock values appear, so identical inputs serialize to
// identical bytes.

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ergraph/enumerate.hpp"
#include "ergraph/graph.hpp"
#include "ergraph/regularity.hpp"
#include "ergraph/theorems.hpp"

namespace ergraph {

using ordered_json = nlohmann::ordered_json;

// {"graph6": ..., "n": ..., "m": ...}
ordered_json graph_json(const Graph& g);

// Parameter triples/quadruples; null when the classification is absent.
ordered_json er_json(const std::optional<ERParams>& p);
ordered_json sr_json(const std::optional<SRParams>& p);
ordered_json rca_json(const std::optional<RCAParams>& p);

std::string sns_status_name(SNSReport::Status s);
ordered_json sns_json(const SNSReport& report);

// Full per-graph analysis: parameters, classifications, shared neighborhood
// structure, clique number.
ordered_json analysis_json(const Graph& g);

// Search statistics without elapsed time (timings stay on stderr).
ordered_json stats_json(const SearchStats& stats);

ordered_json theorem_json(const TheoremReport& report);
ordered_json factorization_json(const FactorizationReport& report);

// The envelope: {"schema_version": 1, "command", "inputs", "result", "stats"}.
// The result payload carries a "type" tag.
ordered_json report_document(const std::string& command, const std::vector<std::string>& inputs,
                             ordered_json result, ordered_json stats = ordered_json::object());

// Two-space indentation plus a trailing newline.
std::string dump_report(const ordered_json& doc);

}  // namespace ergraph
