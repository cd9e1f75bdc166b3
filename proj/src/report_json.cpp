#include "ergraph/report_json.hpp"

#include "ergraph/cliques.hpp"
#include "ergraph/graph6.hpp"

namespace ergraph {

ordered_json graph_json(const Graph& g) {
  return {{"graph6", write_graph6(g)}, {"n", g.vertex_count()}, {"m", g.edge_count()}};
}

ordered_json er_json(const std::optional<ERParams>& p) {
  if (!p) return nullptr;
  return {{"n", p->n}, {"d", p->d}, {"lambda", p->lambda}};
}

ordered_json sr_json(const std::optional<SRParams>& p) {
  if (!p) return nullptr;
  return {{"n", p->n}, {"d", p->d}, {"lambda", p->lambda}, {"mu", p->mu}};
}

ordered_json rca_json(const std::optional<RCAParams>& p) {
  if (!p) return nullptr;
  return {{"n", p->n}, {"d", p->d}, {"k", p->k}};
}

std::string sns_status_name(SNSReport::Status s) {
  switch (s) {
    case SNSReport::Status::usns:
      return "usns";
    case SNSReport::Status::multiple:
      return "multiple";
    case SNSReport::Status::vacuous:
      return "vacuous";
  }
  return "unknown";
}

ordered_json sns_json(const SNSReport& report) {
  ordered_json classes = ordered_json::array();
  for (const SNSClass& cls : report.classes)
    classes.push_back({{"graph6", write_graph6(cls.representative)},
                       {"multiplicity", cls.multiplicity},
                       {"component_regular", is_component_regular(cls.representative)}});
  ordered_json edge_classes = ordered_json::array();
  for (const auto& [edge, cls] : report.edge_classes)
    edge_classes.push_back({edge.first, edge.second, cls});
  ordered_json sets = ordered_json::array();
  for (const auto& [set, count] : report.set_multiplicities) {
    ordered_json vertices = ordered_json::array();
    for (int v : set.elements()) vertices.push_back(v);
    sets.push_back({{"vertices", vertices}, {"edges", count}});
  }
  return {{"status", sns_status_name(report.status)},
          {"usns", report.usns ? ordered_json(write_graph6(*report.usns)) : nullptr},
          {"classes", classes},
          {"edge_classes", edge_classes},
          {"set_multiplicities", sets}};
}

ordered_json analysis_json(const Graph& g) {
  const std::optional<int> degree = regular_degree(g);
  ordered_json result = {{"type", "analysis"}, {"graph", graph_json(g)}};
  result["regular_degree"] = degree ? ordered_json(*degree) : nullptr;
  result["er"] = er_json(classify_er(g));
  result["sr"] = sr_json(classify_sr(g));
  result["rca"] = rca_json(classify_rca(g));
  result["clique_number"] = clique_number(g);
  result["sns"] = sns_json(sns_report(g));
  return result;
}

ordered_json stats_json(const SearchStats& stats) {
  return {{"nodes", stats.nodes},
          {"emitted", stats.emitted},
          {"pruned_degree_high", stats.pruned_degree_high},
          {"pruned_degree_low", stats.pruned_degree_low},
          {"pruned_lambda_high", stats.pruned_lambda_high},
          {"pruned_lambda_low", stats.pruned_lambda_low},
          {"pruned_capacity", stats.pruned_capacity},
          {"pruned_noncanonical", stats.pruned_noncanonical},
          {"complete", stats.complete},
          {"note", stats.note}};
}

ordered_json theorem_json(const TheoremReport& report) {
  ordered_json cells = ordered_json::array();
  for (const CellCount& c : report.cells)
    cells.push_back({{"n", c.n}, {"d", c.d}, {"lambda", c.lambda}, {"classes", c.classes}});
  ordered_json witnesses = ordered_json::array();
  for (const WitnessGraph& w : report.witnesses) {
    ordered_json entry = {{"graph6", w.graph6}, {"detail", w.detail}};
    if (w.u >= 0) {
      entry["u"] = w.u;
      entry["v"] = w.v;
    }
    witnesses.push_back(std::move(entry));
  }
  return {{"type", "theorem"},
          {"theorem", report.theorem},
          {"universe", report.universe},
          {"verdict", verdict_name(report.verdict)},
          {"complete", report.complete},
          {"cells", cells},
          {"graphs_scanned", report.graphs_scanned},
          {"edges_checked", report.edges_checked},
          {"witnesses", witnesses},
          {"notes", report.notes}};
}

ordered_json factorization_json(const FactorizationReport& report) {
  ordered_json candidates = ordered_json::array();
  for (const FactorCandidate& c : report.candidates) {
    ordered_json entry = ordered_json::object();
    entry["n1"] = c.n1 > 0 ? ordered_json(c.n1) : nullptr;
    entry["n2"] = c.n2 > 0 ? ordered_json(c.n2) : nullptr;
    entry["d1"] = c.d1 >= 0 ? ordered_json(c.d1) : nullptr;
    entry["d2"] = c.d2 >= 0 ? ordered_json(c.d2) : nullptr;
    entry["lambda1"] = c.lambda1 >= 0 ? ordered_json(c.lambda1) : nullptr;
    entry["lambda2"] = c.lambda2 >= 0 ? ordered_json(c.lambda2) : nullptr;
    entry["reason"] = c.reason ? ordered_json(reason_name(*c.reason)) : nullptr;
    entry["citation"] = c.citation.empty() ? ordered_json(nullptr) : ordered_json(c.citation);
    entry["detail"] = c.detail;
    entry["verified_by_enumeration"] = c.verified_by_enumeration;
    candidates.push_back(std::move(entry));
  }
  return {{"type", "factorization"},
          {"product", report.product},
          {"target",
           {{"n", report.target.n}, {"d", report.target.d}, {"lambda", report.target.lambda}}},
          {"clique_k", report.clique_k},
          {"surviving_count", report.surviving().size()},
          {"candidates", candidates},
          {"notes", report.notes}};
}

ordered_json report_document(const std::string& command, const std::vector<std::string>& inputs,
                             ordered_json result, ordered_json stats) {
  return {{"schema_version", 1},
          {"command", command},
          {"inputs", inputs},
          {"result", std::move(result)},
          {"stats", std::move(stats)}};
}

std::string dump_report(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace ergraph
