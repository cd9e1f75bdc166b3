#include "ergraph/regularity.hpp"

#include <algorithm>
#include <map>

#include "ergraph/cliques.hpp"

namespace ergraph {

std::optional<int> regular_degree(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return std::nullopt;
  const int d = g.degree(0);
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

std::optional<ERParams> classify_er(const Graph& g) {
  const std::optional<int> d = regular_degree(g);
  if (!d) return std::nullopt;
  if (g.edge_count() == 0) return std::nullopt;
  int lambda = -1;
  for (auto [u, v] : g.edges()) {
    const int c = g.common_neighborhood(u, v).size();
    if (lambda == -1)
      lambda = c;
    else if (lambda != c)
      return std::nullopt;
  }
  ERParams params{g.vertex_count(), *d, lambda};
  if (!(params.n > params.d && params.d > params.lambda))
    throw std::logic_error("classify_er: parameter invariant violated");
  return params;
}

std::optional<SRParams> classify_sr(const Graph& g) {
  const std::optional<ERParams> er = classify_er(g);
  if (!er) return std::nullopt;
  const int n = g.vertex_count();
  int mu = -1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      const int c = g.common_neighborhood(u, v).size();
      if (mu == -1)
        mu = c;
      else if (mu != c)
        return std::nullopt;
    }
  if (mu == -1) return std::nullopt;  // complete graph: no non-adjacent pair
  return SRParams{er->n, er->d, er->lambda, mu};
}

std::optional<RCAParams> classify_rca(const Graph& g) {
  const std::optional<int> d = regular_degree(g);
  if (!d) return std::nullopt;
  const std::vector<std::uint64_t> cliques = maximal_cliques(g);
  int k = 0;
  for (std::uint64_t c : cliques) k = std::max(k, std::popcount(c));
  if (k < 2) return std::nullopt;
  for (std::uint64_t c : cliques)
    if (std::popcount(c) != k) return std::nullopt;

  // Every edge must lie in exactly one maximum clique.
  std::map<std::pair<int, int>, int> cover;
  for (std::uint64_t c : cliques) {
    const VertexSet members(c);
    const std::vector<int> vs = members.elements();
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b) ++cover[{vs[a], vs[b]}];
  }
  for (auto [u, v] : g.edges()) {
    const auto it = cover.find({u, v});
    if (it == cover.end() || it->second != 1) return std::nullopt;
  }
  return RCAParams{g.vertex_count(), *d, k};
}

Graph sns(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("sns: vertices must be adjacent");
  return g.induced_subgraph(g.common_neighborhood(u, v));
}

SNSReport sns_report(const Graph& g) {
  SNSReport report;
  const std::vector<std::pair<int, int>> edges = g.edges();
  if (edges.empty()) {
    report.status = SNSReport::Status::vacuous;
    return report;
  }

  std::map<CanonicalForm, int> class_index;
  std::map<std::uint64_t, int> set_count;
  for (auto [u, v] : edges) {
    const VertexSet shared = g.common_neighborhood(u, v);
    ++set_count[shared.bits()];
    const CanonicalForm form = canonical_form(g.induced_subgraph(shared));
    auto [it, fresh] = class_index.try_emplace(form, static_cast<int>(report.classes.size()));
    if (fresh) report.classes.push_back({form, form_to_graph(form), 0});
    report.classes[static_cast<std::size_t>(it->second)].multiplicity += 1;
    report.edge_classes.push_back({{u, v}, it->second});
  }

  // Reorder classes by canonical form and remap the per-edge indices.
  std::vector<int> order(report.classes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return report.classes[static_cast<std::size_t>(a)].form <
           report.classes[static_cast<std::size_t>(b)].form;
  });
  std::vector<int> rank(order.size());
  std::vector<SNSClass> sorted;
  sorted.reserve(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    rank[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
    sorted.push_back(std::move(report.classes[static_cast<std::size_t>(order[pos])]));
  }
  report.classes = std::move(sorted);
  for (auto& [edge, idx] : report.edge_classes) idx = rank[static_cast<std::size_t>(idx)];

  for (const auto& [bits, count] : set_count)
    report.set_multiplicities.emplace_back(VertexSet(bits), count);

  if (report.classes.size() == 1) {
    report.status = SNSReport::Status::usns;
    report.usns = report.classes[0].representative;
  } else {
    report.status = SNSReport::Status::multiple;
  }
  return report;
}

bool is_component_regular(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    const int d = g.degree(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (g.degree(v) != d) return false;
      for (int w : g.neighborhood(v).elements())
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
    }
  }
  return true;
}

}  // namespace ergraph
