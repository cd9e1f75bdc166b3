#include "ergraph/dot.hpp"

namespace ergraph {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string export_dot(const Graph& g, const std::vector<std::string>& labels) {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(g.vertex_count()))
    throw std::invalid_argument("export_dot: label count must match vertex count");
  std::string out = "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out += "  " + std::to_string(v);
    if (!labels.empty()) out += " [label=" + quote(labels[static_cast<std::size_t>(v)]) + "]";
    out += ";\n";
  }
  for (auto [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace ergraph
