#include "ergraph/cliques.hpp"

#include <bit>

namespace ergraph {

namespace {

void expand(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
            std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // Pivot: vertex of p|x with the most neighbors in p, lowest id on ties.
  int pivot = -1;
  int best = -1;
  for (std::uint64_t b = p | x; b; b &= b - 1) {
    const int u = std::countr_zero(b);
    const int score = std::popcount(p & g.row(u));
    if (score > best) {
      best = score;
      pivot = u;
    }
  }
  for (std::uint64_t b = p & ~g.row(pivot); b; b &= b - 1) {
    const int v = std::countr_zero(b);
    const std::uint64_t bit = std::uint64_t{1} << v;
    expand(g, r | bit, p & g.row(v), x & g.row(v), out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

std::vector<std::uint64_t> maximal_cliques(const Graph& g) {
  std::vector<std::uint64_t> out;
  if (g.vertex_count() == 0) return out;
  expand(g, 0, g.vertices().bits(), 0, out);
  return out;
}

int clique_number(const Graph& g) {
  int best = 0;
  for (std::uint64_t c : maximal_cliques(g)) best = std::max(best, std::popcount(c));
  return best;
}

}  // namespace ergraph
