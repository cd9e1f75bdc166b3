#include "ergraph/iso.hpp"

#include <algorithm>
#include <set>

#include "ergraph/graph6.hpp"

namespace ergraph {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.map.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.map[static_cast<std::size_t>(i)] = i;
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.map.assign(map.size(), 0);
  for (std::size_t v = 0; v < map.size(); ++v) p.map[static_cast<std::size_t>(map[v])] = static_cast<int>(v);
  return p;
}

Graph apply_permutation(const Graph& g, const Permutation& perm) {
  const int n = g.vertex_count();
  if (perm.size() != n) throw std::invalid_argument("apply_permutation: size mismatch");
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    const int a = perm(u);
    const int b = perm(v);
    rows[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
    rows[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
  }
  return Graph::from_rows(std::move(rows));
}

namespace {

using Partition = std::vector<std::vector<int>>;

std::uint64_t cell_mask(const std::vector<int>& cell) {
  std::uint64_t m = 0;
  for (int v : cell) m |= std::uint64_t{1} << v;
  return m;
}

// Equitable refinement: split cells by neighbor counts into any other cell
// until stable. Splits order sub-cells by count, descending; everything here
// depends only on counts and partition order, so the procedure commutes with
// relabeling.
void refine(const Graph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < p.size() && !changed; ++s) {
      const std::uint64_t splitter = cell_mask(p[s]);
      for (std::size_t c = 0; c < p.size() && !changed; ++c) {
        if (p[c].size() <= 1) continue;
        const int first = std::popcount(g.row(p[c][0]) & splitter);
        bool uniform = true;
        for (int v : p[c])
          if (std::popcount(g.row(v) & splitter) != first) {
            uniform = false;
            break;
          }
        if (uniform) continue;

        std::vector<std::pair<int, int>> keyed;  // (-count, v), stable within count
        keyed.reserve(p[c].size());
        for (int v : p[c]) keyed.emplace_back(-std::popcount(g.row(v) & splitter), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        Partition groups;
        for (const auto& [key, v] : keyed) {
          if (groups.empty() || std::popcount(g.row(groups.back()[0]) & splitter) !=
                                    std::popcount(g.row(v) & splitter))
            groups.emplace_back();
          groups.back().push_back(v);
        }
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(c));
        p.insert(p.begin() + static_cast<std::ptrdiff_t>(c),
                 std::make_move_iterator(groups.begin()), std::make_move_iterator(groups.end()));
        changed = true;
      }
    }
  }
}

std::vector<std::uint8_t> pack_upper_triangle(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  std::vector<std::uint8_t> bits(static_cast<std::size_t>((n * (n - 1) / 2 + 7) / 8), 0);
  std::size_t t = 0;
  for (int p = 0; p < n; ++p) {
    const std::uint64_t row = g.row(order[static_cast<std::size_t>(p)]);
    for (int q = p + 1; q < n; ++q, ++t)
      if (row >> order[static_cast<std::size_t>(q)] & 1)
        bits[t >> 3] |= static_cast<std::uint8_t>(0x80 >> (t & 7));
  }
  return bits;
}

struct CanonSearch {
  const Graph& g;
  int n;

  bool have_best = false;
  std::vector<std::uint8_t> best_bits;
  std::vector<int> best_order;  // position -> vertex

  std::set<std::vector<int>> auto_set;          // dedup
  std::vector<std::vector<int>> autos;          // discovered automorphisms, v -> image
  std::vector<int> orbit;                       // union-find over vertices
  std::vector<int> base;                        // individualized vertices on current path

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {
    orbit.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) orbit[static_cast<std::size_t>(v)] = v;
  }

  int find(int v) {
    while (orbit[static_cast<std::size_t>(v)] != v) {
      orbit[static_cast<std::size_t>(v)] = orbit[static_cast<std::size_t>(orbit[static_cast<std::size_t>(v)])];
      v = orbit[static_cast<std::size_t>(v)];
    }
    return v;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) orbit[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

  void record_automorphism(const std::vector<int>& pi) {
    if (auto_set.size() >= 256) return;
    if (!auto_set.insert(pi).second) return;
    autos.push_back(pi);
    for (int v = 0; v < n; ++v) unite(v, pi[static_cast<std::size_t>(v)]);
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) inv[static_cast<std::size_t>(pi[static_cast<std::size_t>(v)])] = v;
    if (auto_set.insert(inv).second) autos.push_back(inv);
  }

  void leaf(const Partition& p) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (const auto& cell : p) order.push_back(cell[0]);
    std::vector<std::uint8_t> bits = pack_upper_triangle(g, order);
    if (!have_best || bits > best_bits) {
      best_bits = std::move(bits);
      best_order = std::move(order);
      have_best = true;
      return;
    }
    if (bits == best_bits) {
      // Two orderings with the same matrix give an automorphism.
      std::vector<int> pi(static_cast<std::size_t>(n));
      for (int pos = 0; pos < n; ++pos)
        pi[static_cast<std::size_t>(best_order[static_cast<std::size_t>(pos)])] =
            order[static_cast<std::size_t>(pos)];
      record_automorphism(pi);
    }
  }

  bool prunable(int v, const std::vector<int>& tried) {
    if (tried.empty()) return false;
    if (base.empty()) {
      for (int u : tried)
        if (find(u) == find(v)) return true;
      return false;
    }
    for (const auto& pi : autos) {
      bool fixes = true;
      for (int b : base)
        if (pi[static_cast<std::size_t>(b)] != b) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      const int image = pi[static_cast<std::size_t>(v)];
      for (int u : tried)
        if (image == u) return true;
    }
    return false;
  }

  // Smallest non-singleton cell, ties broken by earliest position, so the
  // choice commutes with relabeling.
  static std::size_t target_cell(const Partition& p) {
    std::size_t best = p.size();
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (p[c].size() <= 1) continue;
      if (best == p.size() || p[c].size() < p[best].size()) best = c;
    }
    return best;
  }

  void search(Partition p) {
    refine(g, p);
    const std::size_t t = target_cell(p);
    if (t == p.size()) {
      leaf(p);
      return;
    }
    std::vector<int> cand = p[t];
    std::sort(cand.begin(), cand.end());
    std::vector<int> tried;
    for (int v : cand) {
      if (prunable(v, tried)) continue;
      Partition q;
      q.reserve(p.size() + 1);
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (c != t) {
          q.push_back(p[c]);
          continue;
        }
        q.push_back({v});
        std::vector<int> rest;
        rest.reserve(p[c].size() - 1);
        for (int u : p[c])
          if (u != v) rest.push_back(u);
        q.push_back(std::move(rest));
      }
      base.push_back(v);
      search(std::move(q));
      base.pop_back();
      tried.push_back(v);
    }
  }
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  const int n = g.vertex_count();
  CanonicalLabeling out;
  out.form.n = n;
  if (n == 0) {
    out.to_canonical = Permutation::identity(0);
    return out;
  }
  CanonSearch search(g);
  Partition p0(1);
  p0[0].resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) p0[0][static_cast<std::size_t>(v)] = v;
  search.search(std::move(p0));

  out.form.bits = search.best_bits;
  std::vector<int> to_canon(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos)
    to_canon[static_cast<std::size_t>(search.best_order[static_cast<std::size_t>(pos)])] = pos;
  out.to_canonical.map = std::move(to_canon);
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph form_to_graph(const CanonicalForm& form) {
  const int n = form.n;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  std::size_t t = 0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q, ++t)
      if (form.bits[t >> 3] & (0x80 >> (t & 7))) {
        rows[static_cast<std::size_t>(p)] |= std::uint64_t{1} << q;
        rows[static_cast<std::size_t>(q)] |= std::uint64_t{1} << p;
      }
  return Graph::from_rows(std::move(rows));
}

Graph canonical_graph(const Graph& g) { return form_to_graph(canonical_form(g)); }

std::string canonical_graph6(const Graph& g) { return write_graph6(canonical_graph(g)); }

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
    return std::nullopt;
  const CanonicalLabeling cg = canonical_labeling(g);
  const CanonicalLabeling ch = canonical_labeling(h);
  if (cg.form != ch.form) return std::nullopt;

  const Permutation from_canon_h = ch.to_canonical.inverse();
  Permutation pi;
  pi.map.resize(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    pi.map[static_cast<std::size_t>(v)] = from_canon_h(cg.to_canonical(v));

  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.has_edge(u, v) != h.has_edge(pi(u), pi(v)))
        throw std::logic_error("find_isomorphism: witness failed validation");
  return pi;
}

std::size_t hash_value(const CanonicalForm& form) {
  std::size_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint8_t byte) {
    h ^= byte;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint8_t>(form.n));
  for (std::uint8_t b : form.bits) mix(b);
  return h;
}

}  // namespace ergraph
