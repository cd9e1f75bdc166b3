#include "ergraph/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "ergraph/iso.hpp"

namespace ergraph {

Feasibility er_parameter_feasible(int n, int d, int lambda) {
  if (n < 0 || d < 0 || lambda < 0) return {false, "parameters must be non-negative"};
  if (d >= n) return {false, "d >= n"};
  if (lambda >= d) return {false, "lambda >= d"};
  if (n % 2 == 1 && d % 2 == 1) return {false, "n*d odd"};
  if ((static_cast<long long>(n) * d * lambda) % 6 != 0)
    return {false, "n*d*lambda not divisible by 6"};
  return {true, ""};
}

namespace {

constexpr int kDefaultCap = 12;

// Is seq (backward adjacency masks of vertices 1..cnt-1) lexicographically
// maximal over all orderings of the cnt placed vertices? Ties between
// interchangeable vertices (equal rows away from each other) are explored
// once.
struct CanonicityTest {
  const std::uint64_t* rows;
  const std::uint64_t* seq;
  int cnt;

  std::uint64_t chosen_mask = 0;
  std::uint64_t vals[kMaxVertices];  // backward mask of each vertex w.r.t. chosen prefix

  bool swappable(int a, int b) const {
    const std::uint64_t pair = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
    return ((rows[a] ^ rows[b]) & ~pair) == 0;
  }

  // Returns true if some completion beats seq (i.e. seq is not canonical).
  bool beats(int p) {
    if (p == cnt) return false;
    std::uint64_t cands = ~chosen_mask & (cnt == 64 ? ~std::uint64_t{0}
                                                    : (std::uint64_t{1} << cnt) - 1);
    if (p > 0) {
      std::uint64_t eligible = 0;
      for (std::uint64_t b = cands; b; b &= b - 1) {
        const int v = std::countr_zero(b);
        if (vals[v] > seq[p]) return true;
        if (vals[v] == seq[p]) eligible |= std::uint64_t{1} << v;
      }
      cands = eligible;
    }
    std::uint64_t tried = 0;
    for (std::uint64_t b = cands; b; b &= b - 1) {
      const int v = std::countr_zero(b);
      bool skip = false;
      for (std::uint64_t t = tried; t && !skip; t &= t - 1)
        if (swappable(std::countr_zero(t), v)) skip = true;
      if (skip) continue;
      tried |= std::uint64_t{1} << v;

      std::uint64_t saved[kMaxVertices];
      std::copy(vals, vals + cnt, saved);
      chosen_mask |= std::uint64_t{1} << v;
      for (std::uint64_t rest = ~chosen_mask & ((std::uint64_t{1} << cnt) - 1); rest;
           rest &= rest - 1) {
        const int u = std::countr_zero(rest);
        vals[u] |= (rows[u] >> v & 1) << p;
      }
      const bool found = beats(p + 1);
      chosen_mask &= ~(std::uint64_t{1} << v);
      std::copy(saved, saved + cnt, vals);
      if (found) return true;
    }
    return false;
  }

  bool is_canonical() {
    std::fill(vals, vals + cnt, 0);
    return !beats(0);
  }
};

struct Generator {
  EnumSpec spec;
  SearchStats stats;
  std::vector<Graph> found;
  std::chrono::steady_clock::time_point start;
  bool stopped = false;

  std::uint64_t rows[kMaxVertices] = {};
  std::uint64_t seq[kMaxVertices] = {};
  int deg[kMaxVertices] = {};

  bool out_of_budget() {
    if (stopped) return true;
    if (spec.time_budget_seconds && (stats.nodes & 1023) == 0) {
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (elapsed > *spec.time_budget_seconds) {
        stopped = true;
        stats.complete = false;
        stats.note = "time budget exceeded; results incomplete";
      }
    }
    return stopped;
  }

  // Bounds after cnt vertices are placed (future = n - cnt still to come).
  bool bounds_ok(int cnt) {
    const int future = spec.n - cnt;
    int deficit = 0;
    for (int j = 0; j < cnt; ++j) {
      if (deg[j] > spec.d) {
        ++stats.pruned_degree_high;
        return false;
      }
      if (spec.d - deg[j] > future) {
        ++stats.pruned_degree_low;
        return false;
      }
      deficit += spec.d - deg[j];
    }
    // Future vertices must be able to supply the deficit and pair up the
    // rest of their degree among themselves.
    const int lo = future * std::max(0, spec.d - (future - 1));
    const int hi = future * std::min(spec.d, cnt);
    if (deficit < lo || deficit > hi || (future * spec.d - deficit) % 2 != 0) {
      ++stats.pruned_capacity;
      return false;
    }
    for (int a = 0; a < cnt; ++a)
      for (std::uint64_t b = rows[a] >> (a + 1) << (a + 1); b; b &= b - 1) {
        const int c = std::countr_zero(b);
        const int co = std::popcount(rows[a] & rows[c]);
        if (co > spec.lambda) {
          ++stats.pruned_lambda_high;
          return false;
        }
        if (spec.lambda - co > future) {
          ++stats.pruned_lambda_low;
          return false;
        }
      }
    return true;
  }

  void emit(int cnt) {
    std::vector<std::uint64_t> r(rows, rows + cnt);
    found.push_back(Graph::from_rows(std::move(r)));
    ++stats.emitted;
    if (spec.max_results && stats.emitted >= *spec.max_results) {
      stopped = true;
      stats.complete = false;
      stats.note = "result limit reached; results incomplete";
    }
  }

  void extend(int cnt) {
    if (out_of_budget()) return;
    if (cnt == spec.n) {
      emit(cnt);
      return;
    }
    const int t = cnt;  // next vertex to place
    std::uint64_t eligible = 0;
    for (int j = 0; j < t; ++j)
      if (deg[j] < spec.d) eligible |= std::uint64_t{1} << j;

    // All subsets of eligible, including the empty mask.
    std::uint64_t m = eligible;
    while (true) {
      const int size = std::popcount(m);
      if (size <= spec.d && spec.d - size <= spec.n - t - 1) {
        rows[t] = m;
        seq[t] = m;
        deg[t] = size;
        for (std::uint64_t b = m; b; b &= b - 1) {
          const int j = std::countr_zero(b);
          rows[j] |= std::uint64_t{1} << t;
          ++deg[j];
        }
        if (bounds_ok(t + 1)) {
          CanonicityTest test{rows, seq, t + 1, 0, {}};
          if (test.is_canonical()) {
            ++stats.nodes;
            extend(t + 1);
          } else {
            ++stats.pruned_noncanonical;
          }
        }
        for (std::uint64_t b = m; b; b &= b - 1) {
          const int j = std::countr_zero(b);
          rows[j] &= ~(std::uint64_t{1} << t);
          --deg[j];
        }
        rows[t] = 0;
        deg[t] = 0;
        if (stopped) return;
      }
      if (m == 0) break;
      m = (m - 1) & eligible;
    }
  }
};

}  // namespace

void enumerate_er(const EnumSpec& spec, const std::function<void(const Graph&)>& sink,
                  SearchStats& stats) {
  if (spec.n > kMaxVertices)
    throw graph_size_error("enumeration order exceeds the ceiling of " +
                           std::to_string(kMaxVertices));
  if (spec.n > kDefaultCap && !spec.allow_large)
    throw std::invalid_argument("enumeration above n = " + std::to_string(kDefaultCap) +
                                " requires the allow_large override");

  Generator gen;
  gen.spec = spec;
  gen.start = std::chrono::steady_clock::now();

  const Feasibility feasible = er_parameter_feasible(spec.n, spec.d, spec.lambda);
  if (!feasible.feasible) {
    gen.stats.note = "infeasible parameters: " + feasible.reason;
  } else {
    gen.extend(1);  // vertex 0 is always placed; its edges arrive with later vertices
  }

  gen.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - gen.start).count();

  // Deterministic emission order: sort by canonical form.
  std::vector<std::pair<CanonicalForm, std::size_t>> keyed;
  keyed.reserve(gen.found.size());
  for (std::size_t i = 0; i < gen.found.size(); ++i)
    keyed.emplace_back(canonical_form(gen.found[i]), i);
  std::sort(keyed.begin(), keyed.end());
  for (const auto& [form, i] : keyed) sink(gen.found[i]);

  stats = gen.stats;
}

EnumerationResult enumerate_er(const EnumSpec& spec) {
  EnumerationResult result;
  enumerate_er(
      spec, [&result](const Graph& g) { result.graphs.push_back(g); }, result.stats);
  return result;
}

}  // namespace ergraph
