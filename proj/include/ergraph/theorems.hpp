// Structural checks over edge-regular graphs and their shared neighborhood
// structures: scans proving small USNS shapes impossible, per-graph checks of
// neighborhood decompositions, verification of product and shadow laws, and
// the factor-elimination reports for a hypothetical order-99 graph.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ergraph/enumerate.hpp"
#include "ergraph/graph.hpp"
#include "ergraph/regularity.hpp"

namespace ergraph {

// The five-way split of V around an edge u ~ v: the shared neighborhood W,
// the private neighborhoods A (u's side) and B (v's side), the untouched
// rest X, and {u, v} itself.
struct EdgeContext {
  int u = -1, v = -1;
  VertexSet w;  // N(u) & N(v)
  VertexSet a;  // N(u) minus N(v), minus v
  VertexSet b;  // N(v) minus N(u), minus u
  VertexSet x;  // everything else
};

// Requires u ~ v.
EdgeContext edge_context(const Graph& g, int u, int v);

enum class Verdict { confirmed, counterexample, vacuous, not_applicable };
std::string verdict_name(Verdict v);

struct WitnessGraph {
  std::string graph6;
  int u = -1, v = -1;  // offending edge where applicable
  std::string detail;
};

struct CellCount {
  int n = 0, d = 0, lambda = 0;
  std::uint64_t classes = 0;
};

struct TheoremReport {
  std::string theorem;
  std::string universe;
  Verdict verdict = Verdict::vacuous;
  std::vector<CellCount> cells;  // scanned parameter cells with class counts
  std::uint64_t graphs_scanned = 0;
  std::uint64_t edges_checked = 0;
  std::vector<WitnessGraph> witnesses;
  std::vector<std::string> notes;
  bool complete = true;
};

struct ScanOptions {
  int threads = 0;  // 0: use ERGRAPH_THREADS, defaulting to 1
  std::optional<double> time_budget_seconds;
};

// Forbidden USNS families. The family fixes the target graph and the lambda
// of the universe to scan (an USNS on lambda vertices).
struct ForbiddenFamily {
  enum class Kind { p3, p4, star, wheel, complete_bipartite, p3_plus_isolated };
  Kind kind;
  int p1 = 0;  // star: l >= 3; wheel: m >= 4; bipartite: m1; p3_plus_isolated: l >= 1
  int p2 = 0;  // bipartite: m2 (m1 != m2)
};

Graph forbidden_target(const ForbiddenFamily& family);
int forbidden_lambda(const ForbiddenFamily& family);
std::string family_name(const ForbiddenFamily& family);

// Enumerates every ER(n, d, lambda) class with n <= n_max, where lambda is
// the target's order, and reports each graph whose USNS is isomorphic to
// the target as a witness (verdict counterexample when any is found, the
// convention of the forbidden-family scans). Witnesses are re-validated
// from raw adjacency before they are reported.
TheoremReport scan_usns_target(const Graph& target, const std::string& target_name, int n_max,
                               const ScanOptions& options = {});

// scan_usns_target for one of the provably impossible families.
TheoremReport scan_forbidden_usns(const ForbiddenFamily& family, int n_max,
                                  const ScanOptions& options = {});

// For an edge-regular G whose USNS is P_3 + H: every edge u ~ v and every
// P_3 component {w1, w2, w3} of its shared neighborhood must place u, v in a
// component of the (w1, w2) shared neighborhood that is not itself a P_3 and
// that carries a path on four vertices. Two readings of "some subgraph H"
// are evaluated and reported: the component containing u, v directly, and
// the remainder after removing some other P_3 component.
TheoremReport check_p3h_property(const Graph& g);

// For an edge-regular G with USNS isomorphic to the path P_lambda
// (lambda >= 5): for every edge u ~ v and each path endpoint w1 with path
// neighbor w2, the common neighborhood N(w1) & N(w2) meets A(u, v) and
// B(u, v) exactly once each.
TheoremReport check_path_usns_endpoints(const Graph& g);

// Scan wrappers over enumerate_er universes for the two checks above.
TheoremReport scan_p3h(int lambda_lo, int lambda_hi, int n_max, const ScanOptions& options = {});
TheoremReport scan_path_usns_endpoints(int lambda, int n_max, const ScanOptions& options = {});

// Cartesian product law: for edge-regular factors with equal lambda and
// USNS X, Y, the product is ER(n1*n2, d1+d2, lambda) and has an USNS exactly
// when X and Y are isomorphic (in which case the USNS is X).
TheoremReport verify_cartesian_usns(const Graph& g1, const Graph& g2);

// Tensor product law: for edge-regular factors with USNS H1, H2, the product
// is ER(n1*n2, d1*d2, lambda1*lambda2) with USNS the tensor of H1 and H2.
TheoremReport verify_tensor_usns(const Graph& g1, const Graph& g2);

// Shadow laws: the m-fold shadow of an edge-regular G with USNS H is
// ER(mn, md, m*lambda) with USNS the m-fold shadow of H, and shadows
// compose: shadow(q, shadow(m, G)) is isomorphic to shadow(q*m, G).
TheoremReport verify_shadow_theorems(int q, int m, const Graph& g);

// --- Cited facts and the order-99 factorization reports ---

struct CitedFact {
  std::string id;
  std::string statement;
  std::string citation;
};

class CitedFactTable {
 public:
  static CitedFactTable built_in();
  static CitedFactTable from_json_file(const std::string& path);

  const CitedFact& require(const std::string& id) const;
  const std::vector<CitedFact>& facts() const { return facts_; }

 private:
  std::vector<CitedFact> facts_;
};

enum class EliminationReason {
  parity,                     // handshake: n*d odd
  n_le_d,                     // degree too large for the order
  complete_lambda_mismatch,   // d = n-1 forces K_n, whose lambda is n-2
  div3_nd,                    // 3 must divide n*d (cited necessary condition)
  divk1_d,                    // (k-1) must divide d (cited necessary condition)
  d_le_lambda,                // lambda >= d is impossible
  cited_fact,                 // a cited nonexistence result
};
std::string reason_name(EliminationReason r);

struct FactorCandidate {
  // 0 / -1 mean "not determined by this split".
  int n1 = 0, n2 = 0;
  int d1 = -1, d2 = -1;
  int lambda1 = -1, lambda2 = -1;
  std::optional<EliminationReason> reason;  // empty = surviving
  std::string detail;
  std::string citation;  // set when a cited fact is load-bearing
  bool verified_by_enumeration = false;
};

struct FactorizationReport {
  std::string product;  // "cartesian" or "tensor"
  ERParams target{99, 14, 1};
  int clique_k = 3;
  std::vector<FactorCandidate> candidates;
  std::vector<std::string> notes;

  std::vector<FactorCandidate> surviving() const;
};

// Could a strongly regular (99, 14, 1, 2) graph, equivalently an edge-regular
// (99, 14, 1) graph, be a Cartesian or tensor product of smaller edge-regular
// graphs? Each factorization candidate is eliminated; enumerations at n <= 12
// are computed outright, larger nonexistence facts come from the cited table.
FactorizationReport conway_cartesian_report(const CitedFactTable& facts = CitedFactTable::built_in());
FactorizationReport conway_tensor_report(const CitedFactTable& facts = CitedFactTable::built_in());

}  // namespace ergraph
