#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ergraph/graph6.hpp"
#include "ergraph/iso.hpp"
#include "ergraph/products.hpp"
#include "ergraph/theorems.hpp"

using ergraph::ForbiddenFamily;
using ergraph::Graph;
using ergraph::TheoremReport;
using ergraph::Verdict;

TEST_CASE("edge_context partitions the vertex set") {
  const Graph g = ergraph::petersen_graph().complement();  // ER(10, 6, 3)
  for (auto [u, v] : g.edges()) {
    const ergraph::EdgeContext ctx = ergraph::edge_context(g, u, v);
    CHECK(ctx.w.size() == 3);                // lambda
    CHECK(ctx.a.size() == 6 - 1 - 3);        // d - 1 - lambda
    CHECK(ctx.b.size() == 6 - 1 - 3);
    const std::uint64_t uv =
        (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    // Pairwise disjoint and jointly exhaustive.
    CHECK((ctx.w.bits() & ctx.a.bits()) == 0);
    CHECK((ctx.w.bits() & ctx.b.bits()) == 0);
    CHECK((ctx.a.bits() & ctx.b.bits()) == 0);
    CHECK((ctx.x.bits() & (ctx.w.bits() | ctx.a.bits() | ctx.b.bits() | uv)) == 0);
    CHECK((ctx.w.bits() | ctx.a.bits() | ctx.b.bits() | ctx.x.bits() | uv) ==
          g.vertices().bits());
  }
  CHECK_THROWS_AS(ergraph::edge_context(ergraph::petersen_graph(), 0, 2), std::invalid_argument);
}

TEST_CASE("forbidden families: targets, lambdas, names, validation") {
  using Kind = ForbiddenFamily::Kind;
  CHECK(ergraph::are_isomorphic(ergraph::forbidden_target({Kind::p3, 0, 0}),
                                ergraph::path_graph(3)));
  CHECK(ergraph::forbidden_lambda({Kind::p3, 0, 0}) == 3);
  CHECK(ergraph::forbidden_lambda({Kind::p4, 0, 0}) == 4);
  CHECK(ergraph::forbidden_lambda({Kind::star, 5, 0}) == 5);
  CHECK(ergraph::forbidden_lambda({Kind::wheel, 4, 0}) == 5);  // rim 4 plus hub
  CHECK(ergraph::forbidden_lambda({Kind::complete_bipartite, 1, 2}) == 3);
  CHECK(ergraph::forbidden_lambda({Kind::p3_plus_isolated, 2, 0}) == 5);

  CHECK(ergraph::are_isomorphic(ergraph::forbidden_target({Kind::complete_bipartite, 1, 2}),
                                ergraph::path_graph(3)));  // K_{1,2} is P_3
  CHECK(ergraph::are_isomorphic(
      ergraph::forbidden_target({Kind::p3_plus_isolated, 2, 0}),
      ergraph::disjoint_sum(ergraph::path_graph(3), ergraph::empty_graph(2))));

  CHECK(ergraph::family_name({Kind::p3, 0, 0}) == "p3");
  CHECK(ergraph::family_name({Kind::star, 5, 0}) == "star:5");
  CHECK(ergraph::family_name({Kind::wheel, 4, 0}) == "wheel:4");
  CHECK(ergraph::family_name({Kind::complete_bipartite, 1, 2}) == "kmn:1,2");
  CHECK(ergraph::family_name({Kind::p3_plus_isolated, 2, 0}) == "p3lk1:2");

  CHECK_THROWS_AS(ergraph::forbidden_target({Kind::star, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ergraph::forbidden_target({Kind::wheel, 3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ergraph::forbidden_target({Kind::complete_bipartite, 2, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ergraph::forbidden_target({Kind::p3_plus_isolated, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("forbidden scan: small p3 universe is clean") {
  const TheoremReport report = ergraph::scan_forbidden_usns({ForbiddenFamily::Kind::p3, 0, 0}, 6);
  CHECK(report.theorem == "forbidden-usns:p3");
  CHECK(report.verdict == Verdict::confirmed);
  CHECK(report.complete);
  CHECK(report.witnesses.empty());
  REQUIRE(report.cells.size() == 3);  // (5,4), (6,4), (6,5) at lambda 3
  CHECK(report.cells[0].n == 5);
  CHECK(report.cells[0].d == 4);
  CHECK(report.cells[0].classes == 1);  // K_5
  CHECK(report.cells[1].classes == 0);
  CHECK(report.cells[2].classes == 0);
  CHECK(report.graphs_scanned == 1);

  CHECK_THROWS_AS(ergraph::scan_forbidden_usns({ForbiddenFamily::Kind::p3, 0, 0}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(ergraph::scan_forbidden_usns({ForbiddenFamily::Kind::p3, 0, 0}, 63),
                  std::invalid_argument);
}

TEST_CASE("scan_usns_target finds achievable shapes and revalidates them") {
  // K_1 as an USNS is realized by the lambda = 1 edge-regular graphs.
  const TheoremReport report = ergraph::scan_usns_target(ergraph::empty_graph(1), "k1", 9);
  CHECK(report.verdict == Verdict::counterexample);  // target realized
  REQUIRE(report.witnesses.size() == 4);  // K_3, 2K_3, 3K_3, K_3 box K_3
  bool saw_rook = false;
  for (const auto& w : report.witnesses) {
    CHECK(w.detail.find("revalidated") != std::string::npos);
    const Graph g = ergraph::parse_graph6(w.graph6);
    if (ergraph::are_isomorphic(
            g, ergraph::cartesian_product(ergraph::complete_graph(3), ergraph::complete_graph(3))
                   .first))
      saw_rook = true;
  }
  CHECK(saw_rook);
}

TEST_CASE("scan respects an exhausted budget by reporting incompleteness") {
  ergraph::ScanOptions options;
  options.time_budget_seconds = 0.0;
  const TheoremReport report =
      ergraph::scan_forbidden_usns({ForbiddenFamily::Kind::p3, 0, 0}, 10, options);
  CHECK_FALSE(report.complete);
}

TEST_CASE("check_p3h_property") {
  CHECK_THROWS_AS(ergraph::check_p3h_property(ergraph::path_graph(4)), std::invalid_argument);

  // USNS exists but has no P_3 component.
  const TheoremReport k4 = ergraph::check_p3h_property(ergraph::complete_graph(4));
  CHECK(k4.verdict == Verdict::not_applicable);

  // No uniform structure at all.
  const auto [prod, map] = ergraph::cartesian_product(ergraph::complete_graph(4),
                                                      ergraph::k6_minus_perfect_matching());
  const TheoremReport mixed = ergraph::check_p3h_property(prod);
  CHECK(mixed.verdict == Verdict::not_applicable);
}

TEST_CASE("check_path_usns_endpoints") {
  CHECK_THROWS_AS(ergraph::check_path_usns_endpoints(ergraph::star_graph(4)),
                  std::invalid_argument);
  // lambda below 5
  CHECK(ergraph::check_path_usns_endpoints(ergraph::complete_graph(4)).verdict ==
        Verdict::not_applicable);
  // lambda = 5 but the structure is K_5, not P_5
  CHECK(ergraph::check_path_usns_endpoints(ergraph::complete_graph(7)).verdict ==
        Verdict::not_applicable);
}

TEST_CASE("structure scans over small universes") {
  const TheoremReport p3h = ergraph::scan_p3h(7, 10, 10);
  CHECK(p3h.verdict == Verdict::vacuous);
  CHECK(p3h.graphs_scanned == 2);  // K_9 and K_10 are the only qualifiers
  CHECK(p3h.complete);

  const TheoremReport p5 = ergraph::scan_path_usns_endpoints(5, 10);
  CHECK(p5.verdict == Verdict::vacuous);
  CHECK(p5.graphs_scanned == 1);  // K_7

  CHECK_THROWS_AS(ergraph::scan_p3h(3, 10, 10), std::invalid_argument);
  CHECK_THROWS_AS(ergraph::scan_p3h(8, 7, 10), std::invalid_argument);
  CHECK_THROWS_AS(ergraph::scan_path_usns_endpoints(4, 10), std::invalid_argument);
}

TEST_CASE("verify_cartesian_usns") {
  const Graph k3 = ergraph::complete_graph(3);
  const Graph k4 = ergraph::complete_graph(4);
  const Graph k5 = ergraph::complete_graph(5);
  const Graph k6pm = ergraph::k6_minus_perfect_matching();
  const Graph pc = ergraph::petersen_graph().complement();

  SUBCASE("matching structures give an USNS") {
    const TheoremReport r = ergraph::verify_cartesian_usns(k3, k3);
    CHECK(r.verdict == Verdict::confirmed);
    CHECK(r.witnesses.empty());
  }
  SUBCASE("differing structures with equal lambda give no USNS") {
    CHECK(ergraph::verify_cartesian_usns(k4, k6pm).verdict == Verdict::confirmed);
    CHECK(ergraph::verify_cartesian_usns(k5, pc).verdict == Verdict::confirmed);
  }
  SUBCASE("preconditions throw") {
    CHECK_THROWS_AS(ergraph::verify_cartesian_usns(k3, k4), std::invalid_argument);  // lambdas
    CHECK_THROWS_AS(ergraph::verify_cartesian_usns(ergraph::path_graph(3), k3),
                    std::invalid_argument);  // not edge-regular
    const auto [prod, map] = ergraph::cartesian_product(k4, k6pm);
    // prod is ER(24,7,2) with two SNS classes: no USNS to verify against.
    CHECK_THROWS_AS(ergraph::verify_cartesian_usns(prod, k4), std::invalid_argument);
  }
  SUBCASE("size ceiling") {
    const Graph pet = ergraph::petersen_graph();
    CHECK_THROWS_AS(ergraph::verify_cartesian_usns(pet, ergraph::cycle_graph(7)),
                    ergraph::graph_size_error);
  }
}

TEST_CASE("verify_tensor_usns") {
  const Graph k3 = ergraph::complete_graph(3);
  const Graph k4 = ergraph::complete_graph(4);

  const TheoremReport r = ergraph::verify_tensor_usns(k3, k4);
  CHECK(r.verdict == Verdict::confirmed);
  bool k3_note = false;
  for (const auto& note : r.notes)
    if (note.find("K_3 factor") != std::string::npos) k3_note = true;
  CHECK(k3_note);

  CHECK(ergraph::verify_tensor_usns(k4, k4).verdict == Verdict::confirmed);
  CHECK(ergraph::verify_tensor_usns(ergraph::petersen_graph(), k3).verdict == Verdict::confirmed);
  CHECK_THROWS_AS(ergraph::verify_tensor_usns(ergraph::path_graph(3), k3),
                  std::invalid_argument);
}

TEST_CASE("verify_shadow_theorems") {
  const Graph k3 = ergraph::complete_graph(3);
  SUBCASE("chained and direct shadows agree") {
    const TheoremReport r = ergraph::verify_shadow_theorems(2, 3, k3);
    CHECK(r.verdict == Verdict::confirmed);
    bool chain_note = false;
    for (const auto& note : r.notes)
      if (note.find("isomorphic to shadow(6") != std::string::npos) chain_note = true;
    CHECK(chain_note);
  }
  SUBCASE("q = 1 skips the chain law") {
    const TheoremReport r = ergraph::verify_shadow_theorems(1, 2, k3);
    CHECK(r.verdict == Verdict::confirmed);
    bool skipped = false;
    for (const auto& note : r.notes)
      if (note.find("skipped") != std::string::npos) skipped = true;
    CHECK(skipped);
  }
  SUBCASE("preconditions and ceilings") {
    CHECK_THROWS_AS(ergraph::verify_shadow_theorems(2, 0, k3), std::invalid_argument);
    CHECK_THROWS_AS(ergraph::verify_shadow_theorems(2, 1, ergraph::cycle_graph(62)),
                    ergraph::graph_size_error);
    CHECK_THROWS_AS(ergraph::verify_shadow_theorems(2, 2, ergraph::path_graph(3)),
                    std::invalid_argument);
  }
}

TEST_CASE("cited fact table") {
  const ergraph::CitedFactTable table = ergraph::CitedFactTable::built_in();
  CHECK(table.facts().size() == 4);
  CHECK(table.require("er-33-12-1-empty").citation.find("Corollary 10") != std::string::npos);
  CHECK_THROWS_AS(table.require("no-such-fact"), std::invalid_argument);
  CHECK_THROWS_AS(ergraph::CitedFactTable::from_json_file("/nonexistent/facts.json"),
                  std::invalid_argument);
}

TEST_CASE("shipped facts file matches the built-in table") {
  const ergraph::CitedFactTable shipped =
      ergraph::CitedFactTable::from_json_file(std::string(PROJECT_DATA_DIR) + "/cited_facts.json");
  const ergraph::CitedFactTable built_in = ergraph::CitedFactTable::built_in();
  REQUIRE(shipped.facts().size() == built_in.facts().size());
  for (std::size_t i = 0; i < shipped.facts().size(); ++i) {
    CHECK(shipped.facts()[i].id == built_in.facts()[i].id);
    CHECK(shipped.facts()[i].statement == built_in.facts()[i].statement);
    CHECK(shipped.facts()[i].citation == built_in.facts()[i].citation);
  }
}

TEST_CASE("conway cartesian elimination") {
  const ergraph::FactorizationReport report = ergraph::conway_cartesian_report();
  CHECK(report.product == "cartesian");
  CHECK(report.target == ergraph::ERParams{99, 14, 1});
  CHECK(report.clique_k == 3);
  CHECK(report.surviving().empty());
  REQUIRE(report.candidates.size() == 5);

  using R = ergraph::EliminationReason;
  const std::vector<R> expected{R::cited_fact, R::n_le_d, R::complete_lambda_mismatch,
                                R::div3_nd, R::complete_lambda_mismatch};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    REQUIRE(report.candidates[i].reason.has_value());
    CHECK(*report.candidates[i].reason == expected[i]);
  }
  // The (3, 33) split leans on the cited fact; everything else is confirmed
  // by direct enumeration of the small factor's cell.
  CHECK_FALSE(report.candidates[0].verified_by_enumeration);
  CHECK_FALSE(report.candidates[0].citation.empty());
  for (std::size_t i = 1; i < report.candidates.size(); ++i)
    CHECK(report.candidates[i].verified_by_enumeration);
  CHECK_FALSE(report.candidates[3].citation.empty());  // divisibility is cited too
  CHECK(report.candidates[0].n1 == 3);
  CHECK(report.candidates[0].d1 == 2);
  for (const auto& c : report.candidates) {
    CHECK(c.lambda1 == 1);
    CHECK(c.lambda2 == 1);
    CHECK(c.d1 + c.d2 == 14);
    CHECK(c.d1 % 2 == 0);  // cited parity constraint shapes the split list
    CHECK(c.n1 * c.n2 == 99);
  }
}

TEST_CASE("conway tensor elimination") {
  const ergraph::FactorizationReport report = ergraph::conway_tensor_report();
  CHECK(report.product == "tensor");
  CHECK(report.surviving().empty());
  REQUIRE(report.candidates.size() == 2);
  REQUIRE(report.candidates[0].reason.has_value());
  REQUIRE(report.candidates[1].reason.has_value());
  CHECK(*report.candidates[0].reason == ergraph::EliminationReason::d_le_lambda);
  CHECK(*report.candidates[1].reason == ergraph::EliminationReason::divk1_d);
  CHECK_FALSE(report.candidates[1].citation.empty());
  // The 2 * 7 split's narrative covers the concrete first-factor orders.
  CHECK(report.candidates[1].detail.find("n1 = 9") != std::string::npos);
  CHECK(report.candidates[1].detail.find("n1 = 33") != std::string::npos);
}

TEST_CASE("conway reports fail loudly without the needed citations") {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "ergraph_test_unrelated_facts.json";
  {
    std::ofstream out(path);
    out << R"({"facts": [{"id": "unrelated", "statement": "s", "citation": "c"}]})";
  }
  const ergraph::CitedFactTable table = ergraph::CitedFactTable::from_json_file(path.string());
  CHECK_THROWS_AS(ergraph::conway_cartesian_report(table), std::invalid_argument);
  CHECK_THROWS_AS(ergraph::conway_tensor_report(table), std::invalid_argument);
  std::filesystem::remove(path);
}

TEST_CASE("reason and verdict names") {
  CHECK(ergraph::verdict_name(Verdict::confirmed) == "confirmed");
  CHECK(ergraph::verdict_name(Verdict::counterexample) == "counterexample");
  CHECK(ergraph::verdict_name(Verdict::vacuous) == "vacuous");
  CHECK(ergraph::verdict_name(Verdict::not_applicable) == "not_applicable");
  CHECK(ergraph::reason_name(ergraph::EliminationReason::parity) == "parity");
  CHECK(ergraph::reason_name(ergraph::EliminationReason::divk1_d) == "divk1_d");
  CHECK(ergraph::reason_name(ergraph::EliminationReason::cited_fact) == "cited_fact");
}
