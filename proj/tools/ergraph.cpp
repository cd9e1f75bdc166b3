// Command-line interface: classification, products, shadows, enumeration,
// theorem scans, and the order-99 factorization reports. Standard output is
// byte-identical across identical invocations; timings go to standard error.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ergraph/dot.hpp"
#include "ergraph/enumerate.hpp"
#include "ergraph/graph.hpp"
#include "ergraph/graph6.hpp"
#include "ergraph/iso.hpp"
#include "ergraph/products.hpp"
#include "ergraph/regularity.hpp"
#include "ergraph/report_json.hpp"
#include "ergraph/theorems.hpp"

namespace {

using ergraph::Graph;
using ergraph::ordered_json;

Graph read_graph_arg(const std::string& arg, std::string& echoed) {
  std::string line = arg;
  if (arg == "-") {
    if (!std::getline(std::cin, line))
      throw std::invalid_argument("expected a graph6 line on standard input");
  }
  echoed = line;
  return ergraph::parse_graph6(line);
}

void print_document(const ordered_json& doc) { std::cout << ergraph::dump_report(doc); }

void print_timing(double seconds) {
  std::cerr << "{\"elapsed_seconds\": " << seconds << "}\n";
}

ergraph::ForbiddenFamily parse_family(const std::string& text) {
  using Family = ergraph::ForbiddenFamily;
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto parse_int = [&](const std::string& s) {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad family parameter: " + s);
    return v;
  };
  if (head == "p3" && tail.empty()) return {Family::Kind::p3, 0, 0};
  if (head == "p4" && tail.empty()) return {Family::Kind::p4, 0, 0};
  if (head == "star" && !tail.empty()) return {Family::Kind::star, parse_int(tail), 0};
  if (head == "wheel" && !tail.empty()) return {Family::Kind::wheel, parse_int(tail), 0};
  if (head == "kmn" && !tail.empty()) {
    const auto comma = tail.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("kmn family needs two sides: kmn:M1,M2");
    return {Family::Kind::complete_bipartite, parse_int(tail.substr(0, comma)),
            parse_int(tail.substr(comma + 1))};
  }
  if (head == "p3lk1" && !tail.empty())
    return {Family::Kind::p3_plus_isolated, parse_int(tail), 0};
  throw std::invalid_argument(
      "unknown family '" + text + "' (expected p3, p4, star:L, wheel:M, kmn:M1,M2, p3lk1:L)");
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-regular graph toolkit: classification, shared neighborhood structures,\n"
               "products and shadows, exhaustive enumeration, and theorem scans"};
  app.require_subcommand(1);
  int rc = 0;

  // --- analyze ---
  auto* analyze = app.add_subcommand("analyze", "Classify a graph and report its SNS classes");
  std::string analyze_g6;
  analyze->add_option("graph", analyze_g6, "graph6 string, or - to read one line from stdin")
      ->required();
  analyze->callback([&] {
    Timer timer;
    std::string echoed;
    const Graph g = read_graph_arg(analyze_g6, echoed);
    print_document(ergraph::report_document("analyze", {echoed}, ergraph::analysis_json(g)));
    print_timing(timer.seconds());
  });

  // --- product ---
  auto* product = app.add_subcommand("product", "Cartesian or tensor product of two graphs");
  std::string product_op;
  std::vector<std::string> product_args;
  product->add_option("--op", product_op, "cartesian or tensor")
      ->required()
      ->check(CLI::IsMember({"cartesian", "tensor"}));
  product->add_option("graphs", product_args, "two graph6 strings")->expected(2);
  product->callback([&] {
    Timer timer;
    std::string e1, e2;
    const Graph g1 = read_graph_arg(product_args.at(0), e1);
    const Graph g2 = read_graph_arg(product_args.at(1), e2);
    const auto [prod, map] = product_op == "cartesian" ? ergraph::cartesian_product(g1, g2)
                                                       : ergraph::tensor_product(g1, g2);
    const auto er1 = ergraph::classify_er(g1);
    const auto er2 = ergraph::classify_er(g2);
    const auto got = ergraph::classify_er(prod);
    ordered_json result = {{"type", "product"},
                           {"op", product_op},
                           {"graph", ergraph::graph_json(prod)},
                           {"factor_er", ordered_json::array({ergraph::er_json(er1),
                                                              ergraph::er_json(er2)})},
                           {"er", ergraph::er_json(got)}};
    // Parameter assertion where the product laws predict the outcome.
    std::optional<ergraph::ERParams> expected;
    if (er1 && er2 && product_op == "tensor")
      expected = ergraph::ERParams{er1->n * er2->n, er1->d * er2->d, er1->lambda * er2->lambda};
    if (er1 && er2 && product_op == "cartesian" && er1->lambda == er2->lambda)
      expected = ergraph::ERParams{er1->n * er2->n, er1->d + er2->d, er1->lambda};
    result["expected_er"] = ergraph::er_json(expected);
    result["matches_expected"] = expected ? ordered_json(got && *got == *expected)
                                          : ordered_json(nullptr);
    print_document(ergraph::report_document("product", {e1, e2}, std::move(result)));
    print_timing(timer.seconds());
  });

  // --- shadow ---
  auto* shadow = app.add_subcommand("shadow", "m-fold shadow of a graph");
  int shadow_m = 0;
  std::string shadow_g6;
  shadow->add_option("-m,--copies", shadow_m, "number of copies (m >= 1)")->required();
  shadow->add_option("graph", shadow_g6, "graph6 string, or -")->required();
  shadow->callback([&] {
    Timer timer;
    std::string echoed;
    const Graph g = read_graph_arg(shadow_g6, echoed);
    const auto [sh, map] = ergraph::shadow_graph(shadow_m, g);
    ordered_json result = {{"type", "shadow"},
                           {"m", shadow_m},
                           {"graph", ergraph::graph_json(sh)},
                           {"er", ergraph::er_json(ergraph::classify_er(sh))}};
    print_document(ergraph::report_document("shadow", {echoed}, std::move(result)));
    print_timing(timer.seconds());
  });

  // --- enumerate ---
  auto* enumerate = app.add_subcommand(
      "enumerate", "Stream all ER(n, d, lambda) graphs, one graph6 line each; stats on stderr");
  ergraph::EnumSpec enum_spec;
  std::uint64_t enum_limit = 0;
  double enum_budget = 0;
  enumerate->add_option("-n,--vertices", enum_spec.n, "number of vertices")->required();
  enumerate->add_option("-d,--degree", enum_spec.d, "regular degree")->required();
  enumerate->add_option("-l,--lambda", enum_spec.lambda, "common neighbors per edge")->required();
  enumerate->add_option("--limit", enum_limit, "stop after this many graphs");
  enumerate->add_option("--budget", enum_budget, "wall-clock budget in seconds");
  enumerate->add_flag("--allow-large", enum_spec.allow_large, "permit n > 12 (up to 62)");
  enumerate->callback([&] {
    if (enumerate->count("--limit")) enum_spec.max_results = enum_limit;
    if (enumerate->count("--budget")) enum_spec.time_budget_seconds = enum_budget;
    ergraph::SearchStats stats;
    ergraph::enumerate_er(
        enum_spec, [](const Graph& g) { std::cout << ergraph::write_graph6(g) << "\n"; }, stats);
    ordered_json err = ergraph::stats_json(stats);
    err["elapsed_seconds"] = stats.elapsed_seconds;
    std::cerr << err.dump(2) << "\n";
  });

  // --- scan-forbidden ---
  auto* scan = app.add_subcommand(
      "scan-forbidden", "Scan every small edge-regular graph for a forbidden USNS shape");
  std::string scan_family;
  int scan_max_n = 0;
  int scan_threads = 0;
  double scan_budget = 0;
  scan->add_option("--family", scan_family,
                   "target family: p3, p4, star:L, wheel:M, kmn:M1,M2, p3lk1:L")
      ->required();
  scan->add_option("--max-n", scan_max_n, "largest order to scan")->required();
  scan->add_option("-t,--threads", scan_threads, "worker threads (default ERGRAPH_THREADS or 1)");
  scan->add_option("--budget", scan_budget, "wall-clock budget in seconds");
  scan->callback([&] {
    Timer timer;
    ergraph::ScanOptions options;
    options.threads = scan_threads;
    if (scan->count("--budget")) options.time_budget_seconds = scan_budget;
    const ergraph::TheoremReport report =
        ergraph::scan_forbidden_usns(parse_family(scan_family), scan_max_n, options);
    print_document(
        ergraph::report_document("scan-forbidden", {}, ergraph::theorem_json(report)));
    print_timing(timer.seconds());
    if (report.verdict == ergraph::Verdict::counterexample) rc = 1;
  });

  // --- verify ---
  auto* verify = app.add_subcommand("verify", "Verify a product, shadow, or structure theorem");
  std::string verify_theorem;
  std::vector<std::string> verify_args;
  int verify_m = 2, verify_q = 2, verify_threads = 0;
  int verify_lambda_lo = 7, verify_lambda_hi = 10, verify_lambda = 5, verify_max_n = 0;
  double verify_budget = 0;
  verify->add_option("--theorem", verify_theorem, "cartesian-usns, tensor-usns, shadow, p3h, p5")
      ->required()
      ->check(CLI::IsMember({"cartesian-usns", "tensor-usns", "shadow", "p3h", "p5"}));
  verify->add_option("graphs", verify_args, "graph6 arguments (count depends on the theorem)");
  verify->add_option("-m,--copies", verify_m, "shadow: inner copy count (default 2)");
  verify->add_option("-q,--outer-copies", verify_q, "shadow: outer copy count (default 2)");
  verify->add_option("--lambda-lo", verify_lambda_lo, "p3h scan: smallest lambda (default 7)");
  verify->add_option("--lambda-hi", verify_lambda_hi, "p3h scan: largest lambda (default 10)");
  verify->add_option("--lambda", verify_lambda, "p5 scan: lambda (default 5)");
  verify->add_option("--max-n", verify_max_n, "p3h/p5: scan all orders up to this bound");
  verify->add_option("-t,--threads", verify_threads, "worker threads for scans");
  verify->add_option("--budget", verify_budget, "wall-clock budget in seconds for scans");
  verify->callback([&] {
    Timer timer;
    ergraph::ScanOptions options;
    options.threads = verify_threads;
    if (verify->count("--budget")) options.time_budget_seconds = verify_budget;
    ergraph::TheoremReport report;
    std::vector<std::string> inputs;
    auto need_graphs = [&](std::size_t count) {
      if (verify_args.size() != count)
        throw std::invalid_argument("--theorem " + verify_theorem + " needs " +
                                    std::to_string(count) + " graph argument(s)");
    };
    if (verify_theorem == "cartesian-usns" || verify_theorem == "tensor-usns") {
      need_graphs(2);
      std::string e1, e2;
      const Graph g1 = read_graph_arg(verify_args[0], e1);
      const Graph g2 = read_graph_arg(verify_args[1], e2);
      inputs = {e1, e2};
      report = verify_theorem == "cartesian-usns" ? ergraph::verify_cartesian_usns(g1, g2)
                                                  : ergraph::verify_tensor_usns(g1, g2);
    } else if (verify_theorem == "shadow") {
      need_graphs(1);
      std::string echoed;
      const Graph g = read_graph_arg(verify_args[0], echoed);
      inputs = {echoed};
      report = ergraph::verify_shadow_theorems(verify_q, verify_m, g);
    } else if (verify_theorem == "p3h") {
      if (verify_args.empty()) {
        if (verify_max_n == 0)
          throw std::invalid_argument("p3h needs a graph argument or --max-n for a scan");
        report = ergraph::scan_p3h(verify_lambda_lo, verify_lambda_hi, verify_max_n, options);
      } else {
        need_graphs(1);
        std::string echoed;
        const Graph g = read_graph_arg(verify_args[0], echoed);
        inputs = {echoed};
        report = ergraph::check_p3h_property(g);
      }
    } else {  // p5
      if (verify_args.empty()) {
        if (verify_max_n == 0)
          throw std::invalid_argument("p5 needs a graph argument or --max-n for a scan");
        report = ergraph::scan_path_usns_endpoints(verify_lambda, verify_max_n, options);
      } else {
        need_graphs(1);
        std::string echoed;
        const Graph g = read_graph_arg(verify_args[0], echoed);
        inputs = {echoed};
        report = ergraph::check_path_usns_endpoints(g);
      }
    }
    print_document(ergraph::report_document("verify", inputs, ergraph::theorem_json(report)));
    print_timing(timer.seconds());
    if (report.verdict == ergraph::Verdict::counterexample) rc = 1;
  });

  // --- conway ---
  auto* conway = app.add_subcommand(
      "conway", "Factor-elimination report for a hypothetical edge-regular (99, 14, 1) graph");
  std::string conway_product;
  std::string conway_facts;
  conway->add_option("--product", conway_product, "cartesian or tensor")
      ->required()
      ->check(CLI::IsMember({"cartesian", "tensor"}));
  conway->add_option("--facts", conway_facts, "JSON file of cited facts (default: built in)");
  conway->callback([&] {
    Timer timer;
    const ergraph::CitedFactTable facts = conway_facts.empty()
                                              ? ergraph::CitedFactTable::built_in()
                                              : ergraph::CitedFactTable::from_json_file(conway_facts);
    const ergraph::FactorizationReport report = conway_product == "cartesian"
                                                    ? ergraph::conway_cartesian_report(facts)
                                                    : ergraph::conway_tensor_report(facts);
    print_document(
        ergraph::report_document("conway", {}, ergraph::factorization_json(report)));
    print_timing(timer.seconds());
    if (!report.surviving().empty()) rc = 1;
  });

  // --- iso ---
  auto* iso = app.add_subcommand("iso", "Test two graphs for isomorphism; witness on stdout");
  std::vector<std::string> iso_args;
  iso->add_option("graphs", iso_args, "two graph6 strings")->expected(2);
  iso->callback([&] {
    Timer timer;
    std::string e1, e2;
    const Graph g1 = read_graph_arg(iso_args.at(0), e1);
    const Graph g2 = read_graph_arg(iso_args.at(1), e2);
    const std::optional<ergraph::Permutation> witness = ergraph::find_isomorphism(g1, g2);
    ordered_json result = {{"type", "iso"}, {"isomorphic", witness.has_value()}};
    if (witness) {
      ordered_json map = ordered_json::array();
      for (int v : witness->map) map.push_back(v);
      result["witness"] = std::move(map);
    } else {
      result["witness"] = nullptr;
    }
    print_document(ergraph::report_document("iso", {e1, e2}, std::move(result)));
    print_timing(timer.seconds());
    if (!witness) rc = 1;
  });

  // --- convert ---
  auto* convert = app.add_subcommand("convert", "Convert a graph6 line to DOT or back to graph6");
  std::string convert_to;
  std::string convert_g6;
  convert->add_option("--to", convert_to, "dot or g6")
      ->required()
      ->check(CLI::IsMember({"dot", "g6"}));
  convert->add_option("graph", convert_g6, "graph6 string, or -")->required();
  convert->callback([&] {
    std::string echoed;
    const Graph g = read_graph_arg(convert_g6, echoed);
    if (convert_to == "dot")
      std::cout << ergraph::export_dot(g);
    else
      std::cout << ergraph::write_graph6(g) << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
