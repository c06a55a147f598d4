#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include "doctest.h"
#include "linrez/checks.hpp"
#include "linrez/errors.hpp"
#include "linrez/io.hpp"
#include "linrez/parallel.hpp"
#include "linrez/report.hpp"

using namespace linrez;

TEST_CASE("graph text round trip is canonical") {
  const Graph g = parse_graph_text("# comment\nn 6\n5 6\n2 1\n\n3 3\n1 2  # dup\n4 2\n");
  CHECK(g.n() == 6);
  CHECK(g.edges().size() == 3);
  CHECK(g.loops() == std::vector<int>{3});
  const std::string text = format_graph(g);
  CHECK(parse_graph_text(text) == g);
  CHECK(format_graph(parse_graph_text(text)) == text);

  for (int n = 1; n <= 5; ++n)
    for (const auto& h : nonisomorphic_graphs(n)) CHECK(parse_graph_text(format_graph(h)) == h);
}

TEST_CASE("graph json input") {
  const Graph g = parse_graph_text(R"({"n": 4, "edges": [[1, 2], [3, 4]], "loops": [2]})");
  CHECK(g.n() == 4);
  CHECK(g.has_edge(3, 4));
  CHECK(g.has_loop(2));
  CHECK(parse_graph_text(format_graph(g)) == g);
}

TEST_CASE("graph parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_graph_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("n 3\n1 2\n2 x\n") == 3);
  CHECK(line_of("# c\nn 3\n1 4\n") == 3);
  CHECK(line_of("1 2\n") == 1);
  CHECK(line_of("n 3\n1 2 3\n") == 2);
  CHECK(line_of("") > -1);
  CHECK_THROWS_AS(parse_graph_file("/nonexistent/graph.g"), ParseError);
}

TEST_CASE("ideal file for (x1x2, x3x4)") {
  const auto ideal = parse_ideal_text("n=4\n1:1 2:1\nx3:1 x4:1\n");
  CHECK(ideal.size() == 2);
  CHECK(ideal.generator_degree() == 2);
  CHECK(ideal.is_squarefree());
  CHECK(parse_ideal_text("n=4\nx1*x2\nx3*x4\n") == ideal);
  CHECK(parse_ideal_text(format_ideal(ideal)) == ideal);
}

TEST_CASE("ideal parsing minimalizes and round trips") {
  const auto ideal = parse_ideal_text("n=3\nx1^2*x2\nx1^2\nx3^4\n# trailing\n");
  CHECK(ideal.size() == 2);
  CHECK_FALSE(ideal.is_equigenerated());
  CHECK(parse_ideal_text(format_ideal(ideal)) == ideal);
  CHECK(parse_monomial("x1^2*x3", 3) == Monomial(std::vector<Exponent>{2, 0, 1}));
}

TEST_CASE("ideal parse errors") {
  auto line_of = [](const std::string& text) {
    try {
      parse_ideal_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("n=2\nx1*x3\n") == 2);
  CHECK(line_of("n=2\nx1\n1:x\n") == 3);
  CHECK(line_of("x1*x2\n") == 1);
  CHECK(line_of("n=2\nx1*x2\n\n1:0\n") == 4);
}

TEST_CASE("parallel_map keeps index order and rethrows the lowest failure") {
  for (unsigned threads : {1u, 2u, 4u, 8u}) {
    const auto squares = parallel_map<int>(100, threads, [](std::size_t i) { return static_cast<int>(i * i); });
    REQUIRE(squares.size() == 100);
    for (std::size_t i = 0; i < 100; ++i) CHECK(squares[i] == static_cast<int>(i * i));
  }
  CHECK(parallel_map<int>(0, 4, [](std::size_t) { return 1; }).empty());
  try {
    parallel_map<int>(50, 1, [](std::size_t i) -> int {
      if (i == 7 || i == 30) throw std::runtime_error(std::to_string(i));
      return 0;
    });
    FAIL("expected a throw");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "7");
  }
}

TEST_CASE("thread count resolution") {
  CHECK(resolve_threads(3u) == 3);
  CHECK(resolve_threads(0u) >= 1);
  setenv("LINREZ_THREADS", "5", 1);
  CHECK(resolve_threads() == 5);
  CHECK(resolve_threads(2u) == 2);
  setenv("LINREZ_THREADS", "lots", 1);
  CHECK_THROWS_AS(resolve_threads(), ArgumentError);
  unsetenv("LINREZ_THREADS");
  CHECK(resolve_threads() >= 1);
}

TEST_CASE("report bodies are deterministic and carry fields") {
  const Graph g = parse_graph_text("n 5\n1 2\n2 3\n3 4\n4 5\n1 5\n");
  std::string first;
  for (unsigned threads : {1u, 4u, 8u}) {
    ScanOptions so;
    so.threads = threads;
    so.max_power = 2;
    bool incomplete = true;
    const Json results = index_scan(g, so, &incomplete);
    CHECK_FALSE(incomplete);
    const Json report = make_report("index", Json::object(), Json::object(), results, "ok", {{"threads", threads}});
    CHECK(report.contains("timings"));
    const std::string body = emit_report(report_body(report));
    CHECK(body.find("timings") == std::string::npos);
    if (first.empty()) first = body;
    CHECK(body == first);
  }
  const Json doc = Json::parse(first);
  CHECK(doc["tool"] == "linrez");
  for (const auto& e : doc["results"]["powers"]) {
    CHECK(e["result"]["field"] == "GF(32003)");
    CHECK(e["result"].contains("certificate"));
  }
}

TEST_CASE("infinite indices carry a certificate") {
  const Graph k4 = complete_graph(4);
  const auto table = betti_table_gpw(edge_ideal(k4), FieldSpec::prime(32003));
  const Json b = betti_json(table, edge_ideal(k4));
  CHECK(b["index"] == "inf");
  CHECK(b["max_i_computed"] == b["homological_bound"]);
  IndexOptions o;
  const Json r = index_json(compute_index(edge_ideal(k4), o), o.field);
  CHECK(r["index"] == "inf");
  CHECK(r["certificate"]["kind"] == "taylor-bound");
  CHECK(combinatorial_index_json(k4)["certificate"]["kind"] == "chordal-complement");
}

TEST_CASE("non-equigenerated ideals report an undefined index") {
  const auto ideal = parse_ideal_text("n=3\nx1^2\nx2*x3^2\n");
  const Json b = betti_json(betti_table_gpw(ideal, FieldSpec::rationals()), ideal);
  CHECK(b["index"] == "undefined");
  CHECK(b["field"] == "QQ");
}

TEST_CASE("check catalog and runner") {
  const auto& cat = check_catalog();
  CHECK(cat.size() == 14);
  CHECK_THROWS_AS(run_check("no-such-check", CheckOptions{}), ArgumentError);
  CheckOptions o;
  o.ns = {5, 7};
  const auto r = run_check("odd-cycle-beta", o);
  CHECK(r.status == "pass");
  CHECK(r.details["cases"] == 2);
  CHECK(run_check("external-ideal", CheckOptions{}).status == "skipped");
  o.ns = {6};
  CHECK(run_check("odd-cycle-beta", o).status == "fail");
  const Json rep = checks_report({r}, o);
  CHECK(rep["status"] == "ok");
  CHECK(rep["results"]["checks"][0]["name"] == "odd-cycle-beta");
}
