#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zeta/builtin_graphs.hpp"
#include "zeta/cli.hpp"
#include "zeta/verify.hpp"

#include <json.hpp>

#include <random>
#include <sstream>

using namespace zeta;
using nlohmann::json;

namespace {

const char* kGridDoc = R"({
  "rank": 2,
  "vertices": ["v"],
  "edges": [
    {"id": "a", "from": "v", "to": "v", "voltage": [1, 0]},
    {"id": "b", "from": "v", "to": "v", "voltage": [0, 1]}
  ]
})";

const char* kTriangleDoc = R"({
  "rank": 0,
  "vertices": ["x", "y", "z"],
  "edges": [
    {"id": "e1", "from": "x", "to": "y"},
    {"id": "e2", "from": "y", "to": "z"},
    {"id": "e3", "from": "z", "to": "x"}
  ]
})";

json run_finite(const std::string& text, CliOptions options, int expect_code = kExitOk) {
    std::ostringstream out, err;
    GraphDocument doc = parse_graph_document(text);
    int code = cmd_finite(out, err, doc, options);
    CHECK(code == expect_code);
    return json::parse(out.str());
}

json run_periodic(const std::string& text, CliOptions options) {
    std::ostringstream out, err;
    GraphDocument doc = parse_graph_document(text);
    CHECK(cmd_periodic(out, err, doc, options) == kExitOk);
    return json::parse(out.str());
}

} // namespace

TEST_CASE("parsing rejects malformed documents with a location") {
    CHECK_THROWS_AS(parse_graph_document("{"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph_document(R"({"rank": 0, "vertices": ["a"]})"),
                         doctest::Contains("edges"), ParseError);
    GraphDocument doc = parse_graph_document(
        R"({"rank": 0, "vertices": ["a"], "edges": [{"id": "e", "from": "a", "to": "b"}]})");
    CHECK_THROWS_WITH_AS(document_to_voltage_graph(doc), doctest::Contains("unknown vertex 'b'"),
                         ParseError);
    GraphDocument dup = parse_graph_document(
        R"({"rank": 0, "vertices": ["a", "a"], "edges": []})");
    CHECK_THROWS_WITH_AS(document_to_voltage_graph(dup), doctest::Contains("duplicate"),
                         ParseError);
    GraphDocument volt = parse_graph_document(
        R"({"rank": 2, "vertices": ["a"], "edges": [{"id": "e", "from": "a", "to": "a", "voltage": [1]}]})");
    CHECK_THROWS_WITH_AS(document_to_voltage_graph(volt), doctest::Contains("voltage length"),
                         ParseError);
}

TEST_CASE("documents round trip through graphs") {
    GraphDocument doc = parse_graph_document(kGridDoc);
    VoltageGraph vg = document_to_voltage_graph(doc);
    GraphDocument back = graph_to_document(vg);
    VoltageGraph vg2 = document_to_voltage_graph(back);
    CHECK(vg2.base.edge_origin == vg.base.edge_origin);
    CHECK(vg2.base.edge_terminus == vg.base.edge_terminus);
    CHECK(vg2.base.edge_reversal == vg.base.edge_reversal);
    CHECK(vg2.voltage == vg.voltage);
    CHECK(vg2.rank == vg.rank);
}

TEST_CASE("finite reports carry both routes and the verdict") {
    CliOptions options;
    options.order = 6;
    json report = run_finite(kTriangleDoc, options);
    CHECK(report["checks"]["bass_hashimoto"] == "equal");
    CHECK(report["chi"] == "0");
    CHECK(report["series"]["Z"] ==
          json::array({"1", "0", "0", "-2", "0", "0", "1"}));
    CHECK(report["series"]["log_Z"][3] == "-2");
    CHECK(report["input"]["rank"] == 0);
}

TEST_CASE("finite command reports the weighted Euler characteristic") {
    std::string text = R"({
      "rank": 0,
      "vertices": ["x", "y"],
      "edges": [{"id": "e", "from": "x", "to": "y"}],
      "vertex_weights": {"x": 2},
      "edge_weights": {"e": 1}
    })";
    CliOptions options;
    options.order = 4;
    json report = run_finite(text, options);
    CHECK(report["chi"] == "1/2"); // 1/2 + 1 - 1
}

TEST_CASE("classical convention adds the reciprocal series") {
    CliOptions options;
    options.order = 6;
    options.convention = Convention::classical;
    json report = run_finite(kTriangleDoc, options);
    // 1/(1-u^3)^2 = 1 + 2u^3 + 3u^6 + ...
    CHECK(report["series"]["Z_classical"] ==
          json::array({"1", "0", "0", "2", "0", "0", "3"}));
}

TEST_CASE("finite command routes rank > 0 documents away") {
    std::ostringstream out, err;
    GraphDocument doc = parse_graph_document(kGridDoc);
    CHECK(cmd_finite(out, err, doc, CliOptions{}) == kExitInputError);
    CHECK(err.str().find("periodic") != std::string::npos);
}

TEST_CASE("periodic report reproduces the grid loop table") {
    CliOptions options;
    options.order = 12;
    json report = run_periodic(kGridDoc, options);
    CHECK(report["checks"]["bass_hashimoto"] == "equal");
    CHECK(report["chi2"] == "-1");
    json table = report["loop_table"];
    std::map<int, std::string> expect = {{2, "0"},  {4, "2"},   {6, "4"},
                                         {8, "26"}, {10, "152"}, {12, "1004"}};
    for (const auto& row : table) {
        int l = row[0].get<int>();
        if (expect.count(l)) CHECK(row[1].get<std::string>() == expect[l]);
        if (l % 2 == 1) CHECK(row[1].get<std::string>() == "0");
    }
    CHECK(report["series"]["Z"][0] == "1");
}

TEST_CASE("reports are byte-identical across runs") {
    CliOptions options;
    options.order = 10;
    std::ostringstream out1, out2, err;
    GraphDocument doc = parse_graph_document(kGridDoc);
    CHECK(cmd_periodic(out1, err, doc, options) == kExitOk);
    CHECK(cmd_periodic(out2, err, doc, options) == kExitOk);
    CHECK(out1.str() == out2.str());
    CHECK(!out1.str().empty());
}

TEST_CASE("loops command emits agreement rows") {
    std::ostringstream out, err;
    GraphDocument doc = parse_graph_document(kGridDoc);
    CliOptions options;
    options.format = OutputFormat::csv;
    CHECK(cmd_loops(out, err, doc, 8, options) == kExitOk);
    CHECK(out.str().find("8,26,26,agree") != std::string::npos);
    CHECK(out.str().find("3,0,0,agree") != std::string::npos);

    std::ostringstream out2;
    GraphDocument tri = parse_graph_document(kTriangleDoc);
    CHECK(cmd_loops(out2, err, tri, 3, options) == kExitOk);
    CHECK(out2.str().find("3,2,2,agree") != std::string::npos);
}

TEST_CASE("evaluation is reported only on request and carries the flag") {
    CliOptions options;
    options.order = 12;
    options.has_evaluation = true;
    options.evaluate_at = {0.1, 0.0};
    json report = run_periodic(kGridDoc, options);
    REQUIRE(report.contains("evaluation"));
    CHECK(report["evaluation"]["norm_bound"] == 3.0); // row sums of T on the grid
    CHECK(report["evaluation"]["outside_radius"] == false);

    options.evaluate_at = {0.5, 0.0};
    json warn = run_periodic(kGridDoc, options);
    CHECK(warn["evaluation"]["outside_radius"] == true);
}

TEST_CASE("tree reports Z = 1") {
    std::string text = R"({
      "rank": 0,
      "vertices": ["a", "b", "c"],
      "edges": [{"id": "e1", "from": "a", "to": "b"}, {"id": "e2", "from": "b", "to": "c"}]
    })";
    CliOptions options;
    options.order = 4;
    json report = run_finite(text, options);
    CHECK(report["series"]["Z"] == json::array({"1", "0", "0", "0", "0"}));
    CHECK(report["checks"]["bass_hashimoto"] == "equal");
}

TEST_CASE("ladder document verifies the identity at order 10") {
    std::string text = R"({
      "rank": 1,
      "vertices": ["x", "y"],
      "edges": [
        {"id": "rung", "from": "x", "to": "y", "voltage": [0]},
        {"id": "rail-x", "from": "x", "to": "x", "voltage": [1]},
        {"id": "rail-y", "from": "y", "to": "y", "voltage": [1]}
      ]
    })";
    CliOptions options;
    options.order = 10;
    json report = run_periodic(text, options);
    CHECK(report["checks"]["bass_hashimoto"] == "equal");
    CHECK(report["chi2"] == "-1");
}

TEST_CASE("K4 with trivial weights reports chi -2") {
    std::string text = R"({
      "rank": 0,
      "vertices": ["1", "2", "3", "4"],
      "edges": [
        {"id": "a", "from": "1", "to": "2"}, {"id": "b", "from": "1", "to": "3"},
        {"id": "c", "from": "1", "to": "4"}, {"id": "d", "from": "2", "to": "3"},
        {"id": "e", "from": "2", "to": "4"}, {"id": "f", "from": "3", "to": "4"}
      ],
      "vertex_weights": {"1": 1, "2": 1, "3": 1, "4": 1},
      "edge_weights": {"a": 1, "b": 1, "c": 1, "d": 1, "e": 1, "f": 1}
    })";
    CliOptions options;
    options.order = 6;
    json report = run_finite(text, options);
    CHECK(report["chi"] == "-2");
}

TEST_CASE("random graphs survive the counterexample dump format") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 5; ++t) {
        VoltageGraph vg = random_connected_graph(rng);
        GraphDocument doc = graph_to_document(vg);
        VoltageGraph back = document_to_voltage_graph(parse_graph_document(document_to_json(doc)));
        CHECK(back.base.edge_origin == vg.base.edge_origin);
        CHECK(back.base.edge_terminus == vg.base.edge_terminus);
        CHECK(back.base.edge_reversal == vg.base.edge_reversal);
        CHECK(back.voltage == vg.voltage);
    }
}

TEST_CASE("verify command runs the named suites") {
    std::ostringstream out, err;
    CliOptions options;
    CHECK(cmd_verify(out, err, "inversion-roundtrip", options) == kExitOk);
    CHECK(out.str().find("inversion-roundtrip: pass") != std::string::npos);

    std::ostringstream out2, err2;
    CHECK(cmd_verify(out2, err2, "nonsense", options) == kExitInputError);
    CHECK(err2.str().find("usage error") != std::string::npos);
}
