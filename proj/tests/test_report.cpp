#include "doctest.h"

#include "fixtures.hpp"
#include "generators.hpp"
#include "wr1/errors.hpp"
#include "wr1/report.hpp"

#include "json.hpp"

using namespace wr1;
using nlohmann::json;

namespace {

SourceDecomposition dec_of(const char* text) { return decompose(parse_system(text)); }

}  // namespace

TEST_CASE("load_graph: rated and unrated documents") {
    const auto doc = load_graph(R"({"n": 2, "species": ["x", "y"],
        "vertices": [[1, 0], [2, 0], [2, 1]],
        "edges": [{"from": 0, "to": 1, "rate": "1"}, {"from": 1, "to": 2, "rate": "3/2"},
                  {"from": 2, "to": 0, "rate": 2}]})");
    CHECK(doc.species == std::vector<std::string>{"x", "y"});
    CHECK(doc.graph.m() == 3);
    CHECK(doc.graph.rates() == RationalVector{1, Rational(3, 2), 2});

    const auto plain = load_graph(R"({"vertices": [[0], [1]], "edges": [{"from": 0, "to": 1}]})");
    CHECK(plain.graph.n() == 1);
    CHECK_FALSE(plain.graph.has_rates());
}

TEST_CASE("load_graph: errors") {
    CHECK_THROWS_AS(load_graph("[]"), SchemaError);
    CHECK_THROWS_AS(load_graph(R"({"vertices": [[0], [1]]})"), SchemaError);
    CHECK_THROWS_AS(load_graph(R"({"vertices": [[0], [1]], "edges": [{"from": 0}]})"), SchemaError);
    CHECK_THROWS_AS(load_graph(R"({"vertices": [[0], [1]], "edges": [{"from": 0, "to": 1, "rate": "x"}]})"),
                    SchemaError);
    CHECK_THROWS_AS(load_graph(R"({"vertices": [[0], [1], [2]],
        "edges": [{"from": 0, "to": 1, "rate": "1"}, {"from": 1, "to": 2}]})"),
                    SchemaError);
    CHECK_THROWS_AS(load_graph(R"({"vertices": [[0], [1]], "edges": [{"from": 0, "to": 0}, {"from": 0, "to": 1}]})"),
                    InvalidGraph);
    CHECK_THROWS_AS(load_graph(R"({"n": 1, "species": ["a", "b"], "vertices": [[0], [1]], "edges": [{"from": 0, "to": 1}]})"),
                    ShapeMismatch);
}

TEST_CASE("verify_realization") {
    const auto target = dec_of(fixtures::kThreeCycle);
    const auto ok = verify_realization(fixtures::three_cycle_graph(), target);
    CHECK(ok.passed());
    CHECK(ok.checks.size() == 3);

    const auto wrong = verify_realization(fixtures::three_cycle_graph(), dec_of(fixtures::kFourCycle));
    CHECK_FALSE(wrong.passed());
    CHECK(wrong.checks[0].passed);
    CHECK_FALSE(wrong.checks[2].passed);

    const auto split = verify_realization(fixtures::two_class_graph(), source_decomposition(fixtures::two_class_graph(), {"x", "y"}));
    CHECK_FALSE(split.passed());
    CHECK_FALSE(split.checks[0].passed);
    CHECK_FALSE(split.checks[1].passed);
    CHECK(split.checks[2].passed);
}

TEST_CASE("verify ignores monomials whose net vector is zero") {
    // 0 <-> 1 <-> 2 on a line: vertex 1 contributes nothing to the dynamics.
    const EGraph g(1, {{0}, {1}, {2}},
                   std::vector<EGraph::RatedEdge>{{{0, 1}, Rational(1)}, {{1, 0}, Rational(1)}, {{1, 2}, Rational(1)},
                                                  {{2, 1}, Rational(1)}});
    CHECK(verify_realization(g, dec_of("species x; x' = 1 - x^2;")).passed());
}

TEST_CASE("JSON report for a realization") {
    const auto dec = dec_of(fixtures::kCubic);
    const auto report = realize_wr1(dec);
    const auto text = render_realization(report, dec, {OutputFormat::Json, std::vector<Edge>{}});
    const auto j = json::parse(text);
    CHECK(j["status"] == "realized");
    CHECK(j["vertex_labels"] == json::array({"x", "x^2", "x^3"}));
    CHECK(j["edges"].size() == 6);
    CHECK(j["support_sets"] == json::parse("[[0,1,2],[0,1,2],[0,1,2]]"));
    CHECK(j["deficiency"] == 1);
    CHECK(j["deficiency_from_W"] == 1);
    CHECK(j["verified"] == true);
    CHECK(j["maximality_check"]["passed"] == true);

    // The emitted graph reloads and verifies against the input.
    json gdoc{{"n", j["n"]}, {"species", j["species"]}, {"vertices", j["vertices"]}, {"edges", j["edges"]}};
    const auto reloaded = load_graph(gdoc.dump());
    CHECK(verify_realization(reloaded.graph, dec).passed());
}

TEST_CASE("JSON report for a negative result") {
    const auto dec = dec_of(fixtures::kNoRealization);
    const auto j = json::parse(render_realization(realize_wr1(dec), dec, {}));
    CHECK(j["status"] == "no_realization");
    CHECK(j["reason"]["kind"] == "infeasible_vertex");
    CHECK(j["reason"]["vertex"] == 0);
    CHECK(j["reason"]["source"] == json::array({1, 0}));
}

TEST_CASE("DOT and human formats") {
    const auto dec = dec_of(fixtures::kThreeCycle);
    const auto report = realize_wr1(dec);
    const auto dot = render_realization(report, dec, {OutputFormat::Dot, std::nullopt});
    CHECK(dot.find("digraph wr1") == 0);
    CHECK(dot.find("v0 -> v1 [label=\"1\"]") != std::string::npos);
    const auto human = render_realization(report, dec, {OutputFormat::Human, std::nullopt});
    CHECK(human.find("x^2 y -> x") != std::string::npos);
    CHECK(human.find("deficiency: 0") != std::string::npos);
}

TEST_CASE("structure report") {
    const auto j = json::parse(render_structure(fixtures::two_class_graph(), {"x", "y"}, OutputFormat::Json));
    CHECK(j["deficiency"] == 2);
    CHECK(j["weakly_reversible"] == false);
    CHECK(j["terminal_components"] == json::parse("[[0,1],[4,5]]"));
    CHECK(j["kernel_support_check"]["kernel_dimension"] == 2);
    CHECK(j["kernel_support_check"]["consistent"] == true);
}

TEST_CASE("reports are byte-identical across runs") {
    gen::Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = gen::wr1_graph(rng);
        const auto dec = source_decomposition(g, gen::species_names(g.n()));
        const auto a = render_realization(realize_wr1(dec), dec, {});
        const auto b = render_realization(realize_wr1(dec, {.parallel = true}), dec, {});
        CHECK(a == b);
    }
}
