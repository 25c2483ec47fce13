#include <doctest.h>

#include <random>
#include <set>

#include "monosplit/errors.hpp"
#include "monosplit/text_io.hpp"
#include "support/fixtures.hpp"

using namespace monosplit;
using monosplit::testing::sq;

TEST_CASE("ideal files") {
    const auto i = parse_ideal("# comment\nvars 3\n\nx1*x3^2\n  x2 \nx1*x2\n");
    CHECK(i.num_vars() == 3);
    CHECK(i.generators() == std::vector{Monomial{1, 0, 2}, Monomial{0, 1, 0}});
    CHECK(format_ideal(i) == "vars 3\nx1*x3^2\nx2\n");
    CHECK(parse_ideal("vars 2\n").is_zero());
    CHECK(parse_ideal("vars 2\n1\nx1\n").is_unit());
    CHECK(parse_monomial("x2^3*x2", 2) == Monomial{0, 4});
}

TEST_CASE("ideal files round trip") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 100; ++trial) {
        const auto i = monosplit::testing::random_ideal(rng, 7, 8, 4);
        CHECK(parse_ideal(format_ideal(i)) == i);
    }
}

TEST_CASE("parse errors carry the line and token") {
    auto expect = [](std::string_view text, std::size_t line, const std::string& token) {
        try {
            (void)parse_ideal(text);
            FAIL("no error for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
            CHECK(e.token() == token);
        }
    };
    expect("vars 3\nx1\nx4\n", 3, "x4");
    expect("vars 3\nx1*y2\n", 2, "y2");
    expect("vars 3\n\n# note\nx1^\n", 4, "x1^");
    expect("variables 3\nx1\n", 1, "variables");
    expect("", 1, "");
    expect("vars 1\nx1^99999999999\n", 2, "x1^99999999999");
    CHECK_THROWS_AS(parse_graph("graph 3\n1 4\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph 3\n2 2\n"), ParseError);
    CHECK_THROWS_AS(parse_bigraph("bigraph 2\n1\n"), ParseError);
}

TEST_CASE("graph files round trip") {
    const auto g = parse_graph("graph 4\n1 2\n3 2\n# chord\n3 4\n");
    CHECK(g.edges() == std::set<SimpleGraph::Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(format_graph(g) == "graph 4\n1 2\n2 3\n3 4\n");
    CHECK(parse_graph(format_graph(g)) == g);

    const auto b = parse_bigraph("bigraph 2\n1 1\n2 2\n1 2\n");
    CHECK(b.has_edge(0, 1));
    CHECK(parse_bigraph(format_bigraph(b)) == b);
}

TEST_CASE("bipartite cover ideal output names the y variables") {
    const BipartiteLabeledGraph matching(2, {{0, 0}, {1, 1}});
    const auto text = format_bipartite_cover_ideal(matching);
    CHECK(text.starts_with("# x1..x2 are x1..x2; y1..y2 are x3..x4\n"));
    CHECK(parse_ideal(text) == cover_ideal(matching.to_simple_graph()));
}

TEST_CASE("serialized Betti tables round trip") {
    const auto rp2 = monosplit::testing::rp2_ideal();
    for (auto f : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
        const auto t = betti_table(rp2, f);
        const auto text = serialize_betti(t);
        CHECK(text.starts_with("betti field=" + std::to_string(f.characteristic()) + " convention=ideal\n"));
        CHECK(parse_betti(text, 6) == t);
    }
    const auto small = betti_table(monosplit::testing::sq_ideal(2, {{1}, {2}}), FieldSpec::rationals());
    CHECK(serialize_betti(small) == "betti field=0 convention=ideal\n0 x1 1\n0 x2 1\n1 x1*x2 1\n");
    CHECK_THROWS_AS(parse_betti("betti field=0\n", 2), ParseError);
    CHECK_THROWS_AS(parse_betti("betti field=0 convention=ideal\n0 x1\n", 2), ParseError);
}

TEST_CASE("Betti diagram") {
    const auto t = betti_table(monosplit::testing::rp2_ideal(), FieldSpec::prime(2));
    CHECK(render_betti_diagram(t) ==
          "        0  1  2  3\n"
          "total: 10 15  7  1\n"
          "    3: 10 15  6  1\n"
          "    4:  .  .  1  .\n");
    CHECK(render_betti_diagram(BettiTable(2, FieldSpec::rationals())) == "      \ntotal:\n");
}

TEST_CASE("JSON reports") {
    SplitReport r;
    r.variable = 3;
    r.field = FieldSpec::prime(2);
    r.betti_splitting = true;
    r.ek = EkVerdict::absent;
    const auto j = to_json(r);
    CHECK(j["variable"] == 4);
    CHECK(j["field"] == 2);
    CHECK(j["betti_splitting"] == true);
    CHECK(j["disjoint_support"] == false);
    CHECK(j["ek"] == "absent");
    r.variable.reset();
    CHECK(to_json(std::vector{r})[0]["variable"] == "user");

    const auto found = ek_search(xi_partition(monosplit::testing::sq_ideal(4, {{1, 2}, {2, 3}, {3, 4}}), 1));
    const auto ej = to_json(found);
    CHECK(ej["ek"] == "found");
    CHECK(ej["function"].size() == 1);
}
