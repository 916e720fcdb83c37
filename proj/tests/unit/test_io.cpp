#include "doctest.h"

#include <random>

#include "dgd/io.hpp"
#include "support/generators.hpp"

using namespace dgd;

TEST_CASE("arc list parsing") {
    Digraph g = parse_arc_list("0 1\n1 2\n");
    CHECK(g.order() == 3);
    CHECK(g.has_arc(0, 1));
    CHECK(g.has_arc(1, 2));

    g = parse_arc_list("# n=5\n# a comment\n0 1\n\n3 1\n");
    CHECK(g.order() == 5);
    CHECK(g.arc_count() == 2);

    g = parse_arc_list("# n=3\nlabel 0 alpha\nlabel 2 gamma\n0 2\n");
    CHECK(g.label(0) == "alpha");
    CHECK(g.label(1) == "1");
    CHECK(g.label(2) == "gamma");

    g = parse_arc_list("# n=0\n");
    CHECK(g.order() == 0);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_arc_list("0 1\n2 2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    try {
        parse_arc_list("# n=2\n0 1\n0 7\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(parse_arc_list("0 1\nbogus line\n"), ParseError);
    CHECK_THROWS_AS(parse_arc_list("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_arc_list("# n=2\n# n=3\n"), ParseError);
    CHECK_THROWS_AS(parse_arc_list("0 1\n0 1\n"), ParseError);  // duplicate arc
}

TEST_CASE("emit/parse round trip is exact") {
    std::string canonical = "# n=3\n0 1\n1 2\n";
    CHECK(emit_arc_list(parse_arc_list(canonical)) == canonical);

    std::string labeled = "# n=2\nlabel 0 src\nlabel 1 dst\n0 1\n";
    CHECK(emit_arc_list(parse_arc_list(labeled)) == labeled);

    std::mt19937_64 rng(71);
    for (int round = 0; round < 200; ++round) {
        Digraph g = gen::random_digraph(rng, 1 + static_cast<int>(rng() % 9), 0.3);
        CHECK(parse_arc_list(emit_arc_list(g)) == g);
        CHECK(emit_arc_list(parse_arc_list(emit_arc_list(g))) == emit_arc_list(g));
    }
}

TEST_CASE("dot export") {
    Digraph g(2, {Arc{0, 1}}, {"in", "out"});
    CHECK(to_dot(g) ==
          "digraph G {\n"
          "  0 [label=\"in\"];\n"
          "  1 [label=\"out\"];\n"
          "  0 -> 1;\n"
          "}\n");
    CHECK(to_dot(build_digraph(2, {{0, 1}}), "L1") ==
          "digraph L1 {\n  0;\n  1;\n  0 -> 1;\n}\n");
}

TEST_CASE("csv quoting") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("verdict serialization is deterministic and ordered") {
    DualityVerdict v = is_canonical(as_l_matrix(build_digraph(4, {{0, 1}, {0, 2}, {3, 1}})));
    json j = to_json(v);
    CHECK(j["quasi_canonical"] == false);
    CHECK(j["canonical"] == false);
    CHECK(j["violating_arcs"][0]["tail"] == 0);
    CHECK(j["violating_arcs"][0]["head"] == 1);
    CHECK(to_json(v).dump() == j.dump());
}
