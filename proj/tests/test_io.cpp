#include <doctest.h>

#include "nichegraph/errors.hpp"
#include "nichegraph/io.hpp"
#include "nichegraph/kernel.hpp"
#include "nichegraph/niche.hpp"
#include "nichegraph/oracle.hpp"
#include "nichegraph/recognize.hpp"
#include "oracles.hpp"

using namespace niche;

TEST_SUITE_BEGIN("io");

TEST_CASE("graph parsing") {
    Graph g = parse_graph("graph\nv a b\ne a b\n");
    CHECK(g == Graph::complete({"a", "b"}));

    // comments, blank lines, flexible spacing
    Graph h = parse_graph("# leading comment\ngraph\n\nv a b c   # trailing\n\ne a b\ne b c\n");
    CHECK(h == Graph::path({"a", "b", "c"}));

    CHECK(parse_graph("graph\n").size() == 0);

    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("digraph\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph\nv a a\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph\nv a b\ne a a\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph\nv a b\ne a z\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph\nv a b\ne a b\ne b a\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph\nv a b\ne a b\nv c\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph\nv a>b\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph\nv a-b\n"), ParseError);

    // errors carry the offending line
    try {
        parse_graph("graph\nv a b\ne a z\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("tournament parsing") {
    std::string text =
        "bitournament\nleft u1 u2\nright v1\narc u1 v1\narc v1 u2\n";
    BipartiteTournament d = parse_tournament(text);
    CHECK(d.left_size() == 2);
    CHECK(d.has_arc("u1", "v1"));
    CHECK(d.has_arc("v1", "u2"));

    // three of four arcs: the missing pair is named
    try {
        parse_tournament("bitournament\nleft u1 u2\nright v1 v2\n"
                         "arc u1 v1\narc u1 v2\narc v1 u2\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("missing arc") != std::string::npos);
        CHECK(std::string(e.what()).find("u2") != std::string::npos);
        CHECK(std::string(e.what()).find("v2") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_tournament("bitournament\nleft u\nright u\narc u u\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_tournament("bitournament\nleft u1 u2\nright v\n"
                                     "arc u1 u2\narc u1 v\narc u2 v\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_tournament("bitournament\nleft u1 u1\nright v\narc u1 v\n"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_tournament("bitournament\nleft u\nright v\narc u v\narc v u\n"),
        ParseError);
    CHECK_THROWS_AS(parse_tournament("bitournament\nleft u\narc u v\n"), ParseError);
}

TEST_CASE("emitters normalize and round trip") {
    Graph g = parse_graph("graph\nv c b a\ne c a\ne b   c\n");
    std::string text = emit_graph(g);
    CHECK(text == "graph\nv a b c\ne a c\ne b c\n");
    CHECK(parse_graph(text) == g);
    CHECK(emit_graph(parse_graph(text)) == text);

    SplitMix64 rng(83);
    for (int it = 0; it < 25; ++it) {
        Graph r = oracles::random_graph(7, rng, "g");
        CHECK(parse_graph(emit_graph(r)) == r);
        auto d = random_tournament(1 + rng.below(5), 1 + rng.below(5), rng.next());
        CHECK(parse_tournament(emit_tournament(d)) == d);
        CHECK(emit_tournament(parse_tournament(emit_tournament(d))) == emit_tournament(d));
    }
}

TEST_CASE("dot export") {
    std::string dot = emit_dot(Graph::cycle({"a", "b", "c", "d"}));
    CHECK(dot.find("graph G {") == 0);
    std::size_t nodes = 0, edges = 0, at = 0;
    while ((at = dot.find(";\n", at)) != std::string::npos) {
        ++at;
        ++nodes;
    }
    at = 0;
    while ((at = dot.find(" -- ", at)) != std::string::npos) {
        ++at;
        ++edges;
    }
    CHECK(edges == 4);
    CHECK(nodes == 8);  // 4 vertex statements + 4 edge statements
    CHECK(dot.back() == '\n');
}

TEST_CASE("kind sniffing") {
    CHECK(sniff_kind("graph\n") == InputKind::GraphFile);
    CHECK(sniff_kind("# hi\nbitournament\nleft u\nright v\narc u v\n") ==
          InputKind::TournamentFile);
    CHECK_THROWS_AS(sniff_kind("nonsense\n"), ParseError);
}

TEST_CASE("certificate text") {
    Graph two = disjoint_union(Graph::path({"a", "b", "c"}), Graph::complete({"x", "y"}));
    std::string text = certificate_text(recognize(two));
    CHECK(text ==
          "decision YES\nreason OK_Two\nsides a b c | x y\nparams 1 1 0 2\n");

    std::string no = certificate_text(recognize(Graph::path({"a", "b", "c", "d"})));
    CHECK(no == "decision NO\nreason TooFewComponents\n");

    Graph p4k7 = disjoint_union(Graph::path({"a", "b", "c", "d"}),
                                Graph::complete({"p", "q", "r", "s", "t", "u", "v"}));
    CHECK(certificate_text(recognize(p4k7)) ==
          "decision NO\nreason BadCondensationShape\n");

    Graph three = disjoint_union(
        disjoint_union(Graph::complete({"a"}), Graph::complete({"b"})),
        Graph::complete({"c", "d"}));
    std::string tf = certificate_text(recognize(three));
    CHECK(tf == "decision YES\nreason OK_ThreeFour\nsides a b | c d\n");
}

TEST_SUITE_END();
