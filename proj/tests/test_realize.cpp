#include <doctest.h>

#include <algorithm>
#include <set>

#include "nichegraph/errors.hpp"
#include "nichegraph/kernel.hpp"
#include "nichegraph/niche.hpp"
#include "nichegraph/realize.hpp"
#include "oracles.hpp"

using namespace niche;
using oracles::letters;

namespace {

Graph named_complete(const std::string& prefix, int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return Graph::complete(names);
}

}  // namespace

TEST_SUITE_BEGIN("realize");

TEST_CASE("three components, one side doubled") {
    Graph g = disjoint_union(disjoint_union(named_complete("a", 1), named_complete("b", 1)),
                             named_complete("c", 2));
    auto cert = recognize(g);
    REQUIRE(cert.reason == Reason::OkThreeFour);
    auto d = realize_three_four(g, cert);
    CHECK(niche_graph(d) == g);
}

TEST_CASE("four components give the edgeless witness") {
    Graph g(letters(4), {});
    auto cert = recognize(g);
    REQUIRE(cert.decision == Decision::Yes);
    auto d = realize_three_four(g, cert);
    CHECK(niche_graph(d) == g);
    CHECK(niche_graph(d).edge_count() == 0);
}

TEST_CASE("four complete components of mixed sizes") {
    Graph g = disjoint_union(
        disjoint_union(named_complete("a", 2), named_complete("b", 3)),
        disjoint_union(named_complete("c", 2), named_complete("d", 2)));
    auto cert = recognize(g);
    REQUIRE(cert.reason == Reason::OkThreeFour);
    CHECK(niche_graph(realize_three_four(g, cert)) == g);
}

TEST_CASE("two singleton components give a single arc") {
    Graph g({"a", "b"}, {});
    auto cert = recognize(g);
    REQUIRE(cert.reason == Reason::OkTwo);
    auto [d, plan] = realize_two(g, cert);
    CHECK(d.left_size() + d.right_size() == 2);
    CHECK(niche_graph(d) == g);
    CHECK(oracles::plan_violations(g, plan).empty());
}

TEST_CASE("two four-cycles round trip") {
    Graph g = disjoint_union(Graph::cycle({"a", "b", "c", "d"}),
                             Graph::cycle({"e", "f", "g", "h"}));
    auto cert = recognize(g);
    REQUIRE(cert.reason == Reason::OkTwo);
    auto [d, plan] = realize_two(g, cert);
    CHECK(niche_graph(d) == g);
    CHECK(oracles::plan_violations(g, plan).empty());
}

TEST_CASE("path pair round trip") {
    Graph g = disjoint_union(Graph::path({"a", "b", "c"}), Graph::path({"x", "y"}));
    auto cert = recognize(g);
    REQUIRE(cert.reason == Reason::OkTwo);
    auto [d, plan] = realize_two(g, cert);
    CHECK(niche_graph(d) == g);
    CHECK(oracles::plan_violations(g, plan).empty());
}

TEST_CASE("dispatcher") {
    CHECK(!realize(Graph::path({"a", "b", "c", "d"})).has_value());
    CHECK(!realize(Graph::complete(letters(3))).has_value());

    Graph kk = disjoint_union(named_complete("a", 3), named_complete("b", 3));
    auto d = realize(kk);
    REQUIRE(d.has_value());
    CHECK(niche_graph(*d) == kk);

    Graph squad = disjoint_union(
        disjoint_union(named_complete("a", 3), named_complete("b", 5)),
        disjoint_union(named_complete("c", 2), named_complete("d", 1)));
    auto w = realize(squad);
    REQUIRE(w.has_value());
    CHECK(niche_graph(*w) == squad);
}

TEST_CASE("certificate kind is enforced") {
    Graph two = disjoint_union(named_complete("a", 2), named_complete("b", 2));
    auto cert2 = recognize(two);
    CHECK_THROWS_AS(realize_three_four(two, cert2), CertificateMismatchError);

    Graph three = disjoint_union(disjoint_union(named_complete("a", 2), named_complete("b", 2)),
                                 named_complete("c", 2));
    auto cert3 = recognize(three);
    CHECK_THROWS_AS(realize_two(three, cert3), CertificateMismatchError);

    // certificate from a different graph
    CHECK_THROWS_AS(realize_three_four(two, cert3), CertificateMismatchError);
}

TEST_CASE("random yes instances round trip with valid plans") {
    SplitMix64 rng(61);
    for (int it = 0; it < 120; ++it) {
        Graph g = oracles::random_yes_two_component(rng);
        auto cert = recognize(g);
        REQUIRE(cert.decision == Decision::Yes);
        REQUIRE(cert.reason == Reason::OkTwo);
        auto [d, plan] = realize_two(g, cert);
        CHECK(niche_graph(d) == g);
        CHECK(oracles::plan_violations(g, plan).empty());
    }
}

TEST_SUITE_END();
