#include <doctest.h>

#include <algorithm>
#include <set>

#include "nichegraph/kernel.hpp"
#include "nichegraph/niche.hpp"
#include "nichegraph/oracle.hpp"
#include "nichegraph/recognize.hpp"
#include "oracles.hpp"

using namespace niche;
using oracles::letters;

namespace {

Graph named_complete(const std::string& prefix, int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return Graph::complete(names);
}

Graph named_path(const std::string& prefix, int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return Graph::path(names);
}

Graph named_cycle(const std::string& prefix, int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return Graph::cycle(names);
}

}  // namespace

TEST_SUITE_BEGIN("recognize");

TEST_CASE("component-count gates") {
    CHECK(recognize(Graph({}, {})).reason == Reason::TooFewComponents);
    CHECK(recognize(Graph::complete(letters(3))).reason == Reason::TooFewComponents);

    Graph five = named_complete("a", 1);
    for (char c : {'b', 'c', 'd', 'e'}) five = disjoint_union(five, named_complete(std::string(1, c), 1));
    auto cert = recognize(five);
    CHECK(cert.decision == Decision::No);
    CHECK(cert.reason == Reason::TooManyComponents);
}

TEST_CASE("three or four components need complete pieces") {
    Graph g = disjoint_union(disjoint_union(named_complete("a", 3), named_complete("b", 5)),
                             named_complete("c", 2));
    auto cert = recognize(g);
    CHECK(cert.decision == Decision::Yes);
    CHECK(cert.reason == Reason::OkThreeFour);
    REQUIRE(cert.side_of_component.size() == 3);
    // three components: the two smallest share side 1
    CHECK(cert.side_of_component == std::vector<int>{1, 2, 1});

    Graph bad = disjoint_union(disjoint_union(named_complete("a", 3), named_path("b", 3)),
                               named_complete("c", 2));
    CHECK(recognize(bad).reason == Reason::NonCompleteComponent);

    Graph four = disjoint_union(g, named_complete("d", 4));
    auto c4 = recognize(four);
    CHECK(c4.decision == Decision::Yes);
    // four components: the two largest share side 1
    CHECK(c4.side_of_component == std::vector<int>{2, 1, 2, 1});

    // edgeless n-vertex graphs: four K1s realizable, five are not
    CHECK(recognize(Graph(letters(4), {})).decision == Decision::Yes);
    CHECK(recognize(Graph(letters(5), {})).decision == Decision::No);
}

TEST_CASE("two components: known path, cycle and clique pairs") {
    auto p3p2 = recognize(disjoint_union(named_path("a", 3), named_path("b", 2)));
    CHECK(p3p2.decision == Decision::Yes);
    CHECK(p3p2.reason == Reason::OkTwo);
    REQUIRE(p3p2.params.has_value());
    CHECK(*p3p2.params == std::array<int, 4>{1, 1, 0, 2});

    auto p3k1 = recognize(disjoint_union(named_path("a", 3), named_complete("b", 1)));
    CHECK(p3k1.decision == Decision::No);
    CHECK(p3k1.reason == Reason::InequalityInfeasible);

    auto c4c4 = recognize(disjoint_union(named_cycle("a", 4), named_cycle("b", 4)));
    CHECK(c4c4.decision == Decision::Yes);
    REQUIRE(c4c4.params.has_value());
    CHECK(*c4c4.params == std::array<int, 4>{2, 0, 2, 0});

    auto c5k3 = recognize(disjoint_union(named_cycle("a", 5), named_complete("b", 3)));
    CHECK(c5k3.decision == Decision::No);
    CHECK(c5k3.reason == Reason::BadCondensationShape);

    auto p4k7 = recognize(disjoint_union(named_path("a", 4), named_complete("b", 7)));
    CHECK(p4k7.decision == Decision::No);
    CHECK(p4k7.reason == Reason::BadCondensationShape);
}

TEST_CASE("feasible pairs") {
    auto k4 = expansion_profile(named_complete("a", 4));
    REQUIRE(k4.has_value());
    auto pairs = feasible_pairs(*k4, *k4);
    // independent scan of the two inequalities over b1, b2 in [1, 4]
    std::vector<std::pair<int, int>> want;
    for (int b1 = 1; b1 <= 4; ++b1)
        for (int b2 = 1; b2 <= 4; ++b2)
            if (b1 <= (1 << (b2 - 1)) && b2 <= (1 << (b1 - 1))) want.emplace_back(b1, b2);
    CHECK(pairs == want);
    CHECK(std::find(pairs.begin(), pairs.end(), std::make_pair(1, 1)) != pairs.end());

    auto c4 = expansion_profile(named_cycle("a", 4));
    auto k1 = expansion_profile(named_complete("a", 1));
    REQUIRE((c4 && k1));
    CHECK(feasible_pairs(*c4, *k1).empty());
    CHECK(feasible_pairs(*k1, *k1) == std::vector<std::pair<int, int>>{{1, 1}});
}

TEST_CASE("path pair table") {
    std::set<std::pair<int, int>> yes;
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n)
            if (recognize(disjoint_union(named_path("a", m), named_path("b", n))).decision ==
                Decision::Yes)
                yes.insert({m, n});
    std::set<std::pair<int, int>> want{{1, 1}, {1, 2}, {2, 1}, {2, 2},
                                       {2, 3}, {3, 2}, {3, 3}};
    CHECK(yes == want);
}

TEST_CASE("cycle pair table") {
    std::set<std::pair<int, int>> yes;
    for (int m = 3; m <= 6; ++m)
        for (int n = 3; n <= 6; ++n)
            if (recognize(disjoint_union(named_cycle("a", m), named_cycle("b", n))).decision ==
                Decision::Yes)
                yes.insert({m, n});
    std::set<std::pair<int, int>> want{{3, 3}, {3, 4}, {4, 3}, {4, 4}};
    CHECK(yes == want);
}

TEST_CASE("soundness: every niche graph is recognized") {
    SplitMix64 rng(43);
    for (int it = 0; it < 300; ++it) {
        auto d = random_tournament(1 + rng.below(8), 1 + rng.below(8), rng.next());
        Graph g = niche_graph(d);
        auto cert = recognize(g);
        CHECK(cert.decision == Decision::Yes);
        CHECK(certificate_is_consistent(g, cert));
    }
}

TEST_CASE("relabeling and component order do not change the decision") {
    SplitMix64 rng(47);
    for (int it = 0; it < 60; ++it) {
        Graph g1 = oracles::random_connected_graph(2 + rng.below(4), rng, "a", false);
        Graph g2 = oracles::random_connected_graph(2 + rng.below(4), rng, "b", false);
        Graph g = disjoint_union(g1, g2);
        auto base = recognize(g);

        Graph shuffled = oracles::shuffled_labels(g, rng, "z");
        CHECK(recognize(shuffled).decision == base.decision);
        CHECK(recognize(shuffled).reason == base.reason);

        // swap which component carries the smaller ids
        std::map<std::string, std::string> swap_names;
        for (const auto& n : g1.names()) swap_names[n] = "b" + n.substr(1) + "x";
        for (const auto& n : g2.names()) swap_names[n] = "a" + n.substr(1) + "x";
        Graph swapped = oracles::relabel(g, swap_names);
        CHECK(recognize(swapped).decision == base.decision);
    }
}

TEST_CASE("yes certificates satisfy their own arithmetic") {
    SplitMix64 rng(51);
    int seen = 0;
    for (int it = 0; it < 200 && seen < 60; ++it) {
        auto d = random_tournament(1 + rng.below(6), 1 + rng.below(6), rng.next());
        Graph g = niche_graph(d);
        auto cert = recognize(g);
        if (cert.decision != Decision::Yes || !cert.params) continue;
        ++seen;
        const auto& p = *cert.params;
        int s1 = p[0] + p[1], s2 = p[2] + p[3];
        CHECK(s1 >= 1);
        CHECK(s2 >= 1);
        CHECK(s1 <= (1 << (s2 - 1)));
        CHECK(s2 <= (1 << (s1 - 1)));
        CHECK(2 * p[0] + p[1] <= static_cast<int>(cert.components[0].size()));
        CHECK(2 * p[2] + p[3] <= static_cast<int>(cert.components[1].size()));
    }
    CHECK(seen > 0);
}

TEST_CASE("params take the least feasible choice") {
    // reversed component order: the first profile must raise b to 2 before
    // any pair satisfies both inequalities
    Graph g = disjoint_union(named_path("a", 2), named_path("b", 3));
    auto cert = recognize(g);
    REQUIRE(cert.params.has_value());
    CHECK(*cert.params == std::array<int, 4>{0, 2, 1, 1});

    // a one-vertex partner forces the singleton split on both sides
    Graph h = disjoint_union(named_complete("a", 4), named_complete("b", 1));
    auto c2 = recognize(h);
    REQUIRE(c2.params.has_value());
    CHECK(*c2.params == std::array<int, 4>{0, 1, 0, 1});
}

TEST_SUITE_END();
