#include <doctest.h>

#include <algorithm>
#include <set>

#include "nichegraph/errors.hpp"
#include "nichegraph/kernel.hpp"
#include "nichegraph/structure.hpp"
#include "oracles.hpp"

using namespace niche;
using oracles::letters;

TEST_SUITE_BEGIN("structure");

TEST_CASE("critical cliques") {
    auto k5 = critical_cliques(Graph::complete(letters(5)));
    REQUIRE(k5.cliques.size() == 1);
    CHECK(k5.cliques[0] == letters(5));

    auto p3 = critical_cliques(Graph::path({"a", "b", "c"}));
    CHECK(p3.cliques.size() == 3);

    // C4 with one vertex doubled: the doubled pair shares its closed
    // neighborhood, everything else stays single
    Graph c4 = Graph::cycle({"a", "b", "c", "d"});
    Graph g = expand(c4, {{"a", 2}, {"b", 1}, {"c", 1}, {"d", 1}});
    auto parts = critical_cliques(g);
    REQUIRE(parts.cliques.size() == 4);
    std::multiset<std::size_t> sizes;
    for (const auto& c : parts.cliques) sizes.insert(c.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 1, 1, 2});

    // partition; within-part pairs adjacent with equal closed neighborhoods
    SplitMix64 rng(23);
    for (int it = 0; it < 30; ++it) {
        Graph r = oracles::random_graph(8, rng, "s");
        auto cc = critical_cliques(r);
        std::vector<std::string> all;
        for (const auto& c : cc.cliques) {
            all.insert(all.end(), c.begin(), c.end());
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j) {
                    CHECK(r.adjacent(c[i], c[j]));
                    CHECK(r.closed_row(r.index_of(c[i])) == r.closed_row(r.index_of(c[j])));
                }
        }
        std::sort(all.begin(), all.end());
        CHECK(all == r.names());
        // cross-part pairs differ somewhere
        for (std::size_t x = 0; x < cc.cliques.size(); ++x)
            for (std::size_t y = x + 1; y < cc.cliques.size(); ++y)
                CHECK(r.closed_row(r.index_of(cc.cliques[x][0])) !=
                      r.closed_row(r.index_of(cc.cliques[y][0])));
    }
}

TEST_CASE("condensation") {
    CHECK(condensation(Graph::complete(letters(6))).graph.size() == 1);
    CHECK(condensation(Graph::cycle({"a", "b", "c", "d"})).graph ==
          Graph::cycle({"a", "b", "c", "d"}));
    CHECK(condensation(Graph::path({"a", "b", "c"})).graph == Graph::path({"a", "b", "c"}));

    SplitMix64 rng(29);
    for (int it = 0; it < 30; ++it) {
        Graph g = oracles::random_graph(8, rng, "t");
        Condensation c = condensation(g);
        // idempotent
        CHECK(condensation(c.graph).graph == c.graph);
        // identifying part of a critical clique first changes nothing:
        // drop a non-representative member of a fat clique
        for (const auto& [rep, clique] : c.clique_of)
            if (clique.size() >= 2) {
                std::vector<std::string> keep;
                for (const auto& n : g.names())
                    if (n != clique.back()) keep.push_back(n);
                CHECK(condensation(induced(g, keep)).graph == c.graph);
                break;
            }
        // round trip: expanding the condensation by the clique sizes gives
        // the original up to labels
        std::map<std::string, int> sizes;
        for (const auto& [rep, clique] : c.clique_of)
            sizes[rep] = static_cast<int>(clique.size());
        CHECK(canonical_code(expand(c.graph, sizes)) == canonical_code(g));
    }
}

TEST_CASE("expand") {
    CHECK(expand(Graph({"a"}, {}), {{"a", 3}}) == Graph::complete({"a.1", "a.2", "a.3"}));
    Graph p3 = Graph::path({"a", "b", "c"});
    CHECK(expand(p3, {{"a", 1}, {"b", 1}, {"c", 1}}) == p3);
    Graph k5 = expand(Graph({"a", "b"}, {{"a", "b"}}), {{"a", 2}, {"b", 3}});
    CHECK(k5.size() == 5);
    CHECK(k5.is_complete());

    CHECK_THROWS_AS(expand(p3, {{"a", 1}, {"b", 0}, {"c", 1}}), ValidationError);
    CHECK_THROWS_AS(expand(p3, {{"a", 1}, {"b", 1}}), InvalidVertexError);
}

TEST_CASE("expansion profile on the named shapes") {
    for (int n = 1; n <= 6; ++n) {
        auto prof = expansion_profile(Graph::complete(letters(n)));
        REQUIRE(prof.has_value());
        CHECK(prof->a == 0);
        CHECK(prof->b_min == 1);
        CHECK(prof->b_max == n);
    }
    auto p3 = expansion_profile(Graph::path({"a", "b", "c"}));
    REQUIRE(p3.has_value());
    CHECK(p3->a == 1);
    CHECK(p3->b_min == 1);
    CHECK(p3->b_max == 1);
    CHECK(p3->universal_clique == std::vector<std::string>{"b"});

    auto c4 = expansion_profile(Graph::cycle({"a", "b", "c", "d"}));
    REQUIRE(c4.has_value());
    CHECK(c4->a == 2);
    CHECK(c4->b_min == 0);
    CHECK(c4->b_max == 0);
    CHECK(c4->universal_clique.empty());

    CHECK(!expansion_profile(Graph::cycle({"a", "b", "c", "d", "e"})).has_value());

    CHECK_THROWS_AS(expansion_profile(Graph({"a", "b"}, {})), DisconnectedError);
    CHECK_THROWS_AS(expansion_profile(Graph({}, {})), DisconnectedError);
}

TEST_CASE("profile matches the brute-force template search") {
    // every connected graph on at most 5 vertices
    auto names = letters(5);
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) slots.emplace_back(i, j);
    std::set<std::string> seen;
    for (unsigned mask = 0; mask < 1024; ++mask) {
        Graph g(names, {});
        for (std::size_t k = 0; k < slots.size(); ++k)
            if ((mask >> k) & 1u) g.add_edge(slots[k].first, slots[k].second);
        if (components(g).size() != 1) continue;
        if (!seen.insert(canonical_code(g).bytes).second) continue;
        auto prof = expansion_profile(g);
        auto want = oracles::brute_expansion_pairs(g);
        if (!prof) {
            CHECK(want.empty());
            continue;
        }
        std::set<std::pair<int, int>> got;
        for (int b = prof->b_min; b <= prof->b_max; ++b) got.insert({prof->a, b});
        CHECK(got == want);
    }
}

TEST_CASE("profile reconstruction matches the component") {
    // for each claimed (a, b) rebuild an expansion and compare shapes
    SplitMix64 rng(37);
    for (int it = 0; it < 40; ++it) {
        int a = static_cast<int>(rng.below(3));
        int b = static_cast<int>(rng.below(3));
        if (a + b == 0 || (a >= 1 && a + b < 2)) continue;
        std::vector<std::string> labels;
        Graph tmpl = oracles::multipartite_template(a, b, &labels);
        std::map<std::string, int> sizes;
        std::size_t total = 0;
        for (const auto& l : labels) {
            sizes[l] = 1 + static_cast<int>(rng.below(3));
            total += sizes[l];
        }
        if (total > 10) continue;
        Graph g = expand(tmpl, sizes);
        if (components(g).size() != 1) continue;
        auto prof = expansion_profile(g);
        REQUIRE(prof.has_value());
        CHECK(prof->a == a);
        CHECK(prof->b_in_range(b));
        for (int bb = prof->b_min; bb <= prof->b_max; ++bb) {
            std::vector<std::string> labels2;
            Graph t2 = oracles::multipartite_template(prof->a, bb, &labels2);
            std::map<std::string, int> sz;
            std::size_t li = 0;
            for (const auto& pp : prof->pair_parts) {
                sz[labels2[li++]] = static_cast<int>(pp.first.size());
                sz[labels2[li++]] = static_cast<int>(pp.second.size());
            }
            if (bb > 0) {
                int c = static_cast<int>(prof->universal_clique.size());
                sz[labels2[li++]] = c - bb + 1;
                for (int s = 1; s < bb; ++s) sz[labels2[li++]] = 1;
            }
            CHECK(canonical_code(expand(t2, sz)) == canonical_code(g));
        }
    }
}

TEST_SUITE_END();
