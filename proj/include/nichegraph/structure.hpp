#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nichegraph/graph.hpp"

namespace niche {

/// Partition of the vertices into maximal sets with identical closed
/// neighborhoods; every part is a clique.
struct CriticalCliquePartition {
    std::vector<std::vector<std::string>> cliques;  // each sorted; ordered by first member
};

/// Quotient of a graph by its critical cliques. The representative of a
/// clique is its smallest vertex.
struct Condensation {
    Graph graph;
    std::map<std::string, std::vector<std::string>> clique_of;
};

/// Certificate that a connected graph is an expansion of complete
/// multipartite templates with parts of size at most two.
///
/// `a` counts the rigid size-two parts (non-adjacent critical-clique pairs of
/// the condensation); the number of size-one parts may be any b in
/// [b_min, b_max], obtained by splitting the universal clique.
struct ExpansionProfile {
    int a = 0;
    int b_min = 0;
    int b_max = 0;
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> pair_parts;
    std::vector<std::string> universal_clique;

    bool b_in_range(int b) const { return b >= b_min && b <= b_max; }
};

CriticalCliquePartition critical_cliques(const Graph& g);
Condensation condensation(const Graph& g);

using ExpansionNamer =
    std::function<std::string(const std::string& base, int copy, int size)>;

// base itself for size-one cliques, base.1, base.2, ... otherwise
std::string default_expansion_name(const std::string& base, int copy, int size);

// Replace each vertex of `h` with a clique of the requested size; cliques of
// adjacent template vertices are fully joined.
Graph expand(const Graph& h, const std::map<std::string, int>& sizes,
             const ExpansionNamer& namer = default_expansion_name);

// std::nullopt when the condensation is not complete multipartite with parts
// of size at most two (test: its complement has maximum degree over one).
std::optional<ExpansionProfile> expansion_profile(const Graph& component);

}  // namespace niche
