#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nichegraph/graph.hpp"
#include "nichegraph/report.hpp"
#include "nichegraph/tournament.hpp"

namespace niche {

/// Classes of the equal-out-neighborhood equivalence. Every class lies
/// wholly inside one side.
struct EquivPartition {
    std::vector<std::vector<std::string>> classes;  // each sorted; ordered by first member
    std::vector<Side> side_of_class;

    // index of the class containing the vertex
    std::size_t class_of(const std::string& name) const;
};

/// All unordered same-side pairs {u, v} with N+(u) = N-(v).
struct RPairing {
    std::vector<std::pair<std::string, std::string>> pairs;  // first < second, sorted
    std::vector<std::string> unpaired;                       // vertices in no pair
};

// Same vertex ids as the tournament; an edge joins two vertices sharing a
// common out-neighbor or a common in-neighbor.
Graph niche_graph(const BipartiteTournament& d);

EquivPartition equiv_partition(const BipartiteTournament& d);
RPairing r_pairing(const BipartiteTournament& d);

// Checks the structural laws tying the two relations to the niche graph:
//   no-cross-edges        no edges between the two sides
//   nonadjacency-is-r     same-side non-adjacency holds exactly for R-pairs
//   r-transitive-class    u R v, v R w forces [u] = [w] and the edge uw
//   equiv-homogeneous     equivalent vertices are adjacent and homogeneous
// All violations are collected, not just the first.
LawReport verify_relation_laws(const BipartiteTournament& d);

}  // namespace niche
