#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nichegraph/kernel.hpp"
#include "nichegraph/tournament.hpp"

namespace niche {

inline constexpr std::size_t kEnumerationMaxBits = 24;
inline constexpr std::size_t kCensusMaxBits = 20;
inline constexpr std::size_t kCrossCheckMaxVertices = 7;

/// Orientation indexing: bit k of the index orients the k-th cross pair in
/// row-major (left i, right j) order, k = i * n + j, over the sorted side
/// orders; a set bit points the arc left -> right.
struct OrientationIndex {
    std::size_t left = 0, right = 0;
    std::uint64_t index = 0;
};

BipartiteTournament tournament_from_index(std::size_t m, std::size_t n, std::uint64_t index);
BipartiteTournament tournament_from_index(const OrientationIndex& oi);

// all 2^(m*n) orientations in index order
void enumerate_orientations(std::size_t m, std::size_t n,
                            const std::function<void(const BipartiteTournament&,
                                                     std::uint64_t)>& visit);

/// Counts, per isomorphism class of niche graph, how many orientations of
/// K_{m,n} produce it. Counts always sum to 2^(m*n).
struct RealizabilityCensus {
    std::size_t left = 0, right = 0;
    std::map<std::string, std::uint64_t> counts;  // canonical code bytes -> count

    std::string to_csv() const;  // code_hex,count,m,n lines
};

RealizabilityCensus census(std::size_t m, std::size_t n, unsigned jobs = 1);

/// Result of comparing the recognizer against exhaustive enumeration over
/// every graph on up to max_vertices vertices.
struct CrossCheckReport {
    std::size_t max_vertices = 0;
    std::uint64_t classes = 0;             // isomorphism classes examined
    std::uint64_t realizable_classes = 0;  // classes some orientation produces
    std::vector<std::string> mismatches;   // description per disagreement

    std::string to_text() const;
};

CrossCheckReport cross_check(std::size_t max_vertices, unsigned jobs = 1);

// orientation drawn from the SplitMix64 stream seeded as given: the k-th
// cross pair in row-major order takes the low bit of the k-th draw
BipartiteTournament random_tournament(std::size_t m, std::size_t n, std::uint64_t seed);

}  // namespace niche
