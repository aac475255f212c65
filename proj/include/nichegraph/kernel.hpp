#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nichegraph/graph.hpp"

namespace niche {

// Hard bounds of the exact algorithms. Inputs over a bound raise
// SizeLimitError; nothing here approximates.
inline constexpr std::size_t kCanonicalCodeMaxVertices = 10;
inline constexpr std::size_t kCliqueMaxVertices = 32;
inline constexpr std::size_t kMatchingMaxVertices = 24;
inline constexpr std::size_t kHamiltonMaxVertices = 22;
inline constexpr std::size_t kHoleSearchMaxVertices = 16;
inline constexpr std::size_t kAsteroidalMaxVertices = 16;

/// Deterministic byte string with: equal codes <=> isomorphic graphs.
/// Layout: [n][k components][per component: n_i + packed min bitstring],
/// components sorted by code bytes.
struct CanonicalCode {
    std::string bytes;
    std::string hex() const;
    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

// Connected components as sorted vertex-name sets, ordered by smallest member.
std::vector<std::vector<std::string>> components(const Graph& g);

Graph induced(const Graph& g, const std::vector<std::string>& s);
Graph complement(const Graph& g);

CanonicalCode canonical_code(const Graph& g,
                             std::size_t max_vertices = kCanonicalCodeMaxVertices);

std::size_t clique_number(const Graph& g);

std::size_t max_matching_size(const Graph& g);

std::optional<std::vector<std::string>> hamiltonian_path(const Graph& g);
// cycles need >= 3 vertices; the witness lists each vertex once
std::optional<std::vector<std::string>> hamiltonian_cycle(const Graph& g);

// Shortest induced cycle of length >= k (k >= 4), as a closed walk's vertex
// sequence starting at its smallest vertex. The odd variant restricts to odd
// lengths.
std::optional<std::vector<std::string>> shortest_long_hole(const Graph& g, std::size_t k);
std::optional<std::vector<std::string>> shortest_long_odd_hole(const Graph& g, std::size_t k);

bool is_chordal(const Graph& g);
bool has_asteroidal_triple(const Graph& g);
bool is_interval(const Graph& g);

bool has_independent_triple(const Graph& g);
bool contains_induced_p4(const Graph& g);
bool contains_claw(const Graph& g);

// witness-returning variants backing the booleans above
std::optional<std::vector<std::string>> find_independent_triple(const Graph& g);
std::optional<std::vector<std::string>> find_induced_p4(const Graph& g);
std::optional<std::vector<std::string>> find_claw(const Graph& g);
std::optional<std::vector<std::string>> find_asteroidal_triple(const Graph& g);

std::size_t component_diameter(const Graph& g, const std::vector<std::string>& c);
bool is_two_connected(const Graph& g);

}  // namespace niche
