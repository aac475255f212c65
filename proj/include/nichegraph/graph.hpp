#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nichegraph/bitset.hpp"

namespace niche {

// Vertex ids are nonempty tokens without whitespace or the reserved
// characters '-', '>', '#'.
bool valid_vertex_id(const std::string& name);

/// Simple undirected graph over string vertex ids. Vertices are kept in
/// ascending id order, so index-based results are deterministic.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> vertices,
          const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }

    std::optional<std::size_t> find(const std::string& name) const;
    std::size_t index_of(const std::string& name) const;  // throws InvalidVertexError

    bool has_edge(std::size_t i, std::size_t j) const { return adj_[i].test(j); }
    bool adjacent(const std::string& a, const std::string& b) const;
    void add_edge(std::size_t i, std::size_t j);
    void add_edge(const std::string& a, const std::string& b);

    const Bitset& row(std::size_t i) const { return adj_[i]; }
    Bitset closed_row(std::size_t i) const;  // row with the self bit set
    std::size_t degree(std::size_t i) const { return adj_[i].count(); }
    std::size_t edge_count() const;
    std::vector<std::pair<std::string, std::string>> edge_list() const;
    bool is_complete() const;

    friend bool operator==(const Graph&, const Graph&) = default;

    static Graph complete(std::vector<std::string> vertices);
    // edges follow the given vertex order
    static Graph path(const std::vector<std::string>& vertices);
    static Graph cycle(const std::vector<std::string>& vertices);

private:
    std::vector<std::string> names_;
    std::vector<Bitset> adj_;
};

// union of two graphs with disjoint vertex sets
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace niche
