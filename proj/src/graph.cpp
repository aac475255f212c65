#include "nichegraph/graph.hpp"

#include <algorithm>

#include "nichegraph/errors.hpp"

namespace niche {

bool valid_vertex_id(const std::string& name) {
    if (name.empty()) return false;
    for (unsigned char c : name) {
        if (c == '-' || c == '>' || c == '#') return false;
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') return false;
    }
    return true;
}

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(vertices)) {
    for (const auto& n : names_)
        if (!valid_vertex_id(n)) throw ValidationError("invalid vertex id: '" + n + "'");
    std::sort(names_.begin(), names_.end());
    if (std::adjacent_find(names_.begin(), names_.end()) != names_.end())
        throw ValidationError("duplicate vertex: " +
                              *std::adjacent_find(names_.begin(), names_.end()));
    adj_.assign(names_.size(), Bitset(names_.size()));
    for (const auto& [a, b] : edges) add_edge(a, b);
}

std::optional<std::size_t> Graph::find(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Graph::index_of(const std::string& name) const {
    auto i = find(name);
    if (!i) throw InvalidVertexError("unknown vertex: " + name);
    return *i;
}

bool Graph::adjacent(const std::string& a, const std::string& b) const {
    return has_edge(index_of(a), index_of(b));
}

void Graph::add_edge(std::size_t i, std::size_t j) {
    if (i == j) throw ValidationError("loop edge at vertex " + names_[i]);
    adj_[i].set(j);
    adj_[j].set(i);
}

void Graph::add_edge(const std::string& a, const std::string& b) {
    add_edge(index_of(a), index_of(b));
}

Bitset Graph::closed_row(std::size_t i) const {
    Bitset r = adj_[i];
    r.set(i);
    return r;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : adj_) twice += r.count();
    return twice / 2;
}

std::vector<std::pair<std::string, std::string>> Graph::edge_list() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = adj_[i].next(i + 1); j < size(); j = adj_[i].next(j + 1))
            out.emplace_back(names_[i], names_[j]);
    return out;
}

bool Graph::is_complete() const {
    return edge_count() == size() * (size() - 1) / 2;
}

Graph Graph::complete(std::vector<std::string> vertices) {
    Graph g(std::move(vertices), {});
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) g.add_edge(i, j);
    return g;
}

Graph Graph::path(const std::vector<std::string>& vertices) {
    Graph g(vertices, {});
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) g.add_edge(vertices[i], vertices[i + 1]);
    return g;
}

Graph Graph::cycle(const std::vector<std::string>& vertices) {
    if (vertices.size() < 3) throw ValidationError("cycle needs at least 3 vertices");
    Graph g = path(vertices);
    g.add_edge(vertices.front(), vertices.back());
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::string> verts = a.names();
    verts.insert(verts.end(), b.names().begin(), b.names().end());
    auto edges = a.edge_list();
    auto eb = b.edge_list();
    edges.insert(edges.end(), eb.begin(), eb.end());
    return Graph(std::move(verts), edges);  // ctor rejects shared names
}

}  // namespace niche
