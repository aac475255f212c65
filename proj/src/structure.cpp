#include "nichegraph/structure.hpp"

#include <algorithm>

#include "nichegraph/errors.hpp"
#include "nichegraph/kernel.hpp"

namespace niche {

CriticalCliquePartition critical_cliques(const Graph& g) {
    std::map<Bitset, std::vector<std::string>> groups;
    for (std::size_t i = 0; i < g.size(); ++i)
        groups[g.closed_row(i)].push_back(g.name(i));
    CriticalCliquePartition p;
    for (auto& [key, members] : groups) p.cliques.push_back(std::move(members));
    std::sort(p.cliques.begin(), p.cliques.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return p;
}

Condensation condensation(const Graph& g) {
    auto parts = critical_cliques(g);
    Condensation c;
    std::vector<std::string> reps;
    for (const auto& clique : parts.cliques) {
        reps.push_back(clique.front());
        c.clique_of[clique.front()] = clique;
    }
    c.graph = Graph(reps, {});
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            if (g.adjacent(reps[i], reps[j])) c.graph.add_edge(reps[i], reps[j]);
    return c;
}

std::string default_expansion_name(const std::string& base, int copy, int size) {
    if (size == 1) return base;
    return base + "." + std::to_string(copy + 1);
}

Graph expand(const Graph& h, const std::map<std::string, int>& sizes,
             const ExpansionNamer& namer) {
    std::vector<std::string> verts;
    std::map<std::string, std::vector<std::string>> copies;
    for (const auto& base : h.names()) {
        auto it = sizes.find(base);
        if (it == sizes.end())
            throw InvalidVertexError("no expansion size for vertex " + base);
        if (it->second < 1)
            throw ValidationError("expansion size must be positive for vertex " + base);
        for (int c = 0; c < it->second; ++c) {
            std::string name = namer(base, c, it->second);
            copies[base].push_back(name);
            verts.push_back(name);
        }
    }
    Graph g(verts, {});  // rejects name collisions
    for (const auto& base : h.names())
        for (std::size_t a = 0; a < copies[base].size(); ++a)
            for (std::size_t b = a + 1; b < copies[base].size(); ++b)
                g.add_edge(copies[base][a], copies[base][b]);
    for (const auto& [u, v] : h.edge_list())
        for (const auto& cu : copies[u])
            for (const auto& cv : copies[v]) g.add_edge(cu, cv);
    return g;
}

std::optional<ExpansionProfile> expansion_profile(const Graph& component) {
    if (component.size() == 0) throw DisconnectedError("expansion profile needs a nonempty graph");
    if (components(component).size() != 1)
        throw DisconnectedError("expansion profile needs a connected graph");
    Condensation cond = condensation(component);
    const Graph& q = cond.graph;
    Graph co = complement(q);
    for (std::size_t i = 0; i < co.size(); ++i)
        if (co.degree(i) > 1) return std::nullopt;
    ExpansionProfile p;
    for (const auto& [u, v] : co.edge_list())
        p.pair_parts.emplace_back(cond.clique_of.at(u), cond.clique_of.at(v));
    p.a = static_cast<int>(p.pair_parts.size());
    for (std::size_t i = 0; i < q.size(); ++i)
        if (co.degree(i) == 0) {
            // the condensation has no homogeneous pair, so at most one of
            // its vertices can see all the others
            p.universal_clique = cond.clique_of.at(q.name(i));
            break;
        }
    if (p.universal_clique.empty()) {
        p.b_min = p.b_max = 0;
    } else {
        p.b_min = 1;
        p.b_max = static_cast<int>(p.universal_clique.size());
    }
    return p;
}

}  // namespace niche
