#include "nichegraph/kernel.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>

#include "nichegraph/errors.hpp"

namespace niche {

namespace {

std::vector<std::uint32_t> small_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (i != j && g.has_edge(i, j)) adj[i] |= std::uint32_t{1} << j;
    return adj;
}

std::vector<std::string> to_names(const Graph& g, const std::vector<std::size_t>& idx) {
    std::vector<std::string> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(g.name(i));
    return out;
}

}  // namespace

std::vector<std::vector<std::string>> components(const Graph& g) {
    std::vector<std::vector<std::string>> out;
    std::vector<char> seen(g.size(), 0);
    for (std::size_t seed = 0; seed < g.size(); ++seed) {
        if (seen[seed]) continue;
        std::vector<std::size_t> comp;
        std::queue<std::size_t> q;
        q.push(seed);
        seen[seed] = 1;
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop();
            comp.push_back(v);
            const Bitset& row = g.row(v);
            for (std::size_t w = row.next(0); w < g.size(); w = row.next(w + 1)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(to_names(g, comp));
    }
    return out;
}

Graph induced(const Graph& g, const std::vector<std::string>& s) {
    std::vector<std::size_t> idx;
    idx.reserve(s.size());
    for (const auto& name : s) idx.push_back(g.index_of(name));
    Graph h(s, {});
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (g.has_edge(idx[a], idx[b])) h.add_edge(s[a], s[b]);
    return h;
}

Graph complement(const Graph& g) {
    Graph h(g.names(), {});
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!g.has_edge(i, j)) h.add_edge(i, j);
    return h;
}

namespace {

// Iterated neighborhood refinement. Colors are ranked by label-independent
// signatures, so the classes and their order are isomorphism-invariant.
std::vector<int> refine_colors(int k, const std::vector<std::uint16_t>& adj) {
    std::vector<int> color(k, 0);
    {
        std::vector<int> deg(k), uniq;
        for (int v = 0; v < k; ++v) deg[v] = std::popcount(adj[v]);
        uniq = deg;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < k; ++v)
            color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), deg[v]) -
                                        uniq.begin());
    }
    int classes = 0;
    for (int round = 0; round < k; ++round) {
        std::vector<std::vector<int>> sig(k);
        for (int v = 0; v < k; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> nc;
            for (int u = 0; u < k; ++u)
                if ((adj[v] >> u) & 1) nc.push_back(color[u]);
            std::sort(nc.begin(), nc.end());
            sig[v].insert(sig[v].end(), nc.begin(), nc.end());
        }
        std::vector<std::vector<int>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < k; ++v)
            color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) -
                                        uniq.begin());
        int now = static_cast<int>(uniq.size());
        if (now == classes) break;
        classes = now;
    }
    return color;
}

// Minimum column-major upper-triangle adjacency bitstring over all vertex
// orders compatible with the refinement colors, found by prefix-pruned search.
struct ComponentCanon {
    int k;
    const std::vector<std::uint16_t>& adj;
    std::vector<int> color;
    std::vector<int> required;  // color demanded at each position
    int total_bits;
    std::uint64_t best = ~std::uint64_t{0};
    std::array<int, kCanonicalCodeMaxVertices> placed{};
    std::uint16_t used = 0;

    ComponentCanon(int k_, const std::vector<std::uint16_t>& adj_)
        : k(k_), adj(adj_), color(refine_colors(k_, adj_)) {
        required = color;
        std::sort(required.begin(), required.end());
        total_bits = k * (k - 1) / 2;
    }

    void search(int pos, std::uint64_t acc, int acc_bits) {
        if (pos == k) {
            if (acc < best) best = acc;
            return;
        }
        for (int v = 0; v < k; ++v) {
            if ((used >> v) & 1) continue;
            if (color[v] != required[pos]) continue;
            std::uint64_t bits = 0;
            for (int i = 0; i < pos; ++i) bits = (bits << 1) | ((adj[v] >> placed[i]) & 1u);
            std::uint64_t acc2 = (acc << pos) | bits;
            int len2 = acc_bits + pos;
            if (best != ~std::uint64_t{0} && acc2 > (best >> (total_bits - len2))) continue;
            used |= std::uint16_t{1} << v;
            placed[pos] = v;
            search(pos + 1, acc2, len2);
            used &= ~(std::uint16_t{1} << v);
        }
    }

    std::string run() {
        search(0, 0, 0);
        std::string out;
        out.push_back(static_cast<char>(k));
        int nbytes = (total_bits + 7) / 8;
        for (int byte = 0; byte < nbytes; ++byte) {
            unsigned b = 0;
            for (int bit = 0; bit < 8; ++bit) {
                int i = byte * 8 + bit;  // i-th bit of the string, MSB first
                if (i < total_bits && ((best >> (total_bits - 1 - i)) & 1)) b |= 0x80u >> bit;
            }
            out.push_back(static_cast<char>(b));
        }
        return out;
    }
};

}  // namespace

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

CanonicalCode canonical_code(const Graph& g, std::size_t max_vertices) {
    if (g.size() > max_vertices || g.size() > kCanonicalCodeMaxVertices)
        throw SizeLimitError("canonical code limited to " +
                             std::to_string(std::min(max_vertices, kCanonicalCodeMaxVertices)) +
                             " vertices, got " + std::to_string(g.size()));
    std::vector<std::string> comp_codes;
    for (const auto& comp : components(g)) {
        Graph h = induced(g, comp);
        int k = static_cast<int>(h.size());
        std::vector<std::uint16_t> adj(k, 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (i != j && h.has_edge(i, j)) adj[i] |= std::uint16_t{1} << j;
        ComponentCanon canon(k, adj);
        comp_codes.push_back(canon.run());
    }
    std::sort(comp_codes.begin(), comp_codes.end());
    std::string bytes;
    bytes.push_back(static_cast<char>(g.size()));
    bytes.push_back(static_cast<char>(comp_codes.size()));
    for (const auto& c : comp_codes) bytes += c;
    return CanonicalCode{bytes};
}

namespace {

struct CliqueSearch {
    const std::vector<std::uint32_t>& adj;
    std::size_t best = 0;

    void grow(std::uint32_t cand, std::size_t size) {
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        while (cand) {
            if (size + static_cast<std::size_t>(std::popcount(cand)) <= best) return;
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            grow(cand & adj[v], size + 1);
        }
        best = std::max(best, size);
    }
};

}  // namespace

std::size_t clique_number(const Graph& g) {
    if (g.size() > kCliqueMaxVertices)
        throw SizeLimitError("clique number limited to " +
                             std::to_string(kCliqueMaxVertices) + " vertices");
    if (g.size() == 0) return 0;
    auto adj = small_masks(g);
    CliqueSearch s{adj};
    std::uint32_t full = g.size() == 32 ? ~std::uint32_t{0}
                                        : (std::uint32_t{1} << g.size()) - 1;
    s.grow(full, 0);
    return s.best;
}

namespace {

struct MatchingSearch {
    const std::vector<std::uint32_t>& adj;
    std::size_t best = 0;

    void rec(std::uint32_t active, std::size_t acc) {
        std::uint32_t live = 0;
        for (std::uint32_t m = active; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (adj[v] & active) live |= std::uint32_t{1} << v;
        }
        if (live == 0) {
            best = std::max(best, acc);
            return;
        }
        if (acc + static_cast<std::size_t>(std::popcount(live)) / 2 <= best) return;
        int v = std::countr_zero(live);
        std::uint32_t nb = adj[v] & active;
        std::uint32_t rest = active & ~(std::uint32_t{1} << v);
        if (std::popcount(nb) == 1) {
            // pendant vertex: some maximum matching uses this edge
            rec(rest & ~nb, acc + 1);
            return;
        }
        for (std::uint32_t m = nb; m;) {
            int w = std::countr_zero(m);
            m &= m - 1;
            rec(rest & ~(std::uint32_t{1} << w), acc + 1);
        }
        rec(rest, acc);
    }
};

}  // namespace

std::size_t max_matching_size(const Graph& g) {
    if (g.size() > kMatchingMaxVertices)
        throw SizeLimitError("matching limited to " + std::to_string(kMatchingMaxVertices) +
                             " vertices");
    if (g.size() == 0) return 0;
    auto adj = small_masks(g);
    MatchingSearch s{adj};
    std::uint32_t full = (std::uint32_t{1} << g.size()) - 1;
    s.rec(full, 0);
    return s.best;
}

namespace {

std::optional<std::vector<std::size_t>> ham_order(const Graph& g, bool cycle) {
    std::size_t n = g.size();
    if (n > kHamiltonMaxVertices)
        throw SizeLimitError("hamilton search limited to " +
                             std::to_string(kHamiltonMaxVertices) + " vertices");
    if (cycle && n < 3) return std::nullopt;
    if (n == 0) return std::nullopt;
    if (n == 1) return std::vector<std::size_t>{0};
    auto adj = small_masks(g);
    std::uint32_t full = (std::uint32_t{1} << n) - 1;
    // dp[mask] = possible end vertices of a path covering exactly mask
    std::vector<std::uint32_t> dp(std::size_t{1} << n, 0);
    if (cycle) {
        dp[1] = 1;
    } else {
        for (std::size_t v = 0; v < n; ++v) dp[std::uint32_t{1} << v] = std::uint32_t{1} << v;
    }
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t ends = dp[mask];
        while (ends) {
            int v = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t ext = adj[v] & ~mask;
            while (ext) {
                int u = std::countr_zero(ext);
                ext &= ext - 1;
                dp[mask | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
            }
        }
    }
    std::uint32_t goal = cycle ? (dp[full] & adj[0]) : dp[full];
    if (goal == 0) return std::nullopt;
    std::vector<std::size_t> seq;
    std::uint32_t mask = full;
    int v = std::countr_zero(goal);
    while (true) {
        seq.push_back(static_cast<std::size_t>(v));
        std::uint32_t rest = mask & ~(std::uint32_t{1} << v);
        if (rest == 0) break;
        std::uint32_t prev = dp[rest] & adj[v];
        v = std::countr_zero(prev);
        mask = rest;
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
}

}  // namespace

std::optional<std::vector<std::string>> hamiltonian_path(const Graph& g) {
    auto seq = ham_order(g, false);
    if (!seq) return std::nullopt;
    return to_names(g, *seq);
}

std::optional<std::vector<std::string>> hamiltonian_cycle(const Graph& g) {
    auto seq = ham_order(g, true);
    if (!seq) return std::nullopt;
    return to_names(g, *seq);
}

namespace {

// Anchored search over induced paths. A cycle is reported through its
// smallest vertex with the second vertex below the closing one, so each hole
// is visited once; only strictly shorter holes replace the incumbent.
struct HoleSearch {
    std::size_t n;
    const std::vector<std::uint32_t>& adj;
    std::size_t min_len;
    bool odd_only;
    std::size_t target;  // smallest admissible length: search stops when hit
    std::size_t best_len = std::numeric_limits<std::size_t>::max();
    std::vector<int> best, path;
    std::uint32_t path_mask = 0;
    bool done = false;

    HoleSearch(std::size_t n_, const std::vector<std::uint32_t>& adj_, std::size_t k,
               bool odd)
        : n(n_), adj(adj_), min_len(k), odd_only(odd) {
        target = std::max<std::size_t>(k, 4);
        if (odd_only && target % 2 == 0) ++target;
    }

    void extend(std::uint32_t above) {
        if (done) return;
        int a = path.front();
        int last = path.back();
        std::uint32_t cand = adj[last] & above & ~path_mask;
        while (cand && !done) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            std::uint32_t mid =
                path_mask & ~(std::uint32_t{1} << a) & ~(std::uint32_t{1} << last);
            if (adj[v] & mid) continue;  // chord into the path interior
            if ((adj[v] >> a) & 1) {
                std::size_t len = path.size() + 1;
                if (len >= min_len && len >= 4 && (!odd_only || len % 2 == 1) &&
                    path[1] < v && len < best_len) {
                    best = path;
                    best.push_back(v);
                    best_len = len;
                    if (best_len == target) done = true;
                }
                continue;  // adjacent to the anchor: can only close, never extend
            }
            if (path.size() + 2 >= best_len) continue;
            path.push_back(v);
            path_mask |= std::uint32_t{1} << v;
            extend(above);
            path.pop_back();
            path_mask &= ~(std::uint32_t{1} << v);
        }
    }

    std::optional<std::vector<int>> run() {
        for (std::size_t a = 0; a < n && !done; ++a) {
            std::uint32_t above = a + 1 >= n ? 0 : ~((std::uint32_t{2} << a) - 1);
            if (n < 32) above &= (std::uint32_t{1} << n) - 1;
            std::uint32_t firsts = adj[a] & above;
            while (firsts && !done) {
                int b = std::countr_zero(firsts);
                firsts &= firsts - 1;
                path = {static_cast<int>(a), b};
                path_mask = (std::uint32_t{1} << a) | (std::uint32_t{1} << b);
                extend(above);
            }
        }
        if (best.empty()) return std::nullopt;
        return best;
    }
};

std::optional<std::vector<std::string>> find_hole(const Graph& g, std::size_t k,
                                                  bool odd_only) {
    if (k < 4) throw ValidationError("hole length bound must be at least 4");
    if (g.size() > kHoleSearchMaxVertices)
        throw SizeLimitError("hole search limited to " +
                             std::to_string(kHoleSearchMaxVertices) + " vertices");
    if (g.size() < 4) return std::nullopt;
    auto adj = small_masks(g);
    HoleSearch s(g.size(), adj, k, odd_only);
    auto cyc = s.run();
    if (!cyc) return std::nullopt;
    std::vector<std::size_t> idx(cyc->begin(), cyc->end());
    return to_names(g, idx);
}

}  // namespace

std::optional<std::vector<std::string>> shortest_long_hole(const Graph& g, std::size_t k) {
    return find_hole(g, k, false);
}

std::optional<std::vector<std::string>> shortest_long_odd_hole(const Graph& g,
                                                               std::size_t k) {
    return find_hole(g, k, true);
}

bool is_chordal(const Graph& g) {
    std::size_t n = g.size();
    if (n <= 2) return true;
    // maximum cardinality search; first pick lands at the highest position
    std::vector<std::size_t> weight(n, 0), order(n, 0), pos(n, 0);
    std::vector<char> placed(n, 0);
    for (std::size_t p = n; p-- > 0;) {
        std::size_t v = n;
        for (std::size_t u = 0; u < n; ++u)
            if (!placed[u] && (v == n || weight[u] > weight[v])) v = u;
        placed[v] = 1;
        order[p] = v;
        pos[v] = p;
        const Bitset& row = g.row(v);
        for (std::size_t w = row.next(0); w < n; w = row.next(w + 1))
            if (!placed[w]) ++weight[w];
    }
    // perfect elimination check: later neighbors minus the parent must be
    // neighbors of the parent
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t parent = n;
        const Bitset& row = g.row(v);
        for (std::size_t w = row.next(0); w < n; w = row.next(w + 1))
            if (pos[w] > pos[v] && (parent == n || pos[w] < pos[parent])) parent = w;
        if (parent == n) continue;
        for (std::size_t w = row.next(0); w < n; w = row.next(w + 1))
            if (w != parent && pos[w] > pos[v] && !g.has_edge(parent, w)) return false;
    }
    return true;
}

std::optional<std::vector<std::string>> find_asteroidal_triple(const Graph& g) {
    std::size_t n = g.size();
    if (n > kAsteroidalMaxVertices)
        throw SizeLimitError("asteroidal triple search limited to " +
                             std::to_string(kAsteroidalMaxVertices) + " vertices");
    if (n < 3) return std::nullopt;
    auto adj = small_masks(g);
    // comp_without[w][v]: component id of v in the graph minus N[w]
    std::vector<std::vector<int>> comp_without(n, std::vector<int>(n, -1));
    for (std::size_t w = 0; w < n; ++w) {
        std::uint32_t allowed = ~(adj[w] | (std::uint32_t{1} << w));
        allowed &= (n == 32) ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
        int label = 0;
        std::uint32_t left = allowed;
        while (left) {
            std::uint32_t frontier = left & (~left + 1);
            std::uint32_t comp = 0;
            while (frontier) {
                comp |= frontier;
                std::uint32_t grow = 0;
                std::uint32_t m = frontier;
                while (m) {
                    int v = std::countr_zero(m);
                    m &= m - 1;
                    grow |= adj[v] & allowed & ~comp;
                }
                frontier = grow;
            }
            std::uint32_t m = comp;
            while (m) {
                int v = std::countr_zero(m);
                m &= m - 1;
                comp_without[w][v] = label;
            }
            ++label;
            left &= ~comp;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (g.has_edge(i, j)) continue;
            for (std::size_t k = j + 1; k < n; ++k) {
                if (g.has_edge(i, k) || g.has_edge(j, k)) continue;
                bool ij = comp_without[k][i] == comp_without[k][j];
                bool ik = comp_without[j][i] == comp_without[j][k];
                bool jk = comp_without[i][j] == comp_without[i][k];
                if (ij && ik && jk)
                    return std::vector<std::string>{g.name(i), g.name(j), g.name(k)};
            }
        }
    return std::nullopt;
}

bool has_asteroidal_triple(const Graph& g) { return find_asteroidal_triple(g).has_value(); }

bool is_interval(const Graph& g) { return is_chordal(g) && !has_asteroidal_triple(g); }

std::optional<std::vector<std::string>> find_independent_triple(const Graph& g) {
    std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (g.has_edge(i, j)) continue;
            for (std::size_t k = j + 1; k < n; ++k)
                if (!g.has_edge(i, k) && !g.has_edge(j, k))
                    return std::vector<std::string>{g.name(i), g.name(j), g.name(k)};
        }
    return std::nullopt;
}

bool has_independent_triple(const Graph& g) { return find_independent_triple(g).has_value(); }

std::optional<std::vector<std::string>> find_induced_p4(const Graph& g) {
    std::size_t n = g.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    std::array<std::size_t, 4> vs{a, b, c, d};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.has_edge(vs[i], vs[j])) {
                                ++deg[i];
                                ++deg[j];
                                ++edges;
                            }
                    if (edges != 3) continue;
                    int ones = 0, twos = 0;
                    for (int i = 0; i < 4; ++i) {
                        if (deg[i] == 1) ++ones;
                        if (deg[i] == 2) ++twos;
                    }
                    if (ones != 2 || twos != 2) continue;
                    // order the witness along the path
                    std::size_t e1 = 0;
                    for (int i = 0; i < 4; ++i)
                        if (deg[i] == 1) {
                            e1 = vs[i];
                            break;
                        }
                    std::vector<std::size_t> seq{e1};
                    while (seq.size() < 4) {
                        for (std::size_t v : vs)
                            if (v != seq.back() && g.has_edge(seq.back(), v) &&
                                std::find(seq.begin(), seq.end(), v) == seq.end() &&
                                (seq.size() < 2 || !g.has_edge(seq[seq.size() - 2], v))) {
                                seq.push_back(v);
                                break;
                            }
                    }
                    return to_names(g, seq);
                }
    return std::nullopt;
}

bool contains_induced_p4(const Graph& g) { return find_induced_p4(g).has_value(); }

std::optional<std::vector<std::string>> find_claw(const Graph& g) {
    std::size_t n = g.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::size_t> nb;
        const Bitset& row = g.row(c);
        for (std::size_t w = row.next(0); w < n; w = row.next(w + 1)) nb.push_back(w);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < nb.size(); ++k)
                    if (!g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k]))
                        return std::vector<std::string>{g.name(c), g.name(nb[i]),
                                                        g.name(nb[j]), g.name(nb[k])};
            }
    }
    return std::nullopt;
}

bool contains_claw(const Graph& g) { return find_claw(g).has_value(); }

std::size_t component_diameter(const Graph& g, const std::vector<std::string>& c) {
    auto comps = components(g);
    std::vector<std::string> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::find(comps.begin(), comps.end(), sorted) == comps.end())
        throw NotAComponentError("vertex set is not a component of the graph");
    std::size_t diameter = 0;
    for (const auto& start : sorted) {
        std::vector<std::size_t> dist(g.size(), g.size());
        std::queue<std::size_t> q;
        std::size_t s = g.index_of(start);
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop();
            diameter = std::max(diameter, dist[v]);
            const Bitset& row = g.row(v);
            for (std::size_t w = row.next(0); w < g.size(); w = row.next(w + 1))
                if (dist[w] == g.size()) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
    }
    return diameter;
}

namespace {

bool connected_without(const Graph& g, std::size_t skip) {
    std::size_t n = g.size();
    std::vector<char> seen(n, 1);
    std::size_t want = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (v != skip) {
            seen[v] = 0;
            ++want;
        }
    if (want == 0) return true;
    std::size_t seed = skip == 0 ? 1 : 0;
    std::queue<std::size_t> q;
    q.push(seed);
    seen[seed] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        std::size_t v = q.front();
        q.pop();
        const Bitset& row = g.row(v);
        for (std::size_t w = row.next(0); w < n; w = row.next(w + 1))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == want;
}

}  // namespace

bool is_two_connected(const Graph& g) {
    std::size_t n = g.size();
    if (n < 3) return false;
    if (components(g).size() != 1) return false;
    for (std::size_t v = 0; v < n; ++v)
        if (!connected_without(g, v)) return false;
    return true;
}

}  // namespace niche
