#include "nichegraph/niche.hpp"

#include <algorithm>
#include <map>

#include "nichegraph/errors.hpp"

namespace niche {

std::size_t EquivPartition::class_of(const std::string& name) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (std::binary_search(classes[i].begin(), classes[i].end(), name)) return i;
    throw InvalidVertexError("unknown vertex: " + name);
}

Graph niche_graph(const BipartiteTournament& d) {
    std::vector<std::string> names = d.left();
    names.insert(names.end(), d.right().begin(), d.right().end());
    Graph g(std::move(names), {});
    for (Side side : {Side::Left, Side::Right}) {
        const auto& own = side == Side::Left ? d.left() : d.right();
        std::vector<Bitset> outs, ins;
        for (std::size_t i = 0; i < own.size(); ++i) {
            outs.push_back(d.out_mask(side, i));
            ins.push_back(d.in_mask(side, i));
        }
        for (std::size_t i = 0; i < own.size(); ++i)
            for (std::size_t j = i + 1; j < own.size(); ++j)
                if (outs[i].intersects(outs[j]) || ins[i].intersects(ins[j]))
                    g.add_edge(own[i], own[j]);
    }
    return g;
}

EquivPartition equiv_partition(const BipartiteTournament& d) {
    // key on (side, out-neighborhood); both sides nonempty, so no
    // out-neighborhood is shared across sides anyway
    std::map<std::pair<int, Bitset>, std::vector<std::string>> groups;
    for (std::size_t i = 0; i < d.left_size(); ++i)
        groups[{0, d.out_mask(Side::Left, i)}].push_back(d.left()[i]);
    for (std::size_t i = 0; i < d.right_size(); ++i)
        groups[{1, d.out_mask(Side::Right, i)}].push_back(d.right()[i]);
    std::vector<std::pair<std::vector<std::string>, Side>> classes;
    for (auto& [key, members] : groups) {
        std::sort(members.begin(), members.end());
        classes.emplace_back(std::move(members), key.first == 0 ? Side::Left : Side::Right);
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.first.front() < b.first.front(); });
    EquivPartition p;
    for (auto& [members, side] : classes) {
        p.classes.push_back(std::move(members));
        p.side_of_class.push_back(side);
    }
    return p;
}

RPairing r_pairing(const BipartiteTournament& d) {
    RPairing r;
    std::vector<std::string> in_pair;
    for (Side side : {Side::Left, Side::Right}) {
        const auto& own = side == Side::Left ? d.left() : d.right();
        for (std::size_t i = 0; i < own.size(); ++i)
            for (std::size_t j = i + 1; j < own.size(); ++j)
                if (d.out_mask(side, i) == d.in_mask(side, j)) {
                    r.pairs.emplace_back(own[i], own[j]);
                    in_pair.push_back(own[i]);
                    in_pair.push_back(own[j]);
                }
        for (const auto& v : own)
            if (std::find(in_pair.begin(), in_pair.end(), v) == in_pair.end())
                r.unpaired.push_back(v);
    }
    std::sort(r.pairs.begin(), r.pairs.end());
    std::sort(r.unpaired.begin(), r.unpaired.end());
    return r;
}

LawReport verify_relation_laws(const BipartiteTournament& d) {
    Graph g = niche_graph(d);
    LawReport report;
    auto add = [&report](const std::string& law, std::vector<std::string> violations) {
        LawEntry e;
        e.law = law;
        if (violations.empty()) {
            e.status = LawStatus::Pass;
        } else {
            e.status = LawStatus::Fail;
            std::string detail;
            for (const auto& v : violations) {
                if (!detail.empty()) detail += " ";
                detail += v;
            }
            e.detail = detail;
        }
        report.entries.push_back(std::move(e));
    };

    std::vector<std::string> cross;
    for (const auto& u : d.left())
        for (const auto& v : d.right())
            if (g.adjacent(u, v)) cross.push_back(u + "," + v);
    add("no-cross-edges", std::move(cross));

    auto r_related = [&d](Side side, std::size_t i, std::size_t j) {
        return d.out_mask(side, i) == d.in_mask(side, j);
    };

    std::vector<std::string> law_b, law_c, law_d;
    for (Side side : {Side::Left, Side::Right}) {
        const auto& own = side == Side::Left ? d.left() : d.right();
        for (std::size_t i = 0; i < own.size(); ++i)
            for (std::size_t j = i + 1; j < own.size(); ++j) {
                bool nonadjacent = !g.adjacent(own[i], own[j]);
                if (nonadjacent != r_related(side, i, j))
                    law_b.push_back(own[i] + "," + own[j]);
            }
        // R-partners of each middle vertex v; u R v and v R w pin [u] = [w]
        for (std::size_t m = 0; m < own.size(); ++m) {
            std::vector<std::size_t> partners;
            for (std::size_t i = 0; i < own.size(); ++i)
                if (i != m && r_related(side, std::min(i, m), std::max(i, m)))
                    partners.push_back(i);
            for (std::size_t a = 0; a < partners.size(); ++a)
                for (std::size_t b = a + 1; b < partners.size(); ++b) {
                    std::size_t u = partners[a], w = partners[b];
                    bool same_class =
                        d.out_mask(side, u) == d.out_mask(side, w);
                    if (!same_class || !g.adjacent(own[u], own[w]))
                        law_c.push_back(own[u] + "," + own[m] + "," + own[w]);
                }
        }
        for (std::size_t i = 0; i < own.size(); ++i)
            for (std::size_t j = i + 1; j < own.size(); ++j) {
                if (d.out_mask(side, i) != d.out_mask(side, j)) continue;
                std::size_t gi = g.index_of(own[i]), gj = g.index_of(own[j]);
                if (!g.has_edge(gi, gj) || g.closed_row(gi) != g.closed_row(gj))
                    law_d.push_back(own[i] + "," + own[j]);
            }
    }
    add("nonadjacency-is-r", std::move(law_b));
    add("r-transitive-class", std::move(law_c));
    add("equiv-homogeneous", std::move(law_d));
    return report;
}

}  // namespace niche
