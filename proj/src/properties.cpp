#include "nichegraph/properties.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "nichegraph/errors.hpp"
#include "nichegraph/kernel.hpp"
#include "nichegraph/structure.hpp"

namespace niche {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += " ";
        out += p;
    }
    return out;
}

LawEntry pass(const std::string& law) { return {law, LawStatus::Pass, ""}; }

LawEntry fail(const std::string& law, const std::string& witness) {
    return {law, LawStatus::Fail, witness};
}

LawEntry skipped(const std::string& law, const std::string& why) {
    return {law, LawStatus::Skipped, why};
}

}  // namespace

LawReport verify_niche_properties(const Graph& g) {
    LawReport report;
    auto comps = components(g);
    std::vector<Graph> parts;
    for (const auto& c : comps) parts.push_back(induced(g, c));
    Graph co = complement(g);

    {
        LawEntry e = pass("component-independence");
        for (const auto& part : parts)
            if (auto t = find_independent_triple(part)) {
                e = fail("component-independence", join(*t));
                break;
            }
        report.entries.push_back(e);
    }
    {
        auto p4 = find_induced_p4(g);
        report.entries.push_back(p4 ? fail("no-induced-p4", join(*p4)) : pass("no-induced-p4"));
    }
    {
        auto claw = find_claw(g);
        report.entries.push_back(claw ? fail("claw-free", join(*claw)) : pass("claw-free"));
    }
    if (g.size() > kAsteroidalMaxVertices) {
        report.entries.push_back(skipped("at-free", "graph too large"));
    } else {
        auto at = find_asteroidal_triple(g);
        report.entries.push_back(at ? fail("at-free", join(*at)) : pass("at-free"));
    }
    {
        LawEntry e = pass("component-diameter");
        for (const auto& c : comps)
            if (component_diameter(g, c) > 2) {
                e = fail("component-diameter", c.front());
                break;
            }
        report.entries.push_back(e);
    }
    {
        LawEntry e = pass("complement-diameter");
        for (const auto& c : components(co))
            if (component_diameter(co, c) > 2) {
                e = fail("complement-diameter", c.front());
                break;
            }
        report.entries.push_back(e);
    }
    if (g.size() > kHoleSearchMaxVertices) {
        report.entries.push_back(skipped("no-long-hole", "graph too large"));
        report.entries.push_back(skipped("no-long-hole-complement", "graph too large"));
        report.entries.push_back(skipped("perfect", "graph too large"));
    } else {
        auto hole = shortest_long_hole(g, 5);
        report.entries.push_back(hole ? fail("no-long-hole", join(*hole))
                                      : pass("no-long-hole"));
        auto cohole = shortest_long_hole(co, 5);
        report.entries.push_back(cohole ? fail("no-long-hole-complement", join(*cohole))
                                        : pass("no-long-hole-complement"));
        auto odd = shortest_long_odd_hole(g, 5);
        auto coodd = odd ? odd : shortest_long_odd_hole(co, 5);
        report.entries.push_back(coodd ? fail("perfect", join(*coodd)) : pass("perfect"));
    }
    if (g.size() > kCliqueMaxVertices) {
        report.entries.push_back(skipped("omega-bounds", "graph too large"));
    } else {
        std::size_t w = clique_number(g);
        LawEntry e = pass("omega-bounds");
        if (g.size() > 4 * w) e = fail("omega-bounds", "graph exceeds 4*omega");
        for (const auto& c : comps)
            if (c.size() > 2 * w) {
                e = fail("omega-bounds", "component " + c.front() + " exceeds 2*omega");
                break;
            }
        report.entries.push_back(e);
    }
    if (g.size() > kMatchingMaxVertices) {
        report.entries.push_back(skipped("matching-bound", "graph too large"));
    } else {
        std::size_t m = max_matching_size(g);
        bool ok = 2 * m + 4 >= g.size();
        report.entries.push_back(
            ok ? pass("matching-bound")
               : fail("matching-bound", "matching " + std::to_string(m)));
    }
    {
        bool oversized = false;
        for (const auto& part : parts)
            if (part.size() > kHamiltonMaxVertices) oversized = true;
        if (oversized) {
            report.entries.push_back(skipped("hamilton-path", "component too large"));
            report.entries.push_back(skipped("hamilton-cycle", "component too large"));
        } else {
            LawEntry path_law = pass("hamilton-path");
            LawEntry cycle_law = pass("hamilton-cycle");
            for (const auto& part : parts) {
                if (path_law.status == LawStatus::Pass && !hamiltonian_path(part))
                    path_law = fail("hamilton-path", part.name(0));
                if (cycle_law.status == LawStatus::Pass && is_two_connected(part) &&
                    !hamiltonian_cycle(part))
                    cycle_law = fail("hamilton-cycle", part.name(0));
            }
            report.entries.push_back(path_law);
            report.entries.push_back(cycle_law);
        }
    }
    return report;
}

bool verify_chordal_characterization(const Graph& g, const RecognitionCertificate& cert) {
    if (cert.decision != Decision::Yes)
        throw CertificateMismatchError("chordal characterization needs a YES certificate");
    bool predicted;
    if (cert.reason == Reason::OkThreeFour) {
        predicted = true;  // complete components
    } else {
        predicted = true;
        for (const auto& p : cert.profiles) {
            if (!p) return false;
            if (p->a > 1) predicted = false;
        }
    }
    return is_chordal(g) == predicted;
}

LawReport verify_regular_substructure(const Graph& g, std::size_t max_subset) {
    if (g.size() > 12)
        throw SizeLimitError("regular substructure scan limited to 12 vertices");
    LawReport report;
    std::size_t n = g.size();
    std::size_t checked = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        std::size_t sz = static_cast<std::size_t>(std::popcount(mask));
        if (sz < 4 || sz > max_subset) continue;
        std::vector<std::string> s;
        for (std::size_t v = 0; v < n; ++v)
            if ((mask >> v) & 1u) s.push_back(g.name(v));
        Graph h = induced(g, s);
        if (h.is_complete()) continue;
        std::size_t deg = h.degree(0);
        bool regular = true;
        for (std::size_t v = 1; v < h.size(); ++v)
            if (h.degree(v) != deg) {
                regular = false;
                break;
            }
        if (!regular || components(h).size() != 1) continue;
        ++checked;
        auto prof = expansion_profile(h);
        bool ok = prof.has_value() && prof->universal_clique.empty();
        if (ok) {
            auto cliques = critical_cliques(h).cliques;
            for (const auto& c : cliques)
                if (c.size() != cliques.front().size()) {
                    ok = false;
                    break;
                }
        }
        if (!ok) {
            report.entries.push_back(fail("regular-substructure", join(s)));
            return report;
        }
    }
    report.entries.push_back(
        {"regular-substructure", LawStatus::Pass, std::to_string(checked) + " subsets"});
    return report;
}

bool verify_condensation_shape(const Graph& g) {
    Condensation cond = condensation(g);
    for (const auto& comp : components(cond.graph)) {
        Graph q = induced(cond.graph, comp);
        Graph co = complement(q);
        std::size_t universal = 0;
        for (std::size_t i = 0; i < co.size(); ++i) {
            if (co.degree(i) > 1) return false;
            if (co.degree(i) == 0) ++universal;
        }
        if (universal > 1) return false;
    }
    return true;
}

}  // namespace niche
