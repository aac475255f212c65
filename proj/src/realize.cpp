#include "nichegraph/realize.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "nichegraph/errors.hpp"
#include "nichegraph/kernel.hpp"
#include "nichegraph/niche.hpp"

namespace niche {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw CertificateMismatchError(what);
}

std::vector<std::string> sorted_union(const std::vector<std::vector<std::string>>& sets) {
    std::vector<std::string> out;
    for (const auto& s : sets) out.insert(out.end(), s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

BipartiteTournament realize_three_four(const Graph& g, const RecognitionCertificate& cert) {
    require(cert.decision == Decision::Yes && cert.reason == Reason::OkThreeFour,
            "certificate is not a three/four-component YES");
    require(cert.components == components(g), "certificate components do not match the graph");
    std::vector<std::vector<std::string>> side1, side2;
    for (std::size_t i = 0; i < cert.components.size(); ++i)
        (cert.side_of_component[i] == 1 ? side1 : side2).push_back(cert.components[i]);
    require(side1.size() == 2 && (side2.size() == 1 || side2.size() == 2),
            "certificate side assignment is malformed");

    std::vector<std::string> u = sorted_union(side1), v = sorted_union(side2);
    const auto& s = side1.front();
    std::vector<std::pair<std::string, std::string>> arcs;
    auto block = [&arcs](const std::vector<std::string>& from,
                         const std::vector<std::string>& to,
                         const std::vector<std::string>& skip_from = {},
                         const std::vector<std::string>& skip_to = {}) {
        for (const auto& x : from) {
            if (std::binary_search(skip_from.begin(), skip_from.end(), x)) continue;
            for (const auto& y : to) {
                if (std::binary_search(skip_to.begin(), skip_to.end(), y)) continue;
                arcs.emplace_back(x, y);
            }
        }
    };
    if (side2.size() == 1) {
        block(s, v);        // [S, V]
        block(v, u, {}, s); // [V, U \ S]
    } else {
        const auto& t = side2.front();
        block(s, t);          // [S, T]
        block(t, u, {}, s);   // [T, U \ S]
        block(u, v, s, t);    // [U \ S, V \ T]
        block(v, s, t, {});   // [V \ T, S]
    }
    return BipartiteTournament(u, v, arcs);
}

namespace {

// one component's template: part labels, their cliques of input vertices,
// and the chosen representatives
struct TemplateBuild {
    Graph tmpl;
    std::vector<std::string> reps;
    std::map<std::string, std::vector<std::string>> cliques;
    std::vector<std::pair<std::string, std::string>> two_parts;  // (rep, partner)
};

TemplateBuild build_template(const ExpansionProfile& prof, int b) {
    TemplateBuild t;
    std::vector<std::string> labels;
    for (const auto& [first, second] : prof.pair_parts) {
        std::string p = first.front(), q = second.front();
        t.cliques[p] = first;
        t.cliques[q] = second;
        if (q < p) std::swap(p, q);
        t.two_parts.emplace_back(p, q);
        t.reps.push_back(p);
        labels.push_back(p);
        labels.push_back(q);
    }
    if (b > 0) {
        // split the universal clique as (c-b+1, 1, ..., 1)
        const auto& w = prof.universal_clique;
        int c = static_cast<int>(w.size());
        std::vector<std::string> head(w.begin(), w.begin() + (c - b + 1));
        t.cliques[head.front()] = head;
        t.reps.push_back(head.front());
        labels.push_back(head.front());
        for (int i = c - b + 1; i < c; ++i) {
            t.cliques[w[i]] = {w[i]};
            t.reps.push_back(w[i]);
            labels.push_back(w[i]);
        }
    }
    std::sort(t.reps.begin(), t.reps.end());
    t.tmpl = Graph(labels, {});
    for (std::size_t i = 0; i < t.tmpl.size(); ++i)
        for (std::size_t j = i + 1; j < t.tmpl.size(); ++j) {
            bool same_part = false;
            for (const auto& [p, q] : t.two_parts)
                if ((t.tmpl.name(i) == p && t.tmpl.name(j) == q) ||
                    (t.tmpl.name(i) == q && t.tmpl.name(j) == p))
                    same_part = true;
            if (!same_part) t.tmpl.add_edge(i, j);
        }
    return t;
}

void check(bool ok, const std::string& what) {
    if (!ok) throw InternalRoundTripError("witness construction check failed: " + what);
}

}  // namespace

std::pair<BipartiteTournament, WitnessPlan> realize_two(const Graph& g,
                                                        const RecognitionCertificate& cert) {
    require(cert.decision == Decision::Yes && cert.reason == Reason::OkTwo && cert.params,
            "certificate is not a two-component YES");
    require(cert.components == components(g), "certificate components do not match the graph");
    require(cert.profiles.size() == 2 && cert.profiles[0] && cert.profiles[1],
            "certificate lacks expansion profiles");

    const auto& par = *cert.params;
    int a[2] = {par[0], par[2]}, b[2] = {par[1], par[3]};
    require(cert.profiles[0]->a == a[0] && cert.profiles[0]->b_in_range(b[0]) &&
                cert.profiles[1]->a == a[1] && cert.profiles[1]->b_in_range(b[1]),
            "certificate params do not fit the expansion profiles");
    int role1 = 0;
    if (a[0] + b[0] < a[1] + b[1]) role1 = 1;
    int role2 = 1 - role1;

    TemplateBuild t1 = build_template(*cert.profiles[role1], b[role1]);
    TemplateBuild t2 = build_template(*cert.profiles[role2], b[role2]);
    const auto& z1 = t1.reps;
    const auto& z2 = t2.reps;
    std::size_t s1 = z1.size(), s2 = z2.size();
    check(s1 >= s2 && s2 >= 1, "representative sets are not ordered by size");
    if (s2 > 20)
        throw SizeLimitError("witness construction limited to 20 template parts per side");
    check(s1 <= (std::size_t{1} << (s2 - 1)), "injection does not fit");

    // partitions {Y, z2 \ Y} identified by the member containing z2[0],
    // enumerated in ascending bitstring order over sorted z2
    auto member_mask = [&](std::uint32_t order_key) {
        std::uint32_t mask = 1;  // z2[0]
        for (std::size_t i = 1; i < s2; ++i)
            if ((order_key >> (s2 - 1 - i)) & 1u) mask |= std::uint32_t{1} << i;
        return mask;
    };

    std::vector<std::uint32_t> psi_mask(s1, 0);
    std::set<std::uint32_t> used;
    for (std::size_t j = 0; j < s2; ++j) {
        // chain pair {Q_{j+1}, z2 \ Q_{j+1}}; Q_i is the first i of z2
        std::uint32_t mask = (std::uint32_t{1} << (j + 1)) - 1;
        psi_mask[j] = mask;
        used.insert(mask);
    }
    std::uint32_t order_key = 0;
    for (std::size_t j = s2; j < s1; ++j) {
        while (used.count(member_mask(order_key))) ++order_key;
        psi_mask[j] = member_mask(order_key);
        used.insert(psi_mask[j]);
    }

    // template tournament: left = role-1 labels, right = role-2 labels
    std::vector<std::string> left = t1.tmpl.names(), right = t2.tmpl.names();
    auto lidx = [&](const std::string& n) {
        return static_cast<std::size_t>(
            std::lower_bound(left.begin(), left.end(), n) - left.begin());
    };
    auto ridx = [&](const std::string& n) {
        return static_cast<std::size_t>(
            std::lower_bound(right.begin(), right.end(), n) - right.begin());
    };
    std::vector<Bitset> rows(left.size(), Bitset(right.size()));
    std::vector<Bitset> fixed(left.size(), Bitset(right.size()));
    auto set_arc = [&](std::size_t li, std::size_t rj, bool to_right) {
        if (to_right) rows[li].set(rj);
        fixed[li].set(rj);
    };

    for (std::size_t j = 0; j < s1; ++j) {
        std::size_t li = lidx(z1[j]);
        for (std::size_t i = 0; i < s2; ++i)
            set_arc(li, ridx(z2[i]), (psi_mask[j] >> i) & 1u);
    }
    // partners on the left mirror their representative against z2
    for (const auto& [rep, partner] : t1.two_parts) {
        std::size_t pr = lidx(rep), pa = lidx(partner);
        for (std::size_t i = 0; i < s2; ++i) {
            std::size_t rj = ridx(z2[i]);
            set_arc(pa, rj, !rows[pr].test(rj));
        }
    }
    // partners on the right mirror their representative against everything
    for (const auto& [rep, partner] : t2.two_parts) {
        std::size_t rr = ridx(rep), ra = ridx(partner);
        for (std::size_t li = 0; li < left.size(); ++li)
            set_arc(li, ra, !rows[li].test(rr));
    }
    for (const auto& f : fixed)
        check(f.count() == right.size(), "orientation left incomplete");

    BipartiteTournament templ = BipartiteTournament::from_masks(left, right, rows);

    // the construction promises these; a failure is a bug, not bad input
    for (std::size_t j = 0; j < s1; ++j) {
        Bitset out = templ.out_mask(Side::Left, lidx(z1[j]));
        for (std::size_t i = 0; i < s2; ++i)
            check(out.test(ridx(z2[i])) == (((psi_mask[j] >> i) & 1u) != 0),
                  "psi does not match the oriented arcs");
    }
    for (const auto& [rep, partner] : t1.two_parts)
        check(templ.out_mask(Side::Left, lidx(rep)) ==
                  templ.in_mask(Side::Left, lidx(partner)),
              "left partners are not mirror-related");
    for (const auto& [rep, partner] : t2.two_parts)
        check(templ.out_mask(Side::Right, ridx(rep)) ==
                  templ.in_mask(Side::Right, ridx(partner)),
              "right partners are not mirror-related");
    auto distinct_split = [&](Side side, const std::vector<std::string>& reps,
                              const std::vector<std::string>& names) {
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j) {
                std::size_t vi = static_cast<std::size_t>(
                    std::lower_bound(names.begin(), names.end(), reps[i]) - names.begin());
                std::size_t vj = static_cast<std::size_t>(
                    std::lower_bound(names.begin(), names.end(), reps[j]) - names.begin());
                Bitset oi = templ.out_mask(side, vi), ii = templ.in_mask(side, vi);
                Bitset oj = templ.out_mask(side, vj), ij = templ.in_mask(side, vj);
                bool equal_split = (oi == oj && ii == ij) || (oi == ij && ii == oj);
                check(!equal_split, "two representatives share a neighborhood split");
            }
    };
    distinct_split(Side::Left, z1, left);
    distinct_split(Side::Right, z2, right);
    check(niche_graph(templ) == disjoint_union(t1.tmpl, t2.tmpl),
          "template tournament does not reproduce the template graphs");

    // expand template vertices into their cliques, arcs blockwise
    std::map<std::string, std::vector<std::string>> clique_map = t1.cliques;
    clique_map.insert(t2.cliques.begin(), t2.cliques.end());
    std::vector<std::string> out_left = sorted_union({cert.components[role1]});
    std::vector<std::string> out_right = sorted_union({cert.components[role2]});
    auto oidx = [](const std::vector<std::string>& v, const std::string& n) {
        return static_cast<std::size_t>(
            std::lower_bound(v.begin(), v.end(), n) - v.begin());
    };
    std::vector<Bitset> out_rows(out_left.size(), Bitset(out_right.size()));
    for (std::size_t li = 0; li < left.size(); ++li)
        for (const auto& x : clique_map.at(left[li]))
            for (std::size_t rj = 0; rj < right.size(); ++rj) {
                if (!rows[li].test(rj)) continue;
                for (const auto& y : clique_map.at(right[rj]))
                    out_rows[oidx(out_left, x)].set(oidx(out_right, y));
            }

    WitnessPlan plan;
    plan.l1 = t1.tmpl;
    plan.l2 = t2.tmpl;
    plan.z1 = z1;
    plan.z2 = z2;
    for (std::size_t i = 1; i <= s2; ++i)
        plan.chain.emplace_back(z2.begin(), z2.begin() + static_cast<std::ptrdiff_t>(i));
    for (std::size_t j = 0; j < s1; ++j) {
        std::vector<std::string> member;
        for (std::size_t i = 0; i < s2; ++i)
            if ((psi_mask[j] >> i) & 1u) member.push_back(z2[i]);
        plan.psi[z1[j]] = member;
        plan.out_first[z1[j]] = true;
    }
    plan.clique_map = clique_map;
    plan.template_tournament = templ;
    plan.swapped = role1 == 1;
    return {BipartiteTournament::from_masks(out_left, out_right, out_rows), plan};
}

std::optional<BipartiteTournament> realize(const Graph& g) {
    RecognitionCertificate cert = recognize(g);
    if (cert.decision == Decision::No) return std::nullopt;
    BipartiteTournament witness =
        cert.reason == Reason::OkThreeFour ? realize_three_four(g, cert)
                                           : realize_two(g, cert).first;
    if (!(niche_graph(witness) == g))
        throw InternalRoundTripError("realized tournament does not reproduce its input");
    return witness;
}

}  // namespace niche
