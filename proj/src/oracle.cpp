#include "nichegraph/oracle.hpp"

#include <algorithm>
#include <thread>

#include "nichegraph/errors.hpp"
#include "nichegraph/niche.hpp"
#include "nichegraph/recognize.hpp"
#include "nichegraph/rng.hpp"

namespace niche {

namespace {

std::vector<std::string> side_names(char prefix, std::size_t count) {
    int width = count >= 10 ? 2 : 1;
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= count; ++i) {
        std::string num = std::to_string(i);
        while (static_cast<int>(num.size()) < width) num.insert(num.begin(), '0');
        names.push_back(prefix + num);
    }
    return names;
}

BipartiteTournament build_from_bits(std::size_t m, std::size_t n,
                                    const std::function<bool(std::size_t)>& bit) {
    std::vector<Bitset> rows(m, Bitset(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (bit(i * n + j)) rows[i].set(j);
    return BipartiteTournament::from_masks(side_names('u', m), side_names('v', n),
                                           std::move(rows));
}

}  // namespace

BipartiteTournament tournament_from_index(std::size_t m, std::size_t n,
                                          std::uint64_t index) {
    if (m < 1 || n < 1) throw ValidationError("both sides need at least one vertex");
    if (m * n > kEnumerationMaxBits)
        throw SizeLimitError("orientation index limited to " +
                             std::to_string(kEnumerationMaxBits) + " cross pairs");
    return build_from_bits(m, n, [index](std::size_t k) { return (index >> k) & 1u; });
}

BipartiteTournament tournament_from_index(const OrientationIndex& oi) {
    return tournament_from_index(oi.left, oi.right, oi.index);
}

void enumerate_orientations(std::size_t m, std::size_t n,
                            const std::function<void(const BipartiteTournament&,
                                                     std::uint64_t)>& visit) {
    if (m < 1 || n < 1) throw ValidationError("both sides need at least one vertex");
    if (m * n > kEnumerationMaxBits)
        throw SizeLimitError("orientation enumeration limited to " +
                             std::to_string(kEnumerationMaxBits) + " cross pairs");
    std::uint64_t total = std::uint64_t{1} << (m * n);
    for (std::uint64_t index = 0; index < total; ++index)
        visit(tournament_from_index(m, n, index), index);
}

BipartiteTournament random_tournament(std::size_t m, std::size_t n, std::uint64_t seed) {
    if (m < 1 || n < 1) throw ValidationError("both sides need at least one vertex");
    SplitMix64 rng(seed);
    std::vector<char> bits(m * n);
    for (auto& b : bits) b = static_cast<char>(rng.next() & 1u);
    return build_from_bits(m, n, [&bits](std::size_t k) { return bits[k] != 0; });
}

std::string RealizabilityCensus::to_csv() const {
    std::string out;
    for (const auto& [code, count] : counts) {
        out += CanonicalCode{code}.hex();
        out += "," + std::to_string(count) + "," + std::to_string(left) + "," +
               std::to_string(right) + "\n";
    }
    return out;
}

RealizabilityCensus census(std::size_t m, std::size_t n, unsigned jobs) {
    if (m < 1 || n < 1) throw ValidationError("both sides need at least one vertex");
    if (m * n > kCensusMaxBits)
        throw SizeLimitError("census limited to " + std::to_string(kCensusMaxBits) +
                             " cross pairs");
    std::uint64_t total = std::uint64_t{1} << (m * n);
    unsigned workers = std::max(1u, jobs);
    if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<unsigned>(total);
    std::vector<std::map<std::string, std::uint64_t>> partial(workers);
    // contiguous index blocks; merging by key addition keeps the result
    // independent of the worker count
    auto run_block = [m, n](std::uint64_t lo, std::uint64_t hi,
                            std::map<std::string, std::uint64_t>& out) {
        for (std::uint64_t index = lo; index < hi; ++index) {
            Graph ng = niche_graph(tournament_from_index(m, n, index));
            ++out[canonical_code(ng).bytes];
        }
    };
    if (workers == 1) {
        run_block(0, total, partial[0]);
    } else {
        std::vector<std::thread> threads;
        std::uint64_t chunk = total / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t lo = w * chunk;
            std::uint64_t hi = w + 1 == workers ? total : lo + chunk;
            threads.emplace_back(run_block, lo, hi, std::ref(partial[w]));
        }
        for (auto& t : threads) t.join();
    }
    RealizabilityCensus result;
    result.left = m;
    result.right = n;
    for (const auto& block : partial)
        for (const auto& [code, count] : block) result.counts[code] += count;
    return result;
}

std::string CrossCheckReport::to_text() const {
    std::string out = "checked graphs on <= " + std::to_string(max_vertices) +
                      " vertices: classes=" + std::to_string(classes) +
                      " realizable=" + std::to_string(realizable_classes) + "\n";
    for (const auto& m : mismatches) out += "MISMATCH " + m + "\n";
    out += "mismatches: " + std::to_string(mismatches.size()) + "\n";
    return out;
}

namespace {

// every labeled graph on n fixed vertices, reduced to one representative
// edge mask per isomorphism class
std::map<std::string, std::uint64_t> class_representatives(std::size_t n, unsigned jobs) {
    std::vector<std::string> names = side_names('x', n);
    std::vector<std::pair<std::size_t, std::size_t>> pair_of_bit;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pair_of_bit.emplace_back(i, j);
    std::uint64_t total = std::uint64_t{1} << pair_of_bit.size();
    auto run_block = [&](std::uint64_t lo, std::uint64_t hi,
                         std::map<std::string, std::uint64_t>& out) {
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            Graph g(names, {});
            for (std::size_t k = 0; k < pair_of_bit.size(); ++k)
                if ((mask >> k) & 1u) g.add_edge(pair_of_bit[k].first, pair_of_bit[k].second);
            std::string code = canonical_code(g).bytes;
            auto it = out.find(code);
            if (it == out.end() || mask < it->second) out[code] = mask;
        }
    };
    unsigned workers = std::max(1u, jobs);
    if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<unsigned>(total);
    std::vector<std::map<std::string, std::uint64_t>> partial(workers);
    if (workers == 1) {
        run_block(0, total, partial[0]);
    } else {
        std::vector<std::thread> threads;
        std::uint64_t chunk = total / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t lo = w * chunk;
            std::uint64_t hi = w + 1 == workers ? total : lo + chunk;
            threads.emplace_back(run_block, lo, hi, std::ref(partial[w]));
        }
        for (auto& t : threads) t.join();
    }
    std::map<std::string, std::uint64_t> reps;
    for (const auto& block : partial)
        for (const auto& [code, mask] : block) {
            auto it = reps.find(code);
            if (it == reps.end() || mask < it->second) reps[code] = mask;
        }
    return reps;
}

}  // namespace

CrossCheckReport cross_check(std::size_t max_vertices, unsigned jobs) {
    if (max_vertices > kCrossCheckMaxVertices)
        throw SizeLimitError("cross-check limited to " +
                             std::to_string(kCrossCheckMaxVertices) + " vertices");
    CrossCheckReport report;
    report.max_vertices = max_vertices;
    for (std::size_t n = 1; n <= max_vertices; ++n) {
        // codes realizable as the niche graph of some K_{m, n-m} orientation
        std::map<std::string, std::uint64_t> realizable;
        for (std::size_t m = 1; m + 1 <= n; ++m) {
            RealizabilityCensus c = census(m, n - m, jobs);
            for (const auto& [code, count] : c.counts) realizable[code] += count;
        }
        std::vector<std::string> names = side_names('x', n);
        std::vector<std::pair<std::size_t, std::size_t>> pair_of_bit;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) pair_of_bit.emplace_back(i, j);
        for (const auto& [code, mask] : class_representatives(n, jobs)) {
            ++report.classes;
            Graph g(names, {});
            for (std::size_t k = 0; k < pair_of_bit.size(); ++k)
                if ((mask >> k) & 1u) g.add_edge(pair_of_bit[k].first, pair_of_bit[k].second);
            bool by_enumeration = realizable.count(code) > 0;
            bool by_recognizer = recognize(g).decision == Decision::Yes;
            if (by_enumeration) ++report.realizable_classes;
            if (by_enumeration != by_recognizer)
                report.mismatches.push_back(
                    "n=" + std::to_string(n) + " code=" + CanonicalCode{code}.hex() +
                    " recognizer=" + (by_recognizer ? "YES" : "NO") +
                    " enumeration=" + (by_enumeration ? "YES" : "NO"));
        }
    }
    return report;
}

}  // namespace niche
