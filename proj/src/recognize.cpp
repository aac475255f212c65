#include "nichegraph/recognize.hpp"

#include <algorithm>
#include <numeric>

#include "nichegraph/errors.hpp"
#include "nichegraph/kernel.hpp"

namespace niche {

std::string reason_name(Reason r) {
    switch (r) {
        case Reason::TooFewComponents: return "TooFewComponents";
        case Reason::TooManyComponents: return "TooManyComponents";
        case Reason::NonCompleteComponent: return "NonCompleteComponent";
        case Reason::BadCondensationShape: return "BadCondensationShape";
        case Reason::InequalityInfeasible: return "InequalityInfeasible";
        case Reason::OkThreeFour: return "OK_ThreeFour";
        case Reason::OkTwo: return "OK_Two";
    }
    return "?";
}

namespace {

bool le_two_pow(int x, int exponent) {
    if (exponent >= 62) return true;
    return static_cast<long long>(x) <= (1ll << exponent);
}

bool pair_feasible(int s1, int s2) {
    return s1 >= 1 && s2 >= 1 && le_two_pow(s1, s2 - 1) && le_two_pow(s2, s1 - 1);
}

}  // namespace

std::vector<std::pair<int, int>> feasible_pairs(const ExpansionProfile& p1,
                                                const ExpansionProfile& p2) {
    std::vector<std::pair<int, int>> out;
    for (int b1 = p1.b_min; b1 <= p1.b_max; ++b1)
        for (int b2 = p2.b_min; b2 <= p2.b_max; ++b2)
            if (pair_feasible(p1.a + b1, p2.a + b2)) out.emplace_back(b1, b2);
    return out;
}

RecognitionCertificate recognize(const Graph& g) {
    RecognitionCertificate cert;
    cert.components = components(g);
    std::size_t k = cert.components.size();
    cert.profiles.assign(k, std::nullopt);

    if (k <= 1) {
        cert.decision = Decision::No;
        cert.reason = Reason::TooFewComponents;
        return cert;
    }
    if (k >= 5) {
        cert.decision = Decision::No;
        cert.reason = Reason::TooManyComponents;
        return cert;
    }

    std::vector<Graph> parts;
    for (const auto& c : cert.components) parts.push_back(induced(g, c));
    for (std::size_t i = 0; i < k; ++i) cert.profiles[i] = expansion_profile(parts[i]);

    if (k == 3 || k == 4) {
        for (const auto& p : parts)
            if (!p.is_complete()) {
                cert.decision = Decision::No;
                cert.reason = Reason::NonCompleteComponent;
                return cert;
            }
        cert.decision = Decision::Yes;
        cert.reason = Reason::OkThreeFour;
        // side 1 takes the two largest components when there are four and
        // the two smallest when there are three; ties break on the smallest
        // member id
        std::vector<std::size_t> order(k);
        std::iota(order.begin(), order.end(), 0);
        if (k == 4) {
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                if (cert.components[a].size() != cert.components[b].size())
                    return cert.components[a].size() > cert.components[b].size();
                return cert.components[a].front() < cert.components[b].front();
            });
        } else {
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                if (cert.components[a].size() != cert.components[b].size())
                    return cert.components[a].size() < cert.components[b].size();
                return cert.components[a].front() < cert.components[b].front();
            });
        }
        cert.side_of_component.assign(k, 2);
        cert.side_of_component[order[0]] = 1;
        cert.side_of_component[order[1]] = 1;
        return cert;
    }

    // exactly two components
    if (!cert.profiles[0] || !cert.profiles[1]) {
        cert.decision = Decision::No;
        cert.reason = Reason::BadCondensationShape;
        return cert;
    }
    auto pairs = feasible_pairs(*cert.profiles[0], *cert.profiles[1]);
    if (pairs.empty()) {
        cert.decision = Decision::No;
        cert.reason = Reason::InequalityInfeasible;
        return cert;
    }
    cert.decision = Decision::Yes;
    cert.reason = Reason::OkTwo;
    cert.side_of_component = {1, 2};
    cert.params = {cert.profiles[0]->a, pairs.front().first, cert.profiles[1]->a,
                   pairs.front().second};
    return cert;
}

bool certificate_is_consistent(const Graph& g, const RecognitionCertificate& cert) {
    if (cert.components != components(g)) return false;
    if (cert.decision == Decision::No) return true;
    std::size_t k = cert.components.size();
    if (cert.side_of_component.size() != k) return false;
    int on1 = 0, on2 = 0;
    for (int s : cert.side_of_component) {
        if (s == 1) ++on1;
        else if (s == 2) ++on2;
        else return false;
    }
    if (on1 == 0 || on2 == 0 || on1 > 2 || on2 > 2) return false;
    if (cert.reason == Reason::OkThreeFour) {
        if (k != 3 && k != 4) return false;
        for (const auto& c : cert.components)
            if (!induced(g, c).is_complete()) return false;
        return true;
    }
    if (cert.reason != Reason::OkTwo || k != 2 || !cert.params) return false;
    const auto& p = *cert.params;
    int a1 = p[0], b1 = p[1], a2 = p[2], b2 = p[3];
    if (!cert.profiles[0] || !cert.profiles[1]) return false;
    if (cert.profiles[0]->a != a1 || !cert.profiles[0]->b_in_range(b1)) return false;
    if (cert.profiles[1]->a != a2 || !cert.profiles[1]->b_in_range(b2)) return false;
    if (!pair_feasible(a1 + b1, a2 + b2)) return false;
    if (2 * a1 + b1 > static_cast<int>(cert.components[0].size())) return false;
    if (2 * a2 + b2 > static_cast<int>(cert.components[1].size())) return false;
    return true;
}

}  // namespace niche
