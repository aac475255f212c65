#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nichegraph/graph.hpp"
#include "nichegraph/structure.hpp"

namespace niche {

enum class Decision { Yes, No };

enum class Reason {
    TooFewComponents,
    TooManyComponents,
    NonCompleteComponent,
    BadCondensationShape,
    InequalityInfeasible,
    OkThreeFour,
    OkTwo,
};

std::string reason_name(Reason r);

/// Machine-checkable recognition outcome. For a YES with two components the
/// params are (a1, b1, a2, b2) with (b1, b2) the lexicographically least
/// feasible choice.
struct RecognitionCertificate {
    Decision decision = Decision::No;
    Reason reason = Reason::TooFewComponents;
    std::vector<std::vector<std::string>> components;      // ordered by smallest member
    std::vector<int> side_of_component;                    // 1 or 2; YES only
    std::optional<std::array<int, 4>> params;              // YES with two components only
    std::vector<std::optional<ExpansionProfile>> profiles; // aligned with components
};

RecognitionCertificate recognize(const Graph& g);

// all (b1, b2) inside the profile ranges satisfying both exponential
// inequalities, in ascending order
std::vector<std::pair<int, int>> feasible_pairs(const ExpansionProfile& p1,
                                                const ExpansionProfile& p2);

// re-derive the YES conditions from the certificate data alone
bool certificate_is_consistent(const Graph& g, const RecognitionCertificate& cert);

}  // namespace niche
