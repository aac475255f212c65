#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nichegraph/graph.hpp"
#include "nichegraph/recognize.hpp"
#include "nichegraph/tournament.hpp"

namespace niche {

/// Construction record for a two-component witness. Role 1 is the component
/// whose template has at least as many parts; `swapped` is set when that is
/// the second component.
struct WitnessPlan {
    Graph l1, l2;                                  // templates on representative labels
    std::vector<std::string> z1, z2;               // one representative per part, sorted
    std::vector<std::vector<std::string>> chain;   // Q_1 c Q_2 c ... c Q_{|z2|} = z2
    // u in z1 -> the member of psi(u) containing the smallest vertex of z2
    std::map<std::string, std::vector<std::string>> psi;
    std::map<std::string, bool> out_first;         // arc layout taken per u in z1
    std::map<std::string, std::vector<std::string>> clique_map;  // label -> input vertices
    std::optional<BipartiteTournament> template_tournament;
    bool swapped = false;
};

// Witness for a YES certificate with three or four complete components; the
// niche graph of the result equals the input exactly.
BipartiteTournament realize_three_four(const Graph& g, const RecognitionCertificate& cert);

// Witness for a YES certificate with two components, built from nested
// subsets of the opposite representative set and expanded back onto the
// input vertices.
std::pair<BipartiteTournament, WitnessPlan> realize_two(const Graph& g,
                                                        const RecognitionCertificate& cert);

// std::nullopt exactly when recognition says NO; any returned tournament has
// already passed the niche-graph round trip.
std::optional<BipartiteTournament> realize(const Graph& g);

}  // namespace niche
