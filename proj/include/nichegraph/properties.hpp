#pragma once

#include <cstddef>
#include <string>

#include "nichegraph/graph.hpp"
#include "nichegraph/recognize.hpp"
#include "nichegraph/report.hpp"

namespace niche {

/// Runs every structural law a niche graph must satisfy:
///   component-independence    no component holds an independent triple
///   no-induced-p4             no induced path on four vertices
///   claw-free                 no induced K_{1,3}
///   at-free                   no asteroidal triple
///   component-diameter        every component has diameter at most two
///   complement-diameter       same for the complement's components
///   no-long-hole              no induced cycle of length five or more
///   no-long-hole-complement   same for the complement
///   perfect                   no odd hole of length five or more either way
///   omega-bounds              components fit in 2w vertices, the graph in 4w
///   matching-bound            twice the maximum matching covers |V| - 4
///   hamilton-path             every component has a spanning path
///   hamilton-cycle            every 2-connected component has a spanning cycle
/// Laws whose exact subroutine exceeds its size bound report SKIPPED.
LawReport verify_niche_properties(const Graph& g);

// True when chordality agrees with the shape the certificate predicts:
// three or four complete components, or two components that are each
// complete or an expansion of a three-vertex path (profile a <= 1).
bool verify_chordal_characterization(const Graph& g, const RecognitionCertificate& cert);

// Every connected, regular, non-complete induced subgraph must be an
// expansion of a complete multipartite graph with all parts of size two and
// one uniform clique size. Scans subsets up to max_subset vertices.
LawReport verify_regular_substructure(const Graph& g, std::size_t max_subset);

// Condensation components must be complete multipartite with parts of size
// at most two and at most one size-one part.
bool verify_condensation_shape(const Graph& g);

}  // namespace niche
