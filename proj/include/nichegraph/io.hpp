#pragma once

#include <string>

#include "nichegraph/graph.hpp"
#include "nichegraph/recognize.hpp"
#include "nichegraph/tournament.hpp"

namespace niche {

/// Graph files are UTF-8 and line oriented; `#` starts a comment.
///
///     graph
///     v <id> <id> ...
///     e <id> <id>
///
/// Vertex lines come before edge lines. Tournament files orient every cross
/// pair explicitly, tail first:
///
///     bitournament
///     left <id> <id> ...
///     right <id> <id> ...
///     arc <id> <id>
///
/// Emitters normalize ordering and whitespace, so parse(emit(x)) == x and
/// emit(parse(t)) is a fixed point.
Graph parse_graph(const std::string& text);
BipartiteTournament parse_tournament(const std::string& text);

std::string emit_graph(const Graph& g);
std::string emit_tournament(const BipartiteTournament& d);
std::string emit_dot(const Graph& g);

enum class InputKind { GraphFile, TournamentFile };

// decided by the first significant line
InputKind sniff_kind(const std::string& text);

/// Certificate block, one field per line:
///     decision YES|NO
///     reason <enum>
///     sides <ids> | <ids>     (YES only)
///     params a1 b1 a2 b2      (two-component YES only)
std::string certificate_text(const RecognitionCertificate& cert);

}  // namespace niche
