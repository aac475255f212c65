#include "nichegraph/io.hpp"

#include <algorithm>
#include <sstream>

#include "nichegraph/errors.hpp"

namespace niche {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

void check_id(const std::string& id, int line) {
    if (!valid_vertex_id(id)) throw ParseError(line, "invalid vertex id: '" + id + "'");
}

}  // namespace

InputKind sniff_kind(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(0, "empty input");
    const std::string& head = lines.front().tokens.front();
    if (head == "graph") return InputKind::GraphFile;
    if (head == "bitournament") return InputKind::TournamentFile;
    throw ParseError(lines.front().number, "expected 'graph' or 'bitournament' header");
}

Graph parse_graph(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(0, "empty input");
    if (lines.front().tokens != std::vector<std::string>{"graph"})
        throw ParseError(lines.front().number, "expected 'graph' header");
    std::vector<std::string> verts;
    std::vector<std::pair<std::string, std::string>> edges;
    bool edges_started = false;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const std::string& kind = line.tokens.front();
        if (kind == "v") {
            if (edges_started)
                throw ParseError(line.number, "vertex line after edge lines");
            if (line.tokens.size() < 2)
                throw ParseError(line.number, "vertex line needs at least one id");
            for (std::size_t t = 1; t < line.tokens.size(); ++t) {
                check_id(line.tokens[t], line.number);
                if (std::find(verts.begin(), verts.end(), line.tokens[t]) != verts.end())
                    throw ParseError(line.number, "duplicate vertex: " + line.tokens[t]);
                verts.push_back(line.tokens[t]);
            }
        } else if (kind == "e") {
            edges_started = true;
            if (line.tokens.size() != 3)
                throw ParseError(line.number, "edge line needs exactly two ids");
            const std::string& a = line.tokens[1];
            const std::string& b = line.tokens[2];
            for (const auto& id : {a, b}) {
                check_id(id, line.number);
                if (std::find(verts.begin(), verts.end(), id) == verts.end())
                    throw ParseError(line.number, "unknown vertex: " + id);
            }
            if (a == b) throw ParseError(line.number, "loop edge at vertex " + a);
            for (const auto& [x, y] : edges)
                if ((x == a && y == b) || (x == b && y == a))
                    throw ParseError(line.number, "duplicate edge " + a + " " + b);
            edges.emplace_back(a, b);
        } else {
            throw ParseError(line.number, "unexpected line kind '" + kind + "'");
        }
    }
    return Graph(verts, edges);
}

BipartiteTournament parse_tournament(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(0, "empty input");
    if (lines.front().tokens != std::vector<std::string>{"bitournament"})
        throw ParseError(lines.front().number, "expected 'bitournament' header");
    std::vector<std::string> left, right;
    std::vector<std::pair<std::string, std::string>> arcs;
    bool arcs_started = false;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const std::string& kind = line.tokens.front();
        if (kind == "left" || kind == "right") {
            if (arcs_started) throw ParseError(line.number, "side line after arc lines");
            if (line.tokens.size() < 2)
                throw ParseError(line.number, "side line needs at least one id");
            auto& side = kind == "left" ? left : right;
            for (std::size_t t = 1; t < line.tokens.size(); ++t) {
                const std::string& id = line.tokens[t];
                check_id(id, line.number);
                if (std::find(left.begin(), left.end(), id) != left.end() ||
                    std::find(right.begin(), right.end(), id) != right.end()) {
                    bool other = kind == "left"
                                     ? std::find(right.begin(), right.end(), id) != right.end()
                                     : std::find(left.begin(), left.end(), id) != left.end();
                    throw ParseError(line.number, other ? "vertex on both sides: " + id
                                                        : "duplicate vertex: " + id);
                }
                side.push_back(id);
            }
        } else if (kind == "arc") {
            arcs_started = true;
            if (line.tokens.size() != 3)
                throw ParseError(line.number, "arc line needs exactly two ids");
            const std::string& tail = line.tokens[1];
            const std::string& head = line.tokens[2];
            for (const auto& id : {tail, head}) {
                check_id(id, line.number);
                if (std::find(left.begin(), left.end(), id) == left.end() &&
                    std::find(right.begin(), right.end(), id) == right.end())
                    throw ParseError(line.number, "unknown vertex: " + id);
            }
            bool tail_left = std::find(left.begin(), left.end(), tail) != left.end();
            bool head_left = std::find(left.begin(), left.end(), head) != left.end();
            if (tail_left == head_left)
                throw ParseError(line.number, "arc within a side: " + tail + " " + head);
            for (const auto& [t, h] : arcs)
                if ((t == tail && h == head) || (t == head && h == tail))
                    throw ParseError(line.number,
                                     "duplicate arc between " + tail + " and " + head);
            arcs.emplace_back(tail, head);
        } else {
            throw ParseError(line.number, "unexpected line kind '" + kind + "'");
        }
    }
    try {
        return BipartiteTournament(left, right, arcs);
    } catch (const ValidationError& e) {
        throw ParseError(0, e.what());
    }
}

std::string emit_graph(const Graph& g) {
    std::string out = "graph\n";
    if (g.size() > 0) {
        out += "v";
        for (const auto& n : g.names()) out += " " + n;
        out += "\n";
    }
    for (const auto& [a, b] : g.edge_list()) out += "e " + a + " " + b + "\n";
    return out;
}

std::string emit_tournament(const BipartiteTournament& d) {
    std::string out = "bitournament\nleft";
    for (const auto& n : d.left()) out += " " + n;
    out += "\nright";
    for (const auto& n : d.right()) out += " " + n;
    out += "\n";
    for (std::size_t i = 0; i < d.left_size(); ++i)
        for (std::size_t j = 0; j < d.right_size(); ++j)
            out += d.left_to_right(i, j) ? "arc " + d.left()[i] + " " + d.right()[j] + "\n"
                                         : "arc " + d.right()[j] + " " + d.left()[i] + "\n";
    return out;
}

std::string emit_dot(const Graph& g) {
    std::string out = "graph G {\n";
    for (const auto& n : g.names()) out += "  \"" + n + "\";\n";
    for (const auto& [a, b] : g.edge_list()) out += "  \"" + a + "\" -- \"" + b + "\";\n";
    out += "}\n";
    return out;
}

std::string certificate_text(const RecognitionCertificate& cert) {
    std::string out = "decision ";
    out += cert.decision == Decision::Yes ? "YES" : "NO";
    out += "\nreason " + reason_name(cert.reason) + "\n";
    if (cert.decision == Decision::Yes) {
        std::vector<std::string> side1, side2;
        for (std::size_t i = 0; i < cert.components.size(); ++i) {
            auto& bucket = cert.side_of_component[i] == 1 ? side1 : side2;
            bucket.insert(bucket.end(), cert.components[i].begin(), cert.components[i].end());
        }
        std::sort(side1.begin(), side1.end());
        std::sort(side2.begin(), side2.end());
        out += "sides";
        for (const auto& v : side1) out += " " + v;
        out += " |";
        for (const auto& v : side2) out += " " + v;
        out += "\n";
        if (cert.params) {
            const auto& p = *cert.params;
            out += "params " + std::to_string(p[0]) + " " + std::to_string(p[1]) + " " +
                   std::to_string(p[2]) + " " + std::to_string(p[3]) + "\n";
        }
    }
    return out;
}

}  // namespace niche
