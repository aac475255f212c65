#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nichegraph/errors.hpp"
#include "nichegraph/io.hpp"
#include "nichegraph/niche.hpp"
#include "nichegraph/oracle.hpp"
#include "nichegraph/properties.hpp"
#include "nichegraph/realize.hpp"
#include "nichegraph/recognize.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitVerification = 3;
constexpr int kExitSizeLimit = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw niche::ParseError(0, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw niche::ParseError(0, "cannot write file: " + path);
    out << text;
}

int cmd_niche(const std::string& file, const std::string& out_file,
              const std::string& dot_file) {
    niche::BipartiteTournament d = niche::parse_tournament(slurp(file));
    niche::Graph g = niche::niche_graph(d);
    std::string text = niche::emit_graph(g);
    std::cout << text;
    if (!out_file.empty()) spill(out_file, text);
    if (!dot_file.empty()) spill(dot_file, niche::emit_dot(g));
    return 0;
}

int cmd_recognize(const std::string& file, const std::string& witness_file) {
    niche::Graph g = niche::parse_graph(slurp(file));
    niche::RecognitionCertificate cert = niche::recognize(g);
    std::cout << niche::certificate_text(cert);
    if (!witness_file.empty() && cert.decision == niche::Decision::Yes) {
        niche::BipartiteTournament w =
            cert.reason == niche::Reason::OkThreeFour
                ? niche::realize_three_four(g, cert)
                : niche::realize_two(g, cert).first;
        spill(witness_file, niche::emit_tournament(w));
    }
    return 0;
}

int cmd_verify(const std::string& file) {
    std::string text = slurp(file);
    niche::LawReport combined;
    if (niche::sniff_kind(text) == niche::InputKind::TournamentFile) {
        niche::BipartiteTournament d = niche::parse_tournament(text);
        combined = niche::verify_relation_laws(d);
        niche::LawReport props = niche::verify_niche_properties(niche::niche_graph(d));
        combined.entries.insert(combined.entries.end(), props.entries.begin(),
                                props.entries.end());
    } else {
        niche::Graph g = niche::parse_graph(text);
        combined = niche::verify_niche_properties(g);
        bool shape = niche::verify_condensation_shape(g);
        combined.entries.push_back({"condensation-shape",
                                    shape ? niche::LawStatus::Pass : niche::LawStatus::Fail,
                                    ""});
    }
    std::cout << combined.to_text();
    return combined.all_passed() ? 0 : kExitVerification;
}

int cmd_cross_check(std::size_t max_vertices, unsigned jobs) {
    niche::CrossCheckReport report = niche::cross_check(max_vertices, jobs);
    std::cout << report.to_text();
    return report.mismatches.empty() ? 0 : kExitVerification;
}

int cmd_census(std::size_t m, std::size_t n, unsigned jobs, const std::string& csv_file) {
    niche::RealizabilityCensus c = niche::census(m, n, jobs);
    std::uint64_t total = 0;
    for (const auto& [code, count] : c.counts) total += count;
    std::cout << "census m=" << m << " n=" << n << " orientations=" << total
              << " classes=" << c.counts.size() << "\n";
    for (const auto& [code, count] : c.counts)
        std::cout << niche::CanonicalCode{code}.hex() << " " << count << "\n";
    if (!csv_file.empty()) spill(csv_file, c.to_csv());
    return 0;
}

int cmd_random(std::size_t m, std::size_t n, std::uint64_t seed,
               const std::string& out_file) {
    niche::BipartiteTournament d = niche::random_tournament(m, n, seed);
    std::string text = niche::emit_tournament(d);
    std::cout << text;
    if (!out_file.empty()) spill(out_file, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"niche graphs of bipartite tournaments: compute, recognize, "
                 "synthesize, certify"};
    app.require_subcommand(1);

    std::string file, out_file, dot_file, witness_file, csv_file;
    std::size_t max_vertices = 6, left = 1, right = 1;
    unsigned jobs = 1;
    std::uint64_t seed = 0;

    CLI::App* niche_cmd = app.add_subcommand("niche", "niche graph of a tournament file");
    niche_cmd->add_option("file", file)->required();
    niche_cmd->add_option("--out", out_file, "also write the graph to this file");
    niche_cmd->add_option("--dot", dot_file, "write a DOT rendering to this file");

    CLI::App* rec_cmd = app.add_subcommand("recognize", "decide niche-realizability");
    rec_cmd->add_option("file", file)->required();
    rec_cmd->add_option("--witness", witness_file,
                        "on YES, write a witness tournament to this file");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the structural law suite; exit 0 iff no FAIL");
    verify_cmd->add_option("file", file)->required();

    CLI::App* cross_cmd =
        app.add_subcommand("cross-check", "recognizer vs exhaustive enumeration");
    cross_cmd->add_option("--max", max_vertices, "largest vertex count (default 6)");
    cross_cmd->add_option("--jobs", jobs, "worker threads");

    CLI::App* census_cmd =
        app.add_subcommand("census", "niche-graph classes over all orientations");
    census_cmd->add_option("--left", left)->required();
    census_cmd->add_option("--right", right)->required();
    census_cmd->add_option("--jobs", jobs, "worker threads");
    census_cmd->add_option("--csv", csv_file, "write code_hex,count,m,n lines");

    CLI::App* random_cmd = app.add_subcommand("random", "seeded random tournament");
    random_cmd->add_option("--left", left)->required();
    random_cmd->add_option("--right", right)->required();
    random_cmd->add_option("--seed", seed)->required();
    random_cmd->add_option("--out", out_file, "also write to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (niche_cmd->parsed()) return cmd_niche(file, out_file, dot_file);
        if (rec_cmd->parsed()) return cmd_recognize(file, witness_file);
        if (verify_cmd->parsed()) return cmd_verify(file);
        if (cross_cmd->parsed()) return cmd_cross_check(max_vertices, jobs);
        if (census_cmd->parsed()) return cmd_census(left, right, jobs, csv_file);
        if (random_cmd->parsed()) return cmd_random(left, right, seed, out_file);
    } catch (const niche::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const niche::SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return kExitSizeLimit;
    } catch (const niche::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}
