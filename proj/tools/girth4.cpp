// Command-line front end: construct, verify, bound, k10, exact-small.
// Exit codes: 0 success / verified, 1 verification failure, 2 usage or
// parse errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"

#include "girth4/girth4.hpp"

namespace {

using girth4::ordered_json;

constexpr int kExitVerified = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw girth4::DocumentError("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void print_document(const girth4::DecompositionDocument& doc, const std::string& format) {
    if (format == "json")
        std::cout << girth4::document_to_string(doc);
    else if (format == "dot")
        std::cout << girth4::document_to_dot(doc);
    else
        std::cout << girth4::parts_to_edgelist(doc.decomposition.parts);
}

bool use_color() {
    return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stderr)) == 1;
}

void print_human_report(const girth4::VerificationReport& report, int girth_min) {
    const bool color = use_color();
    const char* good = color ? "\x1b[32m" : "";
    const char* bad = color ? "\x1b[31m" : "";
    const char* reset = color ? "\x1b[0m" : "";

    std::cerr << "host edges: " << report.host_edge_count << ", parts: "
              << report.per_part.size() << ", girth_min: " << girth_min << "\n";
    for (std::size_t i = 0; i < report.per_part.size(); ++i) {
        const auto& pr = report.per_part[i];
        std::cerr << "  part " << i + 1 << ": " << pr.edge_count << " edges, "
                  << (pr.is_planar ? "planar" : "NON-PLANAR") << ", girth ";
        if (pr.girth.is_finite())
            std::cerr << *pr.girth.value;
        else
            std::cerr << "infinite";
        std::cerr << (pr.girth_ok ? "" : " (too short)") << "\n";
    }
    std::cerr << "  coverage: " << girth4::coverage_status_name(report.coverage.status());
    const auto list = [](const std::vector<girth4::Edge>& edges) {
        std::string out;
        for (std::size_t i = 0; i < edges.size() && i < 8; ++i)
            out += (i ? ", " : " ") + girth4::vertex_to_string(edges[i].a) + "-" +
                   girth4::vertex_to_string(edges[i].b);
        if (edges.size() > 8)
            out += ", ...";
        return out;
    };
    if (!report.coverage.foreign.empty())
        std::cerr << list(report.coverage.foreign);
    else if (!report.coverage.duplicated.empty())
        std::cerr << list(report.coverage.duplicated);
    else if (!report.coverage.missing.empty())
        std::cerr << list(report.coverage.missing);
    std::cerr << "\n";
    if (report.verdict)
        std::cerr << good << "PASS" << reset << ": valid decomposition\n";
    else
        std::cerr << bad << "FAIL" << reset << ": not a valid decomposition\n";
}

int run(int argc, char** argv) {
    CLI::App app{"girth-constrained planar decompositions of K_{n,n,n} and K_10"};
    app.require_subcommand(1);

    // construct
    auto* construct_cmd =
        app.add_subcommand("construct", "emit a decomposition of K_{n,n,n}");
    int construct_n = 0;
    std::string construct_format = "json";
    construct_cmd->add_option("--n", construct_n, "side size n of K_{n,n,n}")
        ->required()
        ->check(CLI::PositiveNumber);
    construct_cmd->add_option("--format", construct_format, "json|dot|edgelist")
        ->check(CLI::IsMember({"json", "dot", "edgelist"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a decomposition document");
    std::string verify_input = "-";
    int verify_girth = 4;
    std::string verify_host;
    verify_cmd->add_option("--input", verify_input, "path to document, '-' for stdin");
    auto* girth_opt =
        verify_cmd->add_option("--girth", verify_girth, "required minimum girth")
            ->check(CLI::Range(3, 1000000));
    verify_cmd->add_option("--host", verify_host,
                           "host override, e.g. complete_tripartite:4 (required for "
                           "edge-list input)");

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "print the bounds for K_{n,n,n}");
    int bound_n = 0;
    bound_cmd->add_option("--n", bound_n, "side size n")->required()->check(
        CLI::PositiveNumber);

    // k10
    auto* k10_cmd = app.add_subcommand("k10", "emit the stored K_10 decomposition");
    std::string k10_format = "json";
    k10_cmd->add_option("--format", k10_format, "json|dot|edgelist")
        ->check(CLI::IsMember({"json", "dot", "edgelist"}));

    // exact-small
    auto* exact_cmd = app.add_subcommand(
        "exact-small", "exact girth-thickness of a tiny graph by exhaustive search");
    std::string exact_input = "-";
    std::string exact_host;
    int exact_girth = 4;
    int exact_max_parts = 8;
    exact_cmd->add_option("--input", exact_input,
                          "edge-list graph input, '-' for stdin (ignored with --host)");
    exact_cmd->add_option("--host", exact_host,
                          "use a generated host graph, e.g. complete_tripartite:1");
    exact_cmd->add_option("--girth", exact_girth, "required minimum girth")
        ->check(CLI::Range(3, 1000000));
    exact_cmd->add_option("--max-parts", exact_max_parts, "largest part count to try")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (construct_cmd->parsed()) {
        const girth4::DecompositionDocument doc(girth4::construct(construct_n));
        print_document(doc, construct_format);
        return kExitVerified;
    }

    if (verify_cmd->parsed()) {
        const std::string text = read_input(verify_input);
        const auto first = text.find_first_not_of(" \t\r\n");
        const bool looks_json = first != std::string::npos && text[first] == '{';

        int girth_min = verify_girth;
        std::optional<girth4::Decomposition> decomposition;
        if (looks_json) {
            girth4::DecompositionDocument doc = girth4::document_from_json_text(text);
            if (girth_opt->count() == 0)
                girth_min = doc.girth_min;
            if (!verify_host.empty())
                decomposition.emplace(girth4::parse_host_spec(verify_host),
                                      std::move(doc.decomposition.parts));
            else
                decomposition.emplace(std::move(doc.decomposition));
        } else {
            if (verify_host.empty())
                throw girth4::DocumentError("edge-list input needs --host");
            decomposition.emplace(girth4::parse_host_spec(verify_host),
                                  girth4::parts_from_edgelist(text));
        }

        const girth4::VerificationReport report =
            girth4::verify_decomposition(*decomposition, girth_min);
        print_human_report(report, girth_min);
        std::cout << girth4::report_to_json(report).dump(2) << "\n";
        return report.verdict ? kExitVerified : kExitFailed;
    }

    if (bound_cmd->parsed()) {
        ordered_json j;
        j["n"] = bound_n;
        j["theta"] = girth4::theta4_knnn(bound_n);
        if (bound_n >= 2) {
            j["lower_bound"] = girth4::lower_bound_theta4_knnn(bound_n);
            j["lemma1_max_edges_per_part"] =
                girth4::max_planar_edges(3 * static_cast<std::int64_t>(bound_n), 4);
        } else {
            j["note"] = "lower-bound formula not applied at n=1";
        }
        std::cout << j.dump(2) << "\n";
        return kExitVerified;
    }

    if (k10_cmd->parsed()) {
        const girth4::DecompositionDocument doc(girth4::k10_decomposition());
        print_document(doc, k10_format);
        return kExitVerified;
    }

    if (exact_cmd->parsed()) {
        std::optional<girth4::SimpleGraph> graph;
        if (!exact_host.empty()) {
            graph.emplace(girth4::parse_host_spec(exact_host).graph());
        } else {
            const auto parts = girth4::parts_from_edgelist(read_input(exact_input));
            std::vector<girth4::Vertex> vs;
            std::vector<girth4::Edge> es;
            for (const auto& part : parts)
                for (const girth4::Edge& e : part) {
                    vs.push_back(e.a);
                    vs.push_back(e.b);
                    es.push_back(e);
                }
            graph.emplace(std::move(vs), std::move(es));
        }
        const auto answer =
            girth4::exact_girth_thickness_small(*graph, exact_girth, exact_max_parts);
        ordered_json j;
        j["girth_min"] = exact_girth;
        j["max_parts"] = exact_max_parts;
        if (answer)
            j["thickness"] = *answer;
        else
            j["thickness"] = "not_found";
        std::cout << j.dump(2) << "\n";
        return kExitVerified;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const girth4::EdgeBudgetExceeded& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const girth4::DocumentError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
}
