#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "girth4/graph.hpp"
#include "girth4/verify.hpp"

namespace girth4 {

// Any schema or grammar violation in an input document.
struct DocumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using ordered_json = nlohmann::ordered_json;

inline std::string vertex_to_string(const Vertex& x) {
    switch (x.part) {
    case Part::U: return "u" + std::to_string(x.index);
    case Part::V: return "v" + std::to_string(x.index);
    case Part::W: return "w" + std::to_string(x.index);
    case Part::Plain: return std::to_string(x.index);
    }
    throw std::logic_error("unreachable");
}

// Accepts "u<k>", "v<k>", "w<k>" or a bare decimal, k >= 1 with no leading
// zeros, nothing else.
inline Vertex vertex_from_string(const std::string& s) {
    std::size_t pos = 0;
    Part part = Part::Plain;
    if (!s.empty() && (s[0] == 'u' || s[0] == 'v' || s[0] == 'w')) {
        part = s[0] == 'u' ? Part::U : s[0] == 'v' ? Part::V : Part::W;
        pos = 1;
    }
    const std::string digits = s.substr(pos);
    const bool all_digits = !digits.empty() &&
        std::all_of(digits.begin(), digits.end(),
                    [](unsigned char c) { return std::isdigit(c) != 0; });
    if (!all_digits || digits[0] == '0')
        throw DocumentError("invalid vertex name '" + s + "'");
    int value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || value < 1)
        throw DocumentError("invalid vertex name '" + s + "'");
    return Vertex{part, value};
}

// Serializable form of a decomposition: the on-disk JSON schema.
struct DecompositionDocument {
    std::string schema_version = "1";
    Decomposition decomposition;
    int girth_min = 4;
    ordered_json metadata;  // emitted only when non-null

    explicit DecompositionDocument(Decomposition d, int girth = 4, ordered_json meta = nullptr)
        : decomposition(std::move(d)), girth_min(girth), metadata(std::move(meta)) {}
};

namespace detail {

inline ordered_json edge_to_json(const Edge& e) {
    return ordered_json::array({vertex_to_string(e.a), vertex_to_string(e.b)});
}

inline ordered_json host_to_json(const Host& host) {
    ordered_json j;
    switch (host.kind) {
    case Host::Kind::CompleteTripartite:
        j["kind"] = "complete_tripartite";
        j["n_or_m"] = host.size;
        break;
    case Host::Kind::Complete:
        j["kind"] = "complete";
        j["n_or_m"] = host.size;
        break;
    case Host::Kind::Explicit: {
        j["kind"] = "explicit";
        j["n_or_m"] = static_cast<int>(host.explicit_graph.vertex_count());
        auto vs = ordered_json::array();
        for (const Vertex& x : host.explicit_graph.vertices())
            vs.push_back(vertex_to_string(x));
        j["vertices"] = std::move(vs);
        auto es = ordered_json::array();
        for (const Edge& e : host.explicit_graph.edges())
            es.push_back(edge_to_json(e));
        j["edges"] = std::move(es);
        break;
    }
    }
    return j;
}

}  // namespace detail

inline ordered_json document_to_json(const DecompositionDocument& doc) {
    ordered_json j;
    j["schema_version"] = doc.schema_version;
    j["host"] = detail::host_to_json(doc.decomposition.host);
    j["girth_min"] = doc.girth_min;
    auto parts = ordered_json::array();
    for (const auto& part : doc.decomposition.parts) {
        auto pj = ordered_json::array();
        for (const Edge& e : part)
            pj.push_back(detail::edge_to_json(e));
        parts.push_back(std::move(pj));
    }
    j["parts"] = std::move(parts);
    if (!doc.metadata.is_null())
        j["metadata"] = doc.metadata;
    return j;
}

inline std::string document_to_string(const DecompositionDocument& doc) {
    return document_to_json(doc).dump(2) + "\n";
}

namespace detail {

inline Edge edge_from_json(const ordered_json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw DocumentError("an edge must be a pair of vertex names");
    try {
        return Edge(vertex_from_string(j[0].get<std::string>()),
                    vertex_from_string(j[1].get<std::string>()));
    } catch (const std::invalid_argument& ex) {
        throw DocumentError(ex.what());
    }
}

inline Host host_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw DocumentError("host must be an object with a string 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "complete_tripartite" || kind == "complete") {
        if (!j.contains("n_or_m") || !j["n_or_m"].is_number_integer())
            throw DocumentError("host needs an integer 'n_or_m'");
        const auto n = j["n_or_m"].get<std::int64_t>();
        if (n < 1 || n > 1000000)
            throw DocumentError("host size out of range");
        return kind == "complete" ? Host::complete(static_cast<int>(n))
                                  : Host::complete_tripartite(static_cast<int>(n));
    }
    if (kind == "explicit") {
        if (!j.contains("vertices") || !j["vertices"].is_array() || !j.contains("edges") ||
            !j["edges"].is_array())
            throw DocumentError("explicit host needs 'vertices' and 'edges' arrays");
        std::vector<Vertex> vs;
        for (const auto& vj : j["vertices"]) {
            if (!vj.is_string())
                throw DocumentError("explicit host vertices must be names");
            vs.push_back(vertex_from_string(vj.get<std::string>()));
        }
        std::vector<Edge> es;
        for (const auto& ej : j["edges"])
            es.push_back(edge_from_json(ej));
        try {
            return Host::explicit_host(SimpleGraph(std::move(vs), std::move(es)));
        } catch (const std::invalid_argument& ex) {
            throw DocumentError(ex.what());
        }
    }
    throw DocumentError("unknown host kind '" + kind + "'");
}

inline void check_vertex_matches_host(const Vertex& x, const Host& host) {
    if (host.kind == Host::Kind::CompleteTripartite && x.part == Part::Plain)
        throw DocumentError("tripartite hosts use u/v/w vertex names");
    if (host.kind == Host::Kind::Complete && x.part != Part::Plain)
        throw DocumentError("complete hosts use integer vertex names");
}

}  // namespace detail

inline DecompositionDocument document_from_json(const ordered_json& j) {
    if (!j.is_object())
        throw DocumentError("document must be a JSON object");
    if (!j.contains("schema_version") || !j["schema_version"].is_string() ||
        j["schema_version"].get<std::string>() != "1")
        throw DocumentError("unsupported schema_version");
    if (!j.contains("host"))
        throw DocumentError("document needs a 'host'");
    const Host host = detail::host_from_json(j["host"]);

    int girth_min = 4;
    if (j.contains("girth_min")) {
        if (!j["girth_min"].is_number_integer())
            throw DocumentError("girth_min must be an integer");
        girth_min = j["girth_min"].get<int>();
        if (girth_min < 3)
            throw DocumentError("girth_min must be at least 3");
    }

    if (!j.contains("parts") || !j["parts"].is_array() || j["parts"].empty())
        throw DocumentError("document needs a non-empty 'parts' array");
    std::vector<std::vector<Edge>> parts;
    for (const auto& pj : j["parts"]) {
        if (!pj.is_array())
            throw DocumentError("each part must be an array of edges");
        std::vector<Edge> part;
        std::set<Edge> seen;
        for (const auto& ej : pj) {
            const Edge e = detail::edge_from_json(ej);
            detail::check_vertex_matches_host(e.a, host);
            detail::check_vertex_matches_host(e.b, host);
            if (!seen.insert(e).second)
                throw DocumentError("duplicate edge within a part");
            part.push_back(e);
        }
        parts.push_back(std::move(part));
    }

    ordered_json metadata = nullptr;
    if (j.contains("metadata"))
        metadata = j["metadata"];

    return DecompositionDocument(Decomposition(host, std::move(parts)), girth_min,
                                 std::move(metadata));
}

inline DecompositionDocument document_from_json_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw DocumentError(std::string("invalid JSON: ") + ex.what());
    }
    return document_from_json(j);
}

// Edge-list text format: one "a b" line per edge, parts separated by a
// literal "--" line. Canonical order throughout, so output is diffable.
inline std::string parts_to_edgelist(const std::vector<std::vector<Edge>>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0)
            out += "--\n";
        for (const Edge& e : parts[i])
            out += vertex_to_string(e.a) + " " + vertex_to_string(e.b) + "\n";
    }
    return out;
}

inline std::vector<std::vector<Edge>> parts_from_edgelist(const std::string& text) {
    std::vector<std::vector<Edge>> parts(1);
    std::vector<std::set<Edge>> seen(1);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a))
            continue;  // blank line
        if (a == "--") {
            if (ls >> extra)
                throw DocumentError("malformed part separator");
            parts.emplace_back();
            seen.emplace_back();
            continue;
        }
        if (!(ls >> b) || (ls >> extra))
            throw DocumentError("edge lines must be 'a b': '" + line + "'");
        Edge e = [&] {
            try {
                return Edge(vertex_from_string(a), vertex_from_string(b));
            } catch (const std::invalid_argument& ex) {
                throw DocumentError(ex.what());
            }
        }();
        if (!seen.back().insert(e).second)
            throw DocumentError("duplicate edge within a part");
        parts.back().push_back(e);
    }
    return parts;
}

// DOT export: one subgraph block per part, one edge statement per edge.
inline std::string document_to_dot(const DecompositionDocument& doc) {
    std::string out = "graph decomposition {\n";
    for (std::size_t i = 0; i < doc.decomposition.parts.size(); ++i) {
        out += "  subgraph part_" + std::to_string(i + 1) + " {\n";
        for (const Edge& e : doc.decomposition.parts[i])
            out += "    \"" + vertex_to_string(e.a) + "\" -- \"" + vertex_to_string(e.b) +
                   "\";\n";
        out += "  }\n";
    }
    out += "}\n";
    return out;
}

// Host given on a command line: "complete_tripartite:4" or "complete:10".
inline Host parse_host_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw DocumentError("host spec must look like 'complete_tripartite:4'");
    const std::string kind = spec.substr(0, colon);
    const std::string num = spec.substr(colon + 1);
    ordered_json j;
    j["kind"] = kind;
    std::int64_t size = 0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), size);
    if (num.empty() || ec != std::errc() || ptr != num.data() + num.size())
        throw DocumentError("host spec size must be a positive integer");
    j["n_or_m"] = size;
    return detail::host_from_json(j);
}

inline const char* coverage_status_name(CoverageStatus s) {
    switch (s) {
    case CoverageStatus::ExactPartition: return "exact_partition";
    case CoverageStatus::MissingEdges: return "missing_edges";
    case CoverageStatus::DuplicatedEdges: return "duplicated_edges";
    case CoverageStatus::ForeignEdges: return "foreign_edges";
    }
    throw std::logic_error("unreachable");
}

inline ordered_json report_to_json(const VerificationReport& report) {
    ordered_json j;
    j["host_edge_count"] = report.host_edge_count;
    auto parts = ordered_json::array();
    for (const PartReport& pr : report.per_part) {
        ordered_json pj;
        pj["edge_count"] = pr.edge_count;
        pj["is_planar"] = pr.is_planar;
        if (pr.girth.is_finite())
            pj["girth"] = *pr.girth.value;
        else
            pj["girth"] = "infinite";
        pj["girth_ok"] = pr.girth_ok;
        parts.push_back(std::move(pj));
    }
    j["per_part"] = std::move(parts);
    ordered_json cov;
    cov["status"] = coverage_status_name(report.coverage.status());
    const auto edge_array = [](const std::vector<Edge>& edges) {
        auto arr = ordered_json::array();
        for (const Edge& e : edges)
            arr.push_back(detail::edge_to_json(e));
        return arr;
    };
    cov["missing"] = edge_array(report.coverage.missing);
    cov["duplicated"] = edge_array(report.coverage.duplicated);
    cov["foreign"] = edge_array(report.coverage.foreign);
    j["coverage"] = std::move(cov);
    j["verdict"] = report.verdict;
    return j;
}

}  // namespace girth4
