#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "girth4/graph.hpp"
#include "girth4/metrics.hpp"
#include "girth4/planarity.hpp"

namespace girth4 {

enum class CoverageStatus { ExactPartition, MissingEdges, DuplicatedEdges, ForeignEdges };

// How the union of the parts compares with the regenerated host edge set.
// Foreign edges are the gravest defect, then duplicates, then gaps.
struct Coverage {
    std::vector<Edge> missing;     // host edges in no part
    std::vector<Edge> duplicated;  // edges in more than one part
    std::vector<Edge> foreign;     // part edges that are not host edges

    bool exact() const { return missing.empty() && duplicated.empty() && foreign.empty(); }

    CoverageStatus status() const {
        if (!foreign.empty())
            return CoverageStatus::ForeignEdges;
        if (!duplicated.empty())
            return CoverageStatus::DuplicatedEdges;
        if (!missing.empty())
            return CoverageStatus::MissingEdges;
        return CoverageStatus::ExactPartition;
    }
};

struct PartReport {
    std::size_t edge_count = 0;
    bool is_planar = false;
    GirthValue girth = GirthValue::infinite();
    bool girth_ok = false;
};

struct VerificationReport {
    std::size_t host_edge_count = 0;
    std::vector<PartReport> per_part;
    Coverage coverage;
    bool verdict = false;
};

// Machine-check a claimed decomposition: regenerate the host from its
// descriptor, compare edge coverage, and test every part for planarity and
// girth (all parts are analyzed even after a failure, for diagnosability).
inline VerificationReport verify_decomposition(const Decomposition& d, int girth_min) {
    if (girth_min < 3)
        throw std::invalid_argument("girth_min must be at least 3");
    const SimpleGraph host = d.host.graph();

    VerificationReport report;
    report.host_edge_count = host.edge_count();

    const std::map<Edge, int> counts = edge_union_multiset(d);
    for (const auto& [edge, count] : counts) {
        if (!host.has_edge(edge))
            report.coverage.foreign.push_back(edge);
        else if (count > 1)
            report.coverage.duplicated.push_back(edge);
    }
    for (const Edge& e : host.edges())
        if (!counts.count(e))
            report.coverage.missing.push_back(e);

    // Parts live on the full host vertex set plus any stray endpoints. An
    // edge whose endpoints cannot coexist with the host's vertex flavour is
    // already reported foreign and is left out of the part subgraph.
    std::optional<Part> flavour;
    if (!host.vertices().empty())
        flavour = host.vertices().front().part == Part::Plain ? Part::Plain : Part::U;
    const auto compatible = [&flavour](const Vertex& x) {
        if (!flavour)
            return true;
        return (*flavour == Part::Plain) == (x.part == Part::Plain);
    };

    bool parts_ok = true;
    for (const auto& part : d.parts) {
        std::vector<Vertex> vs = host.vertices();
        std::vector<Edge> es;
        for (const Edge& e : part) {
            const bool internal_mix = (e.a.part == Part::Plain) != (e.b.part == Part::Plain);
            if (internal_mix || !compatible(e.a) || !compatible(e.b))
                continue;
            vs.push_back(e.a);
            vs.push_back(e.b);
            es.push_back(e);
        }
        const SimpleGraph pg(std::move(vs), std::move(es));

        PartReport pr;
        pr.edge_count = part.size();
        pr.is_planar = girth4::is_planar(pg).is_planar;
        pr.girth = girth4::girth(pg);
        pr.girth_ok = pr.girth.at_least(girth_min);
        parts_ok = parts_ok && pr.is_planar && pr.girth_ok;
        report.per_part.push_back(pr);
    }

    report.verdict = report.coverage.exact() && parts_ok;
    return report;
}

// The oracle refuses graphs beyond its configured edge budget.
struct EdgeBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Is the class (given as edges) planar with girth >= girth_min? Checked from
// scratch on every call; fine at oracle scale.
inline bool class_admissible(const std::vector<Edge>& edges, int girth_min) {
    std::vector<Vertex> vs;
    for (const Edge& e : edges) {
        vs.push_back(e.a);
        vs.push_back(e.b);
    }
    const SimpleGraph g(std::move(vs), edges);
    if (g.vertex_count() >= 3 &&
        static_cast<std::int64_t>(g.edge_count()) >
            max_planar_edges(static_cast<std::int64_t>(g.vertex_count()), girth_min))
        return false;
    return girth_at_least(g, girth_min) && girth4::is_planar(g).is_planar;
}

// Can edges[next..] be distributed so that at most k classes are used in
// total? Classes are opened in canonical order (class t+1 only after 1..t),
// which removes the k! labelling symmetry.
inline bool partition_search(const std::vector<Edge>& edges, std::size_t next,
                             std::vector<std::vector<Edge>>& classes, std::size_t k,
                             int girth_min) {
    if (next == edges.size())
        return true;
    const std::size_t open = classes.size();
    for (std::size_t c = 0; c < std::min(open + 1, k); ++c) {
        if (c == open)
            classes.emplace_back();
        classes[c].push_back(edges[next]);
        if (class_admissible(classes[c], girth_min) &&
            partition_search(edges, next + 1, classes, k, girth_min))
            return true;
        classes[c].pop_back();
        if (c == open)
            classes.pop_back();
    }
    return false;
}

}  // namespace detail

// Exact g-girth-thickness by exhaustive canonical partition search, valid
// only up to the edge budget. Returns the least k <= max_parts admitting a
// partition into k planar classes of girth >= girth_min, or nothing if no
// such k exists. An edgeless graph needs zero parts.
inline std::optional<int> exact_girth_thickness_small(const SimpleGraph& g, int girth_min,
                                                      int max_parts,
                                                      std::size_t edge_budget = 16) {
    if (girth_min < 3)
        throw std::invalid_argument("girth_min must be at least 3");
    if (max_parts < 1)
        throw std::invalid_argument("max_parts must be at least 1");
    if (g.edge_count() > edge_budget)
        throw EdgeBudgetExceeded("graph exceeds the exhaustive-search edge budget");
    if (g.edge_count() == 0)
        return 0;

    for (int k = 1; k <= max_parts; ++k) {
        std::vector<std::vector<Edge>> classes;
        if (detail::partition_search(g.edges(), 0, classes, static_cast<std::size_t>(k),
                                     girth_min))
            return k;
    }
    return std::nullopt;
}

}  // namespace girth4
