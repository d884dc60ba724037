#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace girth4 {

// Which class a vertex belongs to. U/V/W are the three sides of a
// tripartite vertex set; Plain is for graphs labelled by bare integers.
enum class Part : std::uint8_t { U = 0, V = 1, W = 2, Plain = 3 };

// A vertex label: part plus 1-based index. The declaration order of the
// members gives the canonical total order (U < V < W < Plain, then index).
struct PartiteVertex {
    Part part = Part::Plain;
    int index = 1;

    static PartiteVertex u(int i) { return {Part::U, i}; }
    static PartiteVertex v(int i) { return {Part::V, i}; }
    static PartiteVertex w(int i) { return {Part::W, i}; }
    static PartiteVertex plain(int i) { return {Part::Plain, i}; }

    friend auto operator<=>(const PartiteVertex&, const PartiteVertex&) = default;
};

using Vertex = PartiteVertex;

// Undirected edge, endpoints stored in canonical order. Loops are rejected.
struct Edge {
    Vertex a, b;

    Edge(Vertex x, Vertex y) : a{}, b{} {
        if (x == y)
            throw std::invalid_argument("edge endpoints must be distinct");
        a = std::min(x, y);
        b = std::max(x, y);
    }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite simple undirected graph: explicit vertex set (degree-0 vertices are
// kept) plus a set of edges whose endpoints all lie in the vertex set.
// Immutable after construction.
class SimpleGraph {
public:
    SimpleGraph() = default;

    SimpleGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges)) {
        std::sort(vertices_.begin(), vertices_.end());
        vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

        if (!vertices_.empty()) {
            const bool has_plain = vertices_.back().part == Part::Plain;
            const bool has_partite = vertices_.front().part != Part::Plain;
            if (has_plain && has_partite)
                throw std::invalid_argument("plain and partite vertices cannot share a graph");
        }

        adjacency_.assign(vertices_.size(), {});
        for (const Edge& e : edges_) {
            const std::size_t ia = index_of(e.a);
            const std::size_t ib = index_of(e.b);
            adjacency_[ia].push_back(ib);
            adjacency_[ib].push_back(ia);
        }
        for (auto& nbrs : adjacency_)
            std::sort(nbrs.begin(), nbrs.end());
    }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(const Vertex& v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    bool has_edge(const Vertex& x, const Vertex& y) const {
        return x != y && has_edge(Edge(x, y));
    }

    bool has_edge(const Edge& e) const {
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    // Position of v in the sorted vertex list.
    std::size_t index_of(const Vertex& v) const {
        const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end() || *it != v)
            throw std::invalid_argument("vertex not in graph");
        return static_cast<std::size_t>(it - vertices_.begin());
    }

    std::size_t degree(const Vertex& v) const { return adjacency_[index_of(v)].size(); }

    // Neighbour lists over vertex positions, each sorted ascending.
    const std::vector<std::vector<std::size_t>>& adjacency() const { return adjacency_; }

    friend bool operator==(const SimpleGraph& x, const SimpleGraph& y) {
        return x.vertices_ == y.vertices_ && x.edges_ == y.edges_;
    }

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

// Complete tripartite graph K_{n,n,n}: parts {u_1..u_n}, {v_1..v_n},
// {w_1..w_n}, all cross-part pairs adjacent. 3n vertices, 3n^2 edges.
inline SimpleGraph make_complete_tripartite(int n) {
    if (n < 1)
        throw std::invalid_argument("complete tripartite graph needs n >= 1");
    std::vector<Vertex> vertices;
    vertices.reserve(static_cast<std::size_t>(3 * n));
    for (Part part : {Part::U, Part::V, Part::W})
        for (int i = 1; i <= n; ++i)
            vertices.push_back({part, i});
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(3 * n) * static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            edges.emplace_back(Vertex::u(i), Vertex::v(j));
            edges.emplace_back(Vertex::u(i), Vertex::w(j));
            edges.emplace_back(Vertex::v(i), Vertex::w(j));
        }
    return SimpleGraph(std::move(vertices), std::move(edges));
}

// Complete graph K_m on plain vertices 1..m.
inline SimpleGraph make_complete(int m) {
    if (m < 1)
        throw std::invalid_argument("complete graph needs m >= 1");
    std::vector<Vertex> vertices;
    vertices.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i)
        vertices.push_back(Vertex::plain(i));
    std::vector<Edge> edges;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            edges.emplace_back(Vertex::plain(i), Vertex::plain(j));
    return SimpleGraph(std::move(vertices), std::move(edges));
}

// Host-graph descriptor. A decomposition names its host rather than carrying
// the host edge set, so a verifier can regenerate the exact edge set instead
// of trusting the input.
struct Host {
    enum class Kind { CompleteTripartite, Complete, Explicit };

    Kind kind = Kind::Explicit;
    int size = 0;                 // n for CompleteTripartite, m for Complete
    SimpleGraph explicit_graph;   // used only when kind == Explicit

    static Host complete_tripartite(int n) {
        if (n < 1)
            throw std::invalid_argument("complete tripartite host needs n >= 1");
        return {Kind::CompleteTripartite, n, {}};
    }

    static Host complete(int m) {
        if (m < 1)
            throw std::invalid_argument("complete host needs m >= 1");
        return {Kind::Complete, m, {}};
    }

    static Host explicit_host(SimpleGraph g) { return {Kind::Explicit, 0, std::move(g)}; }

    SimpleGraph graph() const {
        switch (kind) {
        case Kind::CompleteTripartite: return make_complete_tripartite(size);
        case Kind::Complete: return make_complete(size);
        case Kind::Explicit: return explicit_graph;
        }
        throw std::logic_error("unreachable");
    }

    friend bool operator==(const Host&, const Host&) = default;
};

// A host descriptor plus an ordered list of edge sets claimed to partition
// the host's edges. Construction canonicalizes each part (sorted, unique);
// whether the parts really partition the host is the verifier's business.
struct Decomposition {
    Host host;
    std::vector<std::vector<Edge>> parts;

    Decomposition(Host h, std::vector<std::vector<Edge>> p)
        : host(std::move(h)), parts(std::move(p)) {
        if (parts.empty())
            throw std::invalid_argument("decomposition needs at least one part");
        for (auto& part : parts) {
            std::sort(part.begin(), part.end());
            part.erase(std::unique(part.begin(), part.end()), part.end());
        }
    }
};

// Intermediate stages of the constructions, for tracing.
enum class Stage { G1, G2, Gbar, Ghat, Gtilde };

inline std::string stage_name(Stage s) {
    switch (s) {
    case Stage::G1: return "G1";
    case Stage::G2: return "G2";
    case Stage::Gbar: return "Gbar";
    case Stage::Ghat: return "Ghat";
    case Stage::Gtilde: return "Gtilde";
    }
    throw std::logic_error("unreachable");
}

// Snapshot of one subgraph at one construction stage.
struct ConstructionTrace {
    Stage stage = Stage::G1;
    int subgraph_index = 0;  // the i of G_i^1, Ḡ_i, ...
    std::vector<Edge> edges;
};

// Multiplicity of every edge across all parts of a decomposition.
inline std::map<Edge, int> edge_union_multiset(const Decomposition& d) {
    std::map<Edge, int> counts;
    for (const auto& part : d.parts)
        for (const Edge& e : part)
            ++counts[e];
    return counts;
}

namespace detail {

// Shorthand used throughout construction code.
inline Edge uv(int i, int j) { return Edge(Vertex::u(i), Vertex::v(j)); }
inline Edge uw(int i, int j) { return Edge(Vertex::u(i), Vertex::w(j)); }
inline Edge vw(int i, int j) { return Edge(Vertex::v(i), Vertex::w(j)); }

}  // namespace detail

}  // namespace girth4
