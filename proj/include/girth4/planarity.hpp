#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "girth4/graph.hpp"

namespace girth4 {

// Combinatorial embedding: for each vertex, its neighbours in cyclic order.
using RotationSystem = std::map<Vertex, std::vector<Vertex>>;

struct PlanarityResult {
    bool is_planar = false;
    std::optional<RotationSystem> embedding;   // present iff is_planar
    std::optional<std::vector<Edge>> witness;  // K_5/K_{3,3} subdivision, only on request
};

namespace detail {

// Component label per vertex position; returns the number of components.
inline std::size_t component_labels(const SimpleGraph& g, std::vector<int>& label) {
    const auto& adj = g.adjacency();
    label.assign(g.vertex_count(), -1);
    std::size_t count = 0;
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < label.size(); ++s) {
        if (label[s] != -1)
            continue;
        label[s] = static_cast<int>(count);
        stack.push_back(s);
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t y : adj[x])
                if (label[y] == -1) {
                    label[y] = static_cast<int>(count);
                    stack.push_back(y);
                }
        }
        ++count;
    }
    return count;
}

// Orbits of the face-tracing permutation: from dart (t, h), the next dart
// leaves h towards the successor of t in the rotation at h. Requires the
// rotation to cover every vertex's neighbourhood exactly; throws otherwise.
inline std::size_t face_orbits(const SimpleGraph& g, const RotationSystem& rotation) {
    for (const auto& [vtx, _] : rotation)
        if (!g.has_vertex(vtx))
            throw std::invalid_argument("rotation mentions a vertex not in the graph");

    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::size_t>> rot(n);           // neighbour positions, cyclic order
    std::vector<std::map<std::size_t, std::size_t>> at(n);  // neighbour position -> slot in rot
    for (std::size_t x = 0; x < n; ++x) {
        const Vertex vx = g.vertices()[x];
        std::vector<Vertex> order;
        if (const auto it = rotation.find(vx); it != rotation.end())
            order = it->second;
        const auto& nbrs = g.adjacency()[x];
        if (order.size() != nbrs.size())
            throw std::invalid_argument("rotation does not cover the edges of the graph");
        for (const Vertex& nb : order) {
            const std::size_t y = g.index_of(nb);
            if (!std::binary_search(nbrs.begin(), nbrs.end(), y) || at[x].count(y))
                throw std::invalid_argument("rotation does not cover the edges of the graph");
            at[x].emplace(y, rot[x].size());
            rot[x].push_back(y);
        }
    }

    // Darts indexed by (tail slot in rot): dart_id = base[tail] + slot.
    std::vector<std::size_t> base(n + 1, 0);
    for (std::size_t x = 0; x < n; ++x)
        base[x + 1] = base[x] + rot[x].size();
    std::vector<bool> seen(base[n], false);

    std::size_t orbits = 0;
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t slot = 0; slot < rot[t].size(); ++slot) {
            if (seen[base[t] + slot])
                continue;
            ++orbits;
            std::size_t ct = t, cs = slot;
            while (!seen[base[ct] + cs]) {
                seen[base[ct] + cs] = true;
                const std::size_t h = rot[ct][cs];
                const std::size_t next = (at[h].at(ct) + 1) % rot[h].size();
                ct = h;
                cs = next;
            }
        }
    return orbits;
}

}  // namespace detail

// Faces of the plane drawing described by the rotation system, with all
// components sharing one outer face. Throws if the rotation does not cover
// the graph's edges exactly.
inline std::size_t count_faces(const SimpleGraph& g, const RotationSystem& rotation) {
    std::vector<int> label;
    const std::size_t components = detail::component_labels(g, label);
    const std::size_t orbits = detail::face_orbits(g, rotation);
    std::size_t isolated = 0;
    for (std::size_t x = 0; x < g.vertex_count(); ++x)
        if (g.adjacency()[x].empty())
            ++isolated;
    // Per component: orbit count (or 1 if the component is a single vertex).
    // Gluing components into one plane merges their outer faces.
    return orbits + isolated + 1 - components;
}

// True iff the rotation system describes a planar embedding: face tracing
// must satisfy Euler's relation V - E + F = 1 + C.
inline bool validate_embedding(const SimpleGraph& g, const RotationSystem& rotation) {
    const std::size_t faces = count_faces(g, rotation);
    const long long v = static_cast<long long>(g.vertex_count());
    const long long e = static_cast<long long>(g.edge_count());
    std::vector<int> label;
    const long long c = static_cast<long long>(detail::component_labels(g, label));
    return v - e + static_cast<long long>(faces) == 1 + c;
}

namespace detail {

// All cyclic orders of a neighbour list (first element pinned).
inline std::vector<std::vector<std::size_t>> cyclic_orders(std::vector<std::size_t> nbrs) {
    if (nbrs.size() < 3)
        return {nbrs};
    std::vector<std::vector<std::size_t>> orders;
    std::sort(nbrs.begin() + 1, nbrs.end());
    do {
        orders.push_back(nbrs);
    } while (std::next_permutation(nbrs.begin() + 1, nbrs.end()));
    return orders;
}

// Planar rotation for one small connected graph, by exhausting cyclic orders
// and checking Euler's relation on the traced faces. Callers guarantee a
// planar input (any graph on <= 4 vertices qualifies).
inline RotationSystem brute_force_embedding(const SimpleGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::vector<std::size_t>>> choices(n);
    for (std::size_t x = 0; x < n; ++x)
        choices[x] = cyclic_orders(g.adjacency()[x]);

    std::vector<std::size_t> pick(n, 0);
    while (true) {
        RotationSystem rotation;
        for (std::size_t x = 0; x < n; ++x) {
            std::vector<Vertex> order;
            for (std::size_t y : choices[x][pick[x]])
                order.push_back(g.vertices()[y]);
            rotation.emplace(g.vertices()[x], std::move(order));
        }
        if (validate_embedding(g, rotation))
            return rotation;

        std::size_t x = 0;
        while (x < n && ++pick[x] == choices[x].size())
            pick[x++] = 0;
        if (x == n)
            throw std::logic_error("no planar rotation found for a small graph");
    }
}

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

// Boyer–Myrvold on one connected component (given as vertex positions of g).
// On success appends the component's rotations; on failure fills `witness`
// when requested.
inline bool planar_component(const SimpleGraph& g, const std::vector<std::size_t>& members,
                             RotationSystem& rotation, bool extract_witness,
                             std::vector<Edge>& witness) {
    std::map<std::size_t, std::size_t> local;  // g position -> component position
    for (std::size_t i = 0; i < members.size(); ++i)
        local.emplace(members[i], i);

    BoostGraph bg(members.size());
    std::vector<Edge> by_index;
    for (std::size_t x : members)
        for (std::size_t y : g.adjacency()[x])
            if (x < y) {
                boost::add_edge(local.at(x), local.at(y),
                                static_cast<int>(by_index.size()), bg);
                by_index.emplace_back(g.vertices()[x], g.vertices()[y]);
            }

    using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> storage(boost::num_vertices(bg));
    auto embedding = boost::make_iterator_property_map(storage.begin(),
                                                       boost::get(boost::vertex_index, bg));
    std::vector<EdgeDesc> kuratowski;
    const auto index_map = boost::get(boost::edge_index, bg);

    bool ok;
    if (extract_witness)
        ok = boost::boyer_myrvold_planarity_test(
            boost::boyer_myrvold_params::graph = bg,
            boost::boyer_myrvold_params::embedding = embedding,
            boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
    else
        ok = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                 boost::boyer_myrvold_params::embedding =
                                                     embedding);

    if (!ok) {
        for (const EdgeDesc& ed : kuratowski)
            witness.push_back(by_index[static_cast<std::size_t>(boost::get(index_map, ed))]);
        std::sort(witness.begin(), witness.end());
        witness.erase(std::unique(witness.begin(), witness.end()), witness.end());
        return false;
    }

    for (std::size_t i = 0; i < members.size(); ++i) {
        const Vertex self = g.vertices()[members[i]];
        std::vector<Vertex> order;
        for (const EdgeDesc& ed : storage[i]) {
            const std::size_t a = boost::source(ed, bg), b = boost::target(ed, bg);
            order.push_back(g.vertices()[members[a == i ? b : a]]);
        }
        rotation.emplace(self, std::move(order));
    }
    return true;
}

}  // namespace detail

// Planarity test. Components are tested independently; components on <= 4
// vertices are planar outright (their rotation is found by brute force), the
// rest go through Boyer–Myrvold. On planar inputs the embedding is always
// produced and self-validates; on non-planar inputs a Kuratowski-subdivision
// witness is extracted only when asked for.
inline PlanarityResult is_planar(const SimpleGraph& g, bool extract_witness = false) {
    std::vector<int> label;
    const std::size_t components = detail::component_labels(g, label);
    std::vector<std::vector<std::size_t>> members(components);
    for (std::size_t x = 0; x < label.size(); ++x)
        members[static_cast<std::size_t>(label[x])].push_back(x);

    RotationSystem rotation;
    for (const auto& comp : members) {
        if (comp.size() <= 4) {
            std::vector<Vertex> vs;
            std::vector<Edge> es;
            for (std::size_t x : comp) {
                vs.push_back(g.vertices()[x]);
                for (std::size_t y : g.adjacency()[x])
                    if (x < y)
                        es.emplace_back(g.vertices()[x], g.vertices()[y]);
            }
            for (auto& [vtx, order] : detail::brute_force_embedding(SimpleGraph(vs, es)))
                rotation.emplace(vtx, std::move(order));
            continue;
        }
        std::vector<Edge> witness;
        if (!detail::planar_component(g, comp, rotation, extract_witness, witness)) {
            PlanarityResult result;
            result.is_planar = false;
            if (extract_witness)
                result.witness = std::move(witness);
            return result;
        }
    }

    PlanarityResult result;
    result.is_planar = true;
    result.embedding = std::move(rotation);
    return result;
}

// True iff the edge set is exactly a subdivision of K_5 or K_{3,3}:
// discard isolated/leaf vertices, suppress degree-2 vertices, then compare
// with the two Kuratowski graphs.
inline bool is_kuratowski_subdivision(const std::vector<Edge>& edges) {
    std::map<Vertex, std::set<Vertex>> adj;
    for (const Edge& e : edges) {
        if (adj[e.a].count(e.b))
            return false;  // duplicate edge in the list
        adj[e.a].insert(e.b);
        adj[e.b].insert(e.a);
    }

    const auto drop = [&adj](const Vertex& x) {
        for (const Vertex& y : adj[x])
            adj[y].erase(x);
        adj.erase(x);
    };

    // Trim vertices of degree <= 1, then suppress degree-2 vertices. A
    // suppression that would create a loop or a parallel edge disqualifies
    // the input.
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = adj.begin(); it != adj.end();) {
            if (it->second.size() <= 1) {
                const Vertex x = it->first;
                ++it;
                drop(x);
                changed = true;
            } else {
                ++it;
            }
        }
        for (auto it = adj.begin(); it != adj.end();) {
            if (it->second.size() == 2) {
                const Vertex x = it->first;
                const Vertex a = *it->second.begin();
                const Vertex b = *std::next(it->second.begin());
                if (adj[a].count(b))
                    return false;  // suppressing x would duplicate edge {a,b}
                ++it;
                drop(x);
                adj[a].insert(b);
                adj[b].insert(a);
                changed = true;
            } else {
                ++it;
            }
        }
    }

    if (adj.size() == 5) {  // K_5: every degree 4
        for (const auto& [_, nbrs] : adj)
            if (nbrs.size() != 4)
                return false;
        return true;
    }
    if (adj.size() == 6) {  // K_{3,3}: 3-regular and complete bipartite
        for (const auto& [_, nbrs] : adj)
            if (nbrs.size() != 3)
                return false;
        const auto& [first, side_b] = *adj.begin();
        std::set<Vertex> side_a{first};
        for (const auto& [vtx, _] : adj)
            if (!side_b.count(vtx))
                side_a.insert(vtx);
        if (side_a.size() != 3 || side_b.size() != 3)
            return false;
        for (const Vertex& x : side_a)
            for (const Vertex& y : side_b)
                if (!adj.at(x).count(y))
                    return false;
        return true;
    }
    return false;
}

}  // namespace girth4
