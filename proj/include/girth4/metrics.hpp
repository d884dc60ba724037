#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>

#include "girth4/graph.hpp"

namespace girth4 {

// Girth of a graph: length of a shortest cycle, or infinite for forests.
struct GirthValue {
    std::optional<int> value;  // empty means no cycle exists

    static GirthValue finite(int g) {
        if (g < 3)
            throw std::invalid_argument("finite girth is at least 3");
        return {g};
    }
    static GirthValue infinite() { return {std::nullopt}; }

    bool is_finite() const { return value.has_value(); }

    // True when every cycle (if any) has length >= threshold.
    bool at_least(int threshold) const { return !value || *value >= threshold; }

    friend bool operator==(const GirthValue&, const GirthValue&) = default;
};

// Exact girth via one BFS per start vertex. For the BFS rooted at r, a
// non-tree edge {u,x} with x != parent(u) closes a cycle through r of length
// dist(u) + dist(x) + 1; the minimum over all roots and all such edges is the
// girth. Stops early once a triangle is seen, since no shorter cycle exists.
inline GirthValue girth(const SimpleGraph& g) {
    const auto& adj = g.adjacency();
    const std::size_t n = g.vertex_count();
    int best = std::numeric_limits<int>::max();

    std::vector<int> dist(n), parent(n);
    for (std::size_t root = 0; root < n && best > 3; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<std::size_t> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            // Vertices at depth >= best/2 cannot improve the best cycle.
            if (2 * dist[u] >= best - 1)
                continue;
            for (std::size_t x : adj[u]) {
                if (dist[x] == -1) {
                    dist[x] = dist[u] + 1;
                    parent[x] = static_cast<int>(u);
                    queue.push_back(x);
                } else if (static_cast<int>(x) != parent[u]) {
                    best = std::min(best, dist[u] + dist[x] + 1);
                }
            }
        }
    }

    if (best == std::numeric_limits<int>::max())
        return GirthValue::infinite();
    return GirthValue::finite(best);
}

// True when g has no cycle shorter than threshold (threshold >= 3).
inline bool girth_at_least(const SimpleGraph& g, int threshold) {
    if (threshold < 3)
        throw std::invalid_argument("girth threshold must be at least 3");
    return girth(g).at_least(threshold);
}

// Maximum edge count of a planar graph on v vertices with girth >= g:
// floor(g (v-2) / (g-2)). Requires v >= 3 and g >= 3.
inline std::int64_t max_planar_edges(std::int64_t v, std::int64_t g) {
    if (v < 3)
        throw std::invalid_argument("max_planar_edges needs v >= 3");
    if (g < 3)
        throw std::invalid_argument("max_planar_edges needs g >= 3");
    return g * (v - 2) / (g - 2);
}

// Counting bound: any decomposition of K_{n,n,n} (3n^2 edges, 3n vertices)
// into planar parts of girth >= 4 needs at least
// ceil(3n^2 / (2 (3n - 2))) parts. Requires n >= 2.
inline std::int64_t lower_bound_theta4_knnn(std::int64_t n) {
    if (n < 2)
        throw std::invalid_argument("lower_bound_theta4_knnn needs n >= 2");
    const std::int64_t num = 3 * n * n;
    const std::int64_t den = 2 * (3 * n - 2);
    return (num + den - 1) / den;
}

// Exact 4-girth thickness of K_{n,n,n}: ceil((n+1)/2) for n >= 2, and 2 for
// the exceptional n = 1.
inline std::int64_t theta4_knnn(std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("theta4_knnn needs n >= 1");
    if (n == 1)
        return 2;
    return (n + 2) / 2;
}

}  // namespace girth4
