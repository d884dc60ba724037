#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "girth4/graph.hpp"

namespace girth4 {

// Representative of k modulo m in {1..m} (so index 0 means m, -1 means m-1).
inline int wrap_index(int k, int modulus) {
    if (modulus < 1)
        throw std::invalid_argument("wrap_index needs a positive modulus");
    return (k - 1) % modulus >= 0 ? (k - 1) % modulus + 1
                                  : (k - 1) % modulus + modulus + 1;
}

// For the odd case: e(i) is the even index such that u_{2p+1} is joined to
// w_{2i-1} and w_{e(i)} inside the i-th subgraph. Bijection onto {2,4,..,2p}
// with e(i) != 2i for every i.
using EvenTargetMap = std::map<int, int>;

inline EvenTargetMap even_target_map(int p) {
    if (p < 2)
        throw std::invalid_argument("even_target_map needs p >= 2");
    EvenTargetMap e;
    for (int i = 1; i <= p; ++i)
        e[i] = wrap_index(2 * p - 2 * i + 2, 2 * p);
    // For odd p the raw map hits e(i0) = 2i0 at i0 = (p+1)/2, naming a
    // vertex that is not interior to the face used; swapping the values at
    // i0 and i0+1 keeps the bijection and restores e(i) != 2i.
    if (p % 2 == 1) {
        const int i0 = (p + 1) / 2;
        std::swap(e.at(i0), e.at(i0 + 1));
    }
    return e;
}

// Case selection and derived parameters for construct(n).
struct KnnnConstructionParams {
    enum class Case { Trivial1, Stored3, Even, Odd };

    int n = 1;
    int p = 0;  // n = 2p or n = 2p+1
    bool emit_trace = false;

    static KnnnConstructionParams for_n(int n, bool emit_trace = false) {
        if (n < 1)
            throw std::invalid_argument("construct needs n >= 1");
        return {n, n / 2, emit_trace};
    }

    Case selected_case() const {
        if (n == 1)
            return Case::Trivial1;
        if (n == 3)
            return Case::Stored3;
        return n % 2 == 0 ? Case::Even : Case::Odd;
    }
};

struct ConstructionResult {
    Decomposition decomposition;
    std::vector<ConstructionTrace> trace;  // stage snapshots, empty unless requested
};

namespace detail {

inline std::vector<Edge> sorted_copy(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace detail

// Decomposition of K_{2p,2p,2p} into p+1 parts. For i = 1..p, part i is
// grown in three steps: the 4p-cycle on U and V with V-offsets 2-2i and
// 1-2i (G_i^1); the hubs w_{2i-1} joined to all of U and w_{2i} to all of V
// (G_i^2); and, for every other index pair j, the remaining hubs w_{2j} and
// w_{2j-1} joined to u_{2i-1}, u_{2i} and v_{2i-1}, v_{2i} respectively
// (Gbar_i). Part p+1 picks up the leftover hub-to-neighbour pairs.
inline ConstructionResult construct_even(int p, bool emit_trace = false) {
    using detail::uv;
    using detail::uw;
    using detail::vw;
    if (p < 1)
        throw std::invalid_argument("construct_even needs p >= 1");
    const int m = 2 * p;

    std::vector<std::vector<Edge>> parts;
    std::vector<ConstructionTrace> trace;
    for (int i = 1; i <= p; ++i) {
        std::vector<Edge> edges;
        for (int j = 1; j <= m; ++j) {
            edges.push_back(uv(j, wrap_index(j + 2 - 2 * i, m)));
            edges.push_back(uv(j, wrap_index(j + 1 - 2 * i, m)));
        }
        if (emit_trace)
            trace.push_back({Stage::G1, i, detail::sorted_copy(edges)});

        for (int j = 1; j <= m; ++j) {
            edges.push_back(uw(j, 2 * i - 1));
            edges.push_back(vw(j, 2 * i));
        }
        if (emit_trace)
            trace.push_back({Stage::G2, i, detail::sorted_copy(edges)});

        for (int j = 1; j <= p; ++j) {
            if (j == i)
                continue;
            edges.push_back(uw(2 * i - 1, 2 * j));
            edges.push_back(uw(2 * i, 2 * j));
            edges.push_back(vw(2 * i - 1, 2 * j - 1));
            edges.push_back(vw(2 * i, 2 * j - 1));
        }
        if (emit_trace)
            trace.push_back({Stage::Gbar, i, detail::sorted_copy(edges)});
        parts.push_back(std::move(edges));
    }

    std::vector<Edge> last;
    for (int i = 1; i <= p; ++i) {
        last.push_back(vw(2 * i - 1, 2 * i - 1));
        last.push_back(vw(2 * i, 2 * i - 1));
        last.push_back(uw(2 * i - 1, 2 * i));
        last.push_back(uw(2 * i, 2 * i));
    }
    if (emit_trace)
        trace.push_back({Stage::Gbar, p + 1, detail::sorted_copy(last)});
    parts.push_back(std::move(last));

    return {Decomposition(Host::complete_tripartite(m), std::move(parts)), std::move(trace)};
}

// Decomposition of K_{2p+1,2p+1,2p+1} (p >= 2), grown from the even case by
// distributing the three new vertices u_s, v_s, w_s (s = 2p+1): u_s lands in
// every part i <= p next to w_{2i-1} and w_{e(i)} (Ghat_i); v_s and w_s land
// in part 1 (which trades away the edge v_1u_2 to stay planar) and pick up
// two neighbours per remaining part; part p+1 absorbs everything left.
inline ConstructionResult construct_odd(int p, bool emit_trace = false) {
    using detail::uv;
    using detail::uw;
    using detail::vw;
    if (p < 2)
        throw std::invalid_argument("construct_odd needs p >= 2");
    const int m = 2 * p, s = 2 * p + 1;

    ConstructionResult base = construct_even(p, emit_trace);
    std::vector<std::vector<Edge>> parts = std::move(base.decomposition.parts);
    std::vector<ConstructionTrace> trace = std::move(base.trace);
    const EvenTargetMap e = even_target_map(p);

    for (int i = 1; i <= p; ++i) {
        auto& part = parts[static_cast<std::size_t>(i - 1)];
        part.push_back(uw(s, 2 * i - 1));
        part.push_back(uw(s, e.at(i)));
        if (emit_trace)
            trace.push_back({Stage::Ghat, i, detail::sorted_copy(part)});
    }

    for (int i = 1; i <= p; ++i) {
        auto& part = parts[static_cast<std::size_t>(i - 1)];
        part.push_back(uv(2 * i - 1, s));
        part.push_back(uv(2 * i, s));
        part.push_back(vw(2 * i - 1, s));
        part.push_back(vw(2 * i, s));
        if (i == 1) {
            part.erase(std::remove(part.begin(), part.end(), uv(2, 1)), part.end());
            part.push_back(vw(s, s));
        }
        if (emit_trace)
            trace.push_back({Stage::Gtilde, i, detail::sorted_copy(part)});
    }

    auto& last = parts.back();
    for (int j = 1; j <= m; ++j) {
        last.push_back(uv(s, j));
        last.push_back(vw(s, j));
        last.push_back(uw(j, s));
    }
    last.push_back(uv(s, s));
    last.push_back(uw(s, s));
    last.push_back(uv(2, 1));
    if (emit_trace)
        trace.push_back({Stage::Gtilde, p + 1, detail::sorted_copy(last)});

    return {Decomposition(Host::complete_tripartite(s), std::move(parts)), std::move(trace)};
}

// The two hand-checked cases: K_{1,1,1} is a triangle and needs a 2-edge
// path plus a single edge; K_{3,3,3} uses a stored pair of parts.
inline Decomposition construct_special(int n) {
    using detail::uv;
    using detail::uw;
    using detail::vw;
    if (n == 1)
        return Decomposition(Host::complete_tripartite(1),
                             {{uv(1, 1), vw(1, 1)}, {uw(1, 1)}});
    if (n == 3) {
        const std::vector<Edge> d1 = {
            uv(1, 1), uv(2, 2), uv(1, 2), uw(1, 1), uw(2, 1), vw(1, 2), vw(2, 2),
            vw(1, 3), vw(2, 3), uv(1, 3), uv(2, 3), uw(3, 1), uv(3, 3), vw(3, 3),
        };
        const std::vector<Edge> d2 = {
            uw(1, 2), uw(2, 2), uv(2, 1), vw(1, 1), vw(2, 1), uw(3, 2),
            vw(3, 2), vw(3, 1), uw(1, 3), uw(2, 3), uv(3, 1), uv(3, 2), uw(3, 3),
        };
        return Decomposition(Host::complete_tripartite(3), {d1, d2});
    }
    throw std::invalid_argument("construct_special handles only n = 1 and n = 3");
}

// The general constructor: trivial/stored small cases, otherwise the even
// construction (n = 2p) or the odd one (n = 2p+1 >= 5). Always theta4_knnn(n)
// parts.
inline Decomposition construct(int n) {
    const auto params = KnnnConstructionParams::for_n(n);
    switch (params.selected_case()) {
    case KnnnConstructionParams::Case::Trivial1: return construct_special(1);
    case KnnnConstructionParams::Case::Stored3: return construct_special(3);
    case KnnnConstructionParams::Case::Even:
        return construct_even(params.p).decomposition;
    case KnnnConstructionParams::Case::Odd:
        return construct_odd(params.p).decomposition;
    }
    throw std::logic_error("unreachable");
}

// Stored decomposition of K_10 into three planar parts of girth >= 4.
inline Decomposition k10_decomposition() {
    const auto pe = [](int a, int b) { return Edge(Vertex::plain(a), Vertex::plain(b)); };
    const std::vector<Edge> p1 = {
        pe(1, 2), pe(2, 4), pe(3, 4), pe(5, 6), pe(6, 8),  pe(7, 8),  pe(1, 6), pe(2, 8),
        pe(4, 7), pe(2, 9), pe(3, 9), pe(5, 9), pe(5, 10), pe(8, 10), pe(3, 10),
    };
    const std::vector<Edge> p2 = {
        pe(2, 3), pe(1, 3), pe(1, 4), pe(6, 7), pe(5, 7),  pe(5, 8),  pe(3, 6),  pe(1, 7),
        pe(4, 5), pe(7, 9), pe(8, 9), pe(4, 9), pe(1, 10), pe(2, 10), pe(6, 10), pe(9, 10),
    };
    const std::vector<Edge> p3 = {
        pe(1, 5), pe(2, 5), pe(2, 7),  pe(3, 7),  pe(3, 8), pe(1, 8), pe(3, 5),
        pe(4, 8), pe(4, 10), pe(7, 10), pe(4, 6), pe(2, 6), pe(1, 9), pe(6, 9),
    };
    return Decomposition(Host::complete(10), {p1, p2, p3});
}

}  // namespace girth4
