#pragma once

// Correspondence assignments (L, M): every vertex v has the local palette
// 0..k_v-1 and every edge carries a partial matching between the palettes of
// its endpoints. A colouring is proper when no edge uses a matched pair.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpcanvas/error.hpp"
#include "dpcanvas/plane_graph.hpp"
#include "dpcanvas/random.hpp"
#include "dpcanvas/rational.hpp"
#include "dpcanvas/structure.hpp"

namespace dpcanvas {

/// Partial map vertex -> local colour; kUncoloured marks unassigned vertices.
using Colouring = std::vector<int>;
inline constexpr int kUncoloured = -1;

/// (colour at the lower endpoint, colour at the higher endpoint)
using ColourPair = std::pair<int, int>;

struct CorrespondenceAssignment {
    std::vector<int> list_sizes;                   // per vertex
    std::vector<std::vector<ColourPair>> matchings;  // per edge id, sorted

    static CorrespondenceAssignment empty(const PlaneGraph& g, int k) {
        return {std::vector<int>(g.num_vertices(), k), std::vector<std::vector<ColourPair>>(g.num_edges())};
    }
    friend bool operator==(const CorrespondenceAssignment&, const CorrespondenceAssignment&) = default;
};

/// Throws InputError unless a fits g: sizes, ranges, partial matchings.
inline void validate(const PlaneGraph& g, const CorrespondenceAssignment& a) {
    if (static_cast<int>(a.list_sizes.size()) != g.num_vertices())
        throw InputError("assignment has the wrong number of lists");
    if (static_cast<int>(a.matchings.size()) != g.num_edges())
        throw InputError("assignment has the wrong number of matchings");
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (a.list_sizes[v] < 0) throw InputError("negative list size at vertex " + std::to_string(v));
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        std::vector<char> used_u(a.list_sizes[ed.u], 0), used_v(a.list_sizes[ed.v], 0);
        const std::string name = std::to_string(ed.u) + "-" + std::to_string(ed.v);
        for (auto [x, y] : a.matchings[e]) {
            if (x < 0 || x >= a.list_sizes[ed.u] || y < 0 || y >= a.list_sizes[ed.v])
                throw InputError("matching pair out of palette range on edge " + name);
            if (used_u[x] || used_v[y]) throw InputError("matching on edge " + name + " is not a matching");
            used_u[x] = used_v[y] = 1;
        }
    }
}

/// u[v,c]: the colour of u matched to (v,c) on the edge uv, if any.
inline std::optional<int> corresponds(const PlaneGraph& g, const CorrespondenceAssignment& a, Vertex u, Vertex v,
                                      int c) {
    auto e = g.find_edge(u, v);
    if (!e) throw InputError(std::to_string(u) + " and " + std::to_string(v) + " are not adjacent");
    for (auto [x, y] : a.matchings[*e]) {
        if (u < v && y == c) return x;
        if (u > v && x == c) return y;
    }
    return std::nullopt;
}

inline void require_in_range(const CorrespondenceAssignment& a, const Colouring& phi) {
    if (phi.size() != a.list_sizes.size()) throw InputError("colouring has the wrong length");
    for (std::size_t v = 0; v < phi.size(); ++v)
        if (phi[v] != kUncoloured && (phi[v] < 0 || phi[v] >= a.list_sizes[v]))
            throw InputError("colour " + std::to_string(phi[v]) + " out of range at vertex " + std::to_string(v));
}

/// Edge e is violated by phi: both ends coloured with a matched pair.
inline bool edge_conflict(const PlaneGraph& g, const CorrespondenceAssignment& a, const Colouring& phi, EdgeId e) {
    const Edge& ed = g.edge(e);
    int x = phi[ed.u], y = phi[ed.v];
    if (x == kUncoloured || y == kUncoloured) return false;
    for (auto p : a.matchings[e])
        if (p.first == x && p.second == y) return true;
    return false;
}

inline bool is_valid_colouring(const PlaneGraph& g, const CorrespondenceAssignment& a, const Colouring& phi,
                               bool total) {
    require_in_range(a, phi);
    if (total && std::count(phi.begin(), phi.end(), kUncoloured) > 0) return false;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (edge_conflict(g, a, phi, e)) return false;
    return true;
}

/// S(v): colours still usable at v once phi is fixed.
inline std::vector<std::vector<int>> residual_lists(const PlaneGraph& g, const CorrespondenceAssignment& a,
                                                    const Colouring& phi) {
    require_in_range(a, phi);
    std::vector<std::vector<int>> out(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (phi[v] != kUncoloured) {
            out[v] = {phi[v]};
            continue;
        }
        std::vector<char> gone(a.list_sizes[v], 0);
        for (Vertex u : g.rotation(v)) {
            if (phi[u] == kUncoloured) continue;
            if (auto c = corresponds(g, a, v, u, phi[u])) gone[*c] = 1;
        }
        for (int c = 0; c < a.list_sizes[v]; ++c)
            if (!gone[c]) out[v].push_back(c);
    }
    return out;
}

/// Extends every matching to size min(k_u, k_v) by pairing the lowest
/// unmatched colours on both sides in increasing order.
inline CorrespondenceAssignment saturate_matchings(const PlaneGraph& g, CorrespondenceAssignment a) {
    validate(g, a);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        const int ku = a.list_sizes[ed.u], kv = a.list_sizes[ed.v];
        std::vector<char> used_u(ku, 0), used_v(kv, 0);
        for (auto [x, y] : a.matchings[e]) used_u[x] = used_v[y] = 1;
        int x = 0, y = 0;
        auto& m = a.matchings[e];
        while (static_cast<int>(m.size()) < std::min(ku, kv)) {
            while (used_u[x]) ++x;
            while (used_v[y]) ++y;
            m.push_back({x++, y++});
        }
        std::sort(m.begin(), m.end());
    }
    return a;
}

/// Ordinary list assignment as a correspondence: local index i of v stands
/// for lists[v][i], and equal global colours are matched.
inline CorrespondenceAssignment from_list_assignment(const PlaneGraph& g, const std::vector<std::vector<int>>& lists) {
    if (static_cast<int>(lists.size()) != g.num_vertices()) throw InputError("one list per vertex expected");
    CorrespondenceAssignment a;
    for (const auto& l : lists) {
        auto sorted = l;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("list repeats a colour");
        a.list_sizes.push_back(static_cast<int>(l.size()));
    }
    a.matchings.resize(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto& lu = lists[g.edge(e).u];
        const auto& lv = lists[g.edge(e).v];
        for (int i = 0; i < static_cast<int>(lu.size()); ++i)
            for (int j = 0; j < static_cast<int>(lv.size()); ++j)
                if (lu[i] == lv[j]) a.matchings[e].push_back({i, j});
    }
    return a;
}

/// Random partial matchings: both palettes are shuffled, the first
/// min(k_u, k_v) positions paired, and each pair kept with probability
/// density. Edges are processed in id order from one SplitMix64 stream.
inline CorrespondenceAssignment random_assignment(const PlaneGraph& g, const std::vector<int>& sizes,
                                                  Rational density, std::uint64_t seed) {
    if (density < 0 || density > 1) throw InputError("density must lie in [0,1]");
    if (static_cast<int>(sizes.size()) != g.num_vertices()) throw InputError("one list size per vertex expected");
    SplitMix64 rng(seed);
    CorrespondenceAssignment a{sizes, std::vector<std::vector<ColourPair>>(g.num_edges())};
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        std::vector<int> pu(sizes[g.edge(e).u]), pv(sizes[g.edge(e).v]);
        for (int i = 0; i < static_cast<int>(pu.size()); ++i) pu[i] = i;
        for (int i = 0; i < static_cast<int>(pv.size()); ++i) pv[i] = i;
        rng.shuffle(pu);
        rng.shuffle(pv);
        const std::size_t m = std::min(pu.size(), pv.size());
        for (std::size_t i = 0; i < m; ++i)
            if (rng.chance(static_cast<std::uint64_t>(density.numerator()),
                           static_cast<std::uint64_t>(density.denominator())))
                a.matchings[e].push_back({pu[i], pv[i]});
        std::sort(a.matchings[e].begin(), a.matchings[e].end());
    }
    return a;
}

/// The assignment seen by a restricted subgraph.
inline CorrespondenceAssignment restrict_assignment(const CorrespondenceAssignment& a, const Restricted& r) {
    CorrespondenceAssignment out;
    for (Vertex v : r.to_parent) out.list_sizes.push_back(a.list_sizes[v]);
    for (EdgeId e : r.edge_to_parent) out.matchings.push_back(a.matchings[e]);
    // Dense ids keep the relative order, so orientation is unchanged.
    return out;
}

inline Colouring restrict_colouring(const Colouring& phi, const Restricted& r) {
    Colouring out;
    for (Vertex v : r.to_parent) out.push_back(phi[v]);
    return out;
}

inline Colouring lift_colouring(const Colouring& local, const Restricted& r, int parent_vertices) {
    Colouring out(parent_vertices, kUncoloured);
    for (std::size_t i = 0; i < local.size(); ++i) out[r.to_parent[i]] = local[i];
    return out;
}

}  // namespace dpcanvas
