#pragma once

// Test-only builders and brute-force oracles. The oracles deliberately avoid
// the library's solver and enumeration code.

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dpcanvas/dpcanvas.hpp"

namespace testing_support {

using namespace dpcanvas;

// Rim 0..n-1 in outer walk order, hub n.
inline PlaneGraph wheel(int n) {
    std::vector<std::vector<Vertex>> rot(n + 1);
    for (int i = 0; i < n; ++i) rot[i] = {(i + n - 1) % n, n, (i + 1) % n};
    for (int i = n - 1; i >= 0; --i) rot[n].push_back(i);
    std::vector<Vertex> walk;
    for (int i = 0; i < n; ++i) walk.push_back(i);
    return PlaneGraph::with_outer_walk(std::move(rot), walk);
}

// C4 0,1,2,3 with the chord 0-2.
inline PlaneGraph c4_chord() {
    return PlaneGraph::with_outer_walk({{3, 2, 1}, {0, 2}, {1, 0, 3}, {2, 0}}, {0, 1, 2, 3});
}

// K4 drawn as a triangle 0,1,2 with 3 inside.
inline PlaneGraph k4() { return PlaneGraph::with_outer_walk({{2, 3, 1}, {0, 3, 2}, {1, 3, 0}, {0, 2, 1}}, {0, 1, 2}); }

// Top 0, upper ring 1..5, lower ring 6..10, bottom 11; outer face a triangle.
inline PlaneGraph icosahedron() {
    std::vector<std::vector<Vertex>> r(12);
    auto up = [](int i) { return (i + 9) % 5 + 1; };
    auto low = [](int i) { return 5 + (i + 9) % 5 + 1; };
    r[0] = {1, 2, 3, 4, 5};
    for (int i = 1; i <= 5; ++i) r[i] = {up(i + 1), 0, up(i - 1), low(i - 1), low(i)};
    for (int i = 1; i <= 5; ++i) r[low(i)] = {up(i + 1), up(i), low(i - 1), 11, low(i + 1)};
    r[11] = {10, 9, 8, 7, 6};
    return PlaneGraph(std::move(r), 0, 1);
}

inline std::vector<Vertex> iota_cycle(int n) {
    std::vector<Vertex> c(n);
    for (int i = 0; i < n; ++i) c[i] = i;
    return c;
}

inline CorrespondenceAssignment identity_matchings(const PlaneGraph& g, int k) {
    auto a = CorrespondenceAssignment::empty(g, k);
    for (auto& m : a.matchings)
        for (int c = 0; c < k; ++c) m.push_back({c, c});
    return a;
}

// Odometer over every total assignment of the uncoloured vertices; returns
// true if one of them, together with phi, violates no edge. Only edges in
// `edges` (all when empty) and vertices in `vertices` (all when empty) count.
inline bool naive_extends(const PlaneGraph& g, const CorrespondenceAssignment& a, const Colouring& phi,
                          const std::vector<char>& vertices = {}, const std::vector<char>& edges = {}) {
    const int n = g.num_vertices();
    std::vector<Vertex> free;
    Colouring cur = phi;
    for (Vertex v = 0; v < n; ++v) {
        bool on = vertices.empty() || vertices[v];
        if (on && phi[v] == kUncoloured) free.push_back(v);
        if (on && a.list_sizes[v] == 0) return false;
    }
    for (Vertex v : free) cur[v] = 0;
    auto proper = [&] {
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            if (!edges.empty() && !edges[e]) continue;
            int x = cur[g.edge(e).u], y = cur[g.edge(e).v];
            if (x < 0 || y < 0) continue;
            for (auto [p, q] : a.matchings[e])
                if (p == x && q == y) return false;
        }
        return true;
    };
    while (true) {
        if (proper()) return true;
        std::size_t i = 0;
        while (i < free.size() && ++cur[free[i]] == a.list_sizes[free[i]]) cur[free[i++]] = 0;
        if (i == free.size()) return false;
    }
}

// Plain list colouring: global colours, adjacent vertices must differ.
inline bool list_colourable(const PlaneGraph& g, const std::vector<std::vector<int>>& lists) {
    const int n = g.num_vertices();
    std::vector<int> pick(n, 0);
    for (const auto& l : lists)
        if (l.empty()) return false;
    while (true) {
        bool ok = true;
        for (const Edge& e : g.edges())
            if (lists[e.u][pick[e.u]] == lists[e.v][pick[e.v]]) ok = false;
        if (ok) return true;
        int i = 0;
        while (i < n && ++pick[i] == static_cast<int>(lists[i].size())) pick[i++] = 0;
        if (i == n) return false;
    }
}

// All colourings of the vertices of s that are proper on s's edges.
inline std::vector<Colouring> naive_s_colourings(const PlaneGraph& g, const CorrespondenceAssignment& a,
                                                 const SubgraphMask& s) {
    std::vector<Colouring> out;
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (s.vertices[v]) vs.push_back(v);
    Colouring cur(g.num_vertices(), kUncoloured);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == vs.size()) {
            for (EdgeId e = 0; e < g.num_edges(); ++e)
                if (s.edges[e])
                    for (auto [p, q] : a.matchings[e])
                        if (cur[g.edge(e).u] == p && cur[g.edge(e).v] == q) return;
            out.push_back(cur);
            return;
        }
        for (int c = 0; c < a.list_sizes[vs[i]]; ++c) {
            cur[vs[i]] = c;
            rec(i + 1);
        }
        cur[vs[i]] = kUncoloured;
    };
    rec(0);
    return out;
}

// Criticality straight from the definition: every proper subgraph H with
// S in H < G admits a colouring of S extending to H but not to G. Walks all
// edge subsets (and, for each, the vertex subsets forced or allowed), so only
// for very small graphs.
inline bool naive_is_S_critical(const PlaneGraph& g, const CorrespondenceAssignment& a, const SubgraphMask& s) {
    const int n = g.num_vertices(), m = g.num_edges();
    if (s.vertex_count() == n && s.edge_count() == m) return false;
    auto phis = naive_s_colourings(g, a, s);
    std::vector<Colouring> failing;
    for (const auto& phi : phis)
        if (!naive_extends(g, a, phi)) failing.push_back(phi);
    std::vector<EdgeId> free_edges;
    for (EdgeId e = 0; e < m; ++e)
        if (!s.edges[e]) free_edges.push_back(e);
    std::vector<Vertex> free_vertices;
    for (Vertex v = 0; v < n; ++v)
        if (!s.vertices[v]) free_vertices.push_back(v);
    for (unsigned long em = 0; em < (1UL << free_edges.size()); ++em) {
        std::vector<char> edges = s.edges, vertices = s.vertices;
        for (std::size_t i = 0; i < free_edges.size(); ++i)
            if (em >> i & 1) edges[free_edges[i]] = 1;
        for (EdgeId e = 0; e < m; ++e)
            if (edges[e]) vertices[g.edge(e).u] = vertices[g.edge(e).v] = 1;
        std::vector<Vertex> optional;
        for (Vertex v : free_vertices)
            if (!vertices[v]) optional.push_back(v);
        for (unsigned long vm = 0; vm < (1UL << optional.size()); ++vm) {
            std::vector<char> vv = vertices;
            for (std::size_t i = 0; i < optional.size(); ++i)
                if (vm >> i & 1) vv[optional[i]] = 1;
            bool whole = std::count(vv.begin(), vv.end(), 1) == n && std::count(edges.begin(), edges.end(), 1) == m;
            if (whole) continue;
            bool witness = false;
            for (const auto& phi : failing)
                if (naive_extends(g, a, phi, vv, edges)) witness = true;
            if (!witness) return false;
        }
    }
    return true;
}

// Shortest cycle through each edge uv: BFS from u avoiding uv.
inline std::optional<int> naive_girth(const PlaneGraph& g) {
    std::optional<int> best;
    for (const Edge& e : g.edges()) {
        std::vector<int> dist(g.num_vertices(), -1);
        std::vector<Vertex> q{e.u};
        dist[e.u] = 0;
        for (std::size_t i = 0; i < q.size(); ++i)
            for (Vertex w : g.rotation(q[i])) {
                if (q[i] == e.u && w == e.v) continue;
                if (dist[w] < 0) dist[w] = dist[q[i]] + 1, q.push_back(w);
            }
        if (dist[e.v] > 0 && (!best || dist[e.v] + 1 < *best)) best = dist[e.v] + 1;
    }
    return best;
}

// Articulation test by deletion: connected, and stays connected without any
// single vertex.
inline bool naive_two_connected(const PlaneGraph& g) {
    const int n = g.num_vertices();
    if (n < 3) return false;
    auto connected_without = [&](Vertex gone) {
        std::vector<char> seen(n, 0);
        Vertex start = gone == 0 ? 1 : 0;
        std::vector<Vertex> st{start};
        seen[start] = 1;
        int count = 1;
        while (!st.empty()) {
            Vertex v = st.back();
            st.pop_back();
            for (Vertex w : g.rotation(v))
                if (w != gone && !seen[w]) seen[w] = 1, ++count, st.push_back(w);
        }
        return count == n - (gone >= 0 ? 1 : 0);
    };
    if (!connected_without(-1)) return false;
    for (Vertex v = 0; v < n; ++v)
        if (!connected_without(v)) return false;
    return true;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string data_path(const std::string& name) { return std::string(DPCANVAS_DATA_DIR) + "/" + name; }

inline Canvas canvas_from(const CanvasInstance& x) {
    return validate_canvas(x.g, x.g.outer_walk(), x.a);
}

}  // namespace testing_support
