#pragma once

// Girth-5 canvases with 3-lists: the size inequality for critical ones, the
// 89|V(C)| bound, and extendability of short outer paths checked by the
// exact solver.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "dpcanvas/canvas.hpp"
#include "dpcanvas/certify.hpp"
#include "dpcanvas/correspondence.hpp"
#include "dpcanvas/error.hpp"
#include "dpcanvas/generate.hpp"
#include "dpcanvas/rational.hpp"
#include "dpcanvas/solver.hpp"
#include "dpcanvas/structure.hpp"

namespace dpcanvas {

struct Girth5Canvas {
    PlaneGraph g;
    SubgraphMask s;
    CorrespondenceAssignment a;
};

struct Girth5Params {
    Rational epsilon{1, 100};
    Rational alpha{37, 100};
    bool outer_cofacial = false;
};

/// 9e <= a, 2.5a + 5.5e <= 1, 11e + 1 <= 3a, both positive.
inline bool girth5_parameters_ok(const Girth5Params& p) {
    if (p.epsilon <= 0 || p.alpha <= 0) return false;
    return 9 * p.epsilon <= p.alpha && Rational(5, 2) * p.alpha + Rational(11, 2) * p.epsilon <= 1 &&
           11 * p.epsilon + 1 <= 3 * p.alpha;
}

inline bool is_connected(const PlaneGraph& g, const SubgraphMask& s) {
    std::vector<Vertex> stack;
    std::vector<char> seen(g.num_vertices(), 0);
    for (Vertex v = 0; v < g.num_vertices() && stack.empty(); ++v)
        if (s.vertices[v]) stack.push_back(v), seen[v] = 1;
    int reached = 0;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        ++reached;
        for (int k = 0; k < g.degree(v); ++k) {
            DartId d = g.first_dart(v) + k;
            Vertex w = g.dart_head(d);
            if (s.edges[g.dart_edge(d)] && !seen[w]) seen[w] = 1, stack.push_back(w);
        }
    }
    return reached == s.vertex_count();
}

/// Every violated girth-5 canvas condition.
inline std::vector<std::string> girth5_violations(const Girth5Canvas& t) {
    std::vector<std::string> out;
    validate(t.g, t.a);
    auto gi = girth(t.g);
    if (gi && *gi < 5) out.push_back("girth " + std::to_string(*gi) + " < 5");
    if (t.s.vertex_count() == 0 || !is_connected(t.g, t.s)) out.push_back("s is not connected");
    for (Vertex v = 0; v < t.g.num_vertices(); ++v)
        if (!t.s.vertices[v] && t.a.list_sizes[v] < 3)
            out.push_back("vertex " + std::to_string(v) + " off s has fewer than three colours");
    Colouring none(t.g.num_vertices(), kUncoloured);
    if (!ExtensionSolver(t.g, t.a).extends(none, &t.s)) out.push_back("s has no valid colouring");
    return out;
}

/// G is S plus one edge, or S plus one vertex of degree three.
inline bool girth5_excluded_shape(const Girth5Canvas& t) {
    const int extra_v = t.g.num_vertices() - t.s.vertex_count();
    const int extra_e = t.g.num_edges() - t.s.edge_count();
    if (extra_v == 0 && extra_e == 1) return true;
    if (extra_v == 1 && extra_e == 3) {
        for (Vertex v = 0; v < t.g.num_vertices(); ++v)
            if (!t.s.vertices[v]) return t.g.degree(v) == 3;
    }
    return false;
}

struct Girth5Inequality {
    int e = 0, v = 0, q = 0;
    Rational lhs;  // 3e - (5+eps)v - alpha q
    Rational margin() const { return lhs - 3; }
    bool ok() const { return lhs >= 3; }
};

inline Girth5Inequality girth5_inequality(const Girth5Canvas& t, const Girth5Params& p = {}) {
    if (!girth5_parameters_ok(p)) throw InputError("girth-5 parameters violate 9e<=a, 2.5a+5.5e<=1, 11e+1<=3a");
    Girth5Inequality r;
    r.e = t.g.num_edges() - t.s.edge_count();
    r.v = t.g.num_vertices() - t.s.vertex_count();
    r.q = static_cast<int>(quasi_boundary_set(t.g, t.s.vertices, p.outer_cofacial).size());
    r.lhs = Rational(3 * r.e) - (5 + p.epsilon) * r.v - p.alpha * r.q;
    return r;
}

/// |V(G)| <= 89 |V(C)|, after checking girth and C-criticality.
inline BoundReport girth5_bound_check(const PlaneGraph& g, const std::vector<Vertex>& c,
                                      const CorrespondenceAssignment& a,
                                      unsigned long long cap = kDefaultEnumerationCap) {
    auto gi = girth(g);
    if (gi && *gi < 5) throw InputError("graph has girth below five");
    if (!is_S_critical(g, a, cycle_mask(g, c), cap)) throw InputError("graph is not critical for its cycle");
    return {"girth5", Rational(g.num_vertices()), Rational(89) * static_cast<int>(c.size())};
}

/// Every colouring of S extends, where S is a path or cycle on the outer
/// walk with at most six vertices, A an independent set of outer vertices
/// with 2-lists and no neighbour in S, and all other lists have at least
/// three colours. Colourings of S respect every edge among its vertices.
inline bool thomassen_g5_extendability(const PlaneGraph& g, const CorrespondenceAssignment& a,
                                       const std::vector<Vertex>& s, const std::vector<Vertex>& a_set,
                                       unsigned long long cap = kDefaultEnumerationCap) {
    validate(g, a);
    const int n = g.num_vertices();
    auto gi = girth(g);
    if (gi && *gi < 5) throw InputError("graph has girth below five");
    if (s.empty() || s.size() > 6) throw InputError("s must have between one and six vertices");
    auto outer = g.outer_vertex_mask();
    std::vector<char> in_s(n, 0), in_a(n, 0);
    for (Vertex v : s) {
        if (v < 0 || v >= n || !outer[v]) throw InputError("s vertex is not on the outer walk");
        if (in_s[v]) throw InputError("s repeats a vertex");
        in_s[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (!g.adjacent(s[i], s[i + 1])) throw InputError("s is not a path");
    // Path edges must be outer walk edges; a closing edge makes s a cycle.
    auto walk_edge = [&](Vertex x, Vertex y) {
        DartId d = *g.find_dart(x, y);
        FaceId f = *g.outer_face();
        return g.face_of_dart(d) == f || g.face_of_dart(g.twin(d)) == f;
    };
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (!walk_edge(s[i], s[i + 1])) throw InputError("s uses an edge off the outer walk");
    for (Vertex v : a_set) {
        if (v < 0 || v >= n || !outer[v] || in_s[v]) throw InputError("a vertex of A is not on the outer walk off s");
        in_a[v] = 1;
    }
    for (Vertex v : a_set) {
        if (a.list_sizes[v] != 2) throw InputError("a vertex of A does not have a 2-list");
        for (Vertex w : g.rotation(v)) {
            if (in_a[w]) throw InputError("A is not independent");
            if (in_s[w]) throw InputError("A has a neighbour in s");
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (in_s[v] && a.list_sizes[v] < 1) throw InputError("s vertex with an empty list");
        if (!in_s[v] && !in_a[v] && a.list_sizes[v] < 3)
            throw InputError("vertex " + std::to_string(v) + " needs at least three colours");
    }
    SubgraphMask sm = SubgraphMask::empty(g);
    for (Vertex v : s) sm.vertices[v] = 1;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (in_s[g.edge(e).u] && in_s[g.edge(e).v]) sm.edges[e] = 1;
    ExtensionSolver solver(g, a);
    bool ok = true;
    for_each_subgraph_colouring(g, a, sm, cap, [&](const Colouring& phi) {
        ok = solver.extends(phi);
        return ok;
    });
    return ok;
}

}  // namespace dpcanvas
