#pragma once

// Canvases (G, C, (L,M)): validity, criticality, critical subcanvas
// extraction, the deficiency/boundary metrics and their decomposition
// identities, chords and tripods, and relaxation along a tripod.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dpcanvas/correspondence.hpp"
#include "dpcanvas/error.hpp"
#include "dpcanvas/plane_graph.hpp"
#include "dpcanvas/random.hpp"
#include "dpcanvas/rational.hpp"
#include "dpcanvas/solver.hpp"
#include "dpcanvas/structure.hpp"

namespace dpcanvas {

struct Canvas {
    PlaneGraph g;
    std::vector<Vertex> c;  // outer cycle, in outer walk order
    CorrespondenceAssignment a;
};

namespace detail {

inline bool same_cyclic_sequence(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    auto it = std::find(a.begin(), a.end(), b[0]);
    if (it == a.end()) return false;
    const std::size_t s = it - a.begin(), n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        if (a[(s + i) % n] != b[i]) return false;
    return true;
}

// Outer walk of g rotated to start at first.
inline std::vector<Vertex> outer_walk_from(const PlaneGraph& g, Vertex first) {
    auto w = g.outer_walk();
    auto it = std::find(w.begin(), w.end(), first);
    if (it == w.end()) throw InvariantViolation("vertex is not on the outer walk");
    std::rotate(w.begin(), it, w.end());
    return w;
}

}  // namespace detail

/// Every violated canvas condition, one message each. Empty means valid.
inline std::vector<std::string> canvas_violations(const PlaneGraph& g, const std::vector<Vertex>& c,
                                                  const CorrespondenceAssignment& a) {
    std::vector<std::string> out;
    try {
        validate(g, a);
    } catch (const InputError& e) {
        out.push_back(std::string("assignment: ") + e.what());
        return out;
    }
    bool cycle_ok = true;
    try {
        require_cycle(g, c);
    } catch (const InputError& e) {
        out.push_back(std::string("c is not a cycle: ") + e.what());
        cycle_ok = false;
    }
    if (!is_two_connected(g)) out.push_back("graph is not 2-connected");
    if (cycle_ok && !detail::same_cyclic_sequence(g.outer_walk(), c))
        out.push_back("c is not the outer face boundary in walk order");
    std::vector<char> on_c(g.num_vertices(), 0);
    for (Vertex v : c)
        if (v >= 0 && v < g.num_vertices()) on_c[v] = 1;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!on_c[v] && a.list_sizes[v] < 5)
            out.push_back("internal vertex " + std::to_string(v) + " has a list of size " +
                          std::to_string(a.list_sizes[v]) + " < 5");
    if (cycle_ok) {
        SubgraphMask cm = cycle_mask(g, c);
        Colouring none(g.num_vertices(), kUncoloured);
        if (!ExtensionSolver(g, a).extends(none, &cm)) out.push_back("c has no valid colouring");
    }
    return out;
}

/// Throws InputError listing every violated condition.
inline Canvas validate_canvas(PlaneGraph g, std::vector<Vertex> c, CorrespondenceAssignment a) {
    auto bad = canvas_violations(g, c, a);
    if (!bad.empty()) {
        std::string msg = "invalid canvas:";
        for (auto& b : bad) msg += "\n  " + b;
        throw InputError(msg);
    }
    return {std::move(g), std::move(c), std::move(a)};
}

/// Colourings of s (its own edges) that do not extend to g.
inline std::vector<Colouring> failing_colourings(const PlaneGraph& g, const CorrespondenceAssignment& a,
                                                 const SubgraphMask& s,
                                                 unsigned long long cap = kDefaultEnumerationCap) {
    ExtensionSolver solver(g, a);
    std::vector<Colouring> out;
    for_each_subgraph_colouring(g, a, s, cap, [&](const Colouring& phi) {
        if (!solver.extends(phi)) out.push_back(phi);
        return true;
    });
    return out;
}

/// G is S-critical: G != S and every maximal proper subgraph containing S
/// (G - e for e outside S, G - v for isolated v outside S) admits a colouring
/// of S that G does not.
inline bool is_S_critical(const PlaneGraph& g, const CorrespondenceAssignment& a, const SubgraphMask& s,
                          unsigned long long cap = kDefaultEnumerationCap) {
    validate(g, a);
    if (s.vertex_count() == g.num_vertices() && s.edge_count() == g.num_edges()) return false;
    auto failing = failing_colourings(g, a, s, cap);
    if (failing.empty()) return false;
    ExtensionSolver solver(g, a);
    SubgraphMask m = SubgraphMask::full(g);
    auto some_extends = [&] {
        for (const auto& phi : failing)
            if (solver.extends(phi, &m)) return true;
        return false;
    };
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (s.edges[e]) continue;
        m.edges[e] = 0;
        bool ok = some_extends();
        m.edges[e] = 1;
        if (!ok) return false;
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (s.vertices[v] || g.degree(v) > 0) continue;
        m.vertices[v] = 0;
        bool ok = some_extends();
        m.vertices[v] = 1;
        if (!ok) return false;
    }
    return true;
}

inline bool is_critical(const Canvas& t, unsigned long long cap = kDefaultEnumerationCap) {
    return is_S_critical(t.g, t.a, cycle_mask(t.g, t.c), cap);
}

namespace detail {

// One greedy pass: edges outside keep in decreasing id are dropped while
// still_ok(mask) holds, then vertices left without edges are dropped.
template <class Pred>
void greedy_prune(const PlaneGraph& g, const SubgraphMask& keep, SubgraphMask& mask, Pred&& still_ok) {
    for (EdgeId e = g.num_edges() - 1; e >= 0; --e) {
        if (keep.edges[e] || !mask.edges[e]) continue;
        mask.edges[e] = 0;
        if (!still_ok(mask)) mask.edges[e] = 1;
    }
    std::vector<int> deg(g.num_vertices(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (mask.edges[e]) ++deg[g.edge(e).u], ++deg[g.edge(e).v];
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (mask.vertices[v] && !keep.vertices[v] && deg[v] == 0) mask.vertices[v] = 0;
}

// Subcanvas of t on mask, which must contain C and be 2-connected.
inline Canvas subcanvas(const Canvas& t, const SubgraphMask& mask, std::vector<Vertex>* to_parent = nullptr) {
    if (!is_two_connected(t.g, mask)) throw InvariantViolation("subcanvas is not 2-connected");
    Restricted r = restrict_to(t.g, mask);
    Canvas out;
    out.a = restrict_assignment(t.a, r);
    out.c = outer_walk_from(r.graph, r.from_parent[t.c[0]]);
    std::vector<Vertex> mapped;
    for (Vertex v : t.c) mapped.push_back(r.from_parent[v]);
    if (out.c != mapped) throw InvariantViolation("subcanvas outer walk differs from c");
    out.g = std::move(r.graph);
    if (to_parent) *to_parent = r.to_parent;
    return out;
}

}  // namespace detail

struct Extraction {
    Canvas canvas;
    SubgraphMask mask;               // over the input graph
    Colouring phi;                   // failing colouring of C, input ids
    std::vector<Vertex> to_parent;   // canvas vertex -> input vertex
};

/// Takes the first colouring of C (lexicographic) that does not extend and
/// deletes edges in decreasing id while it still fails, then drops isolated
/// internal vertices. The result is C-critical. With respect_chords the
/// first failing colouring that is also proper on the chords is preferred,
/// which steers away from the trivial chord-only canvases.
inline std::optional<Extraction> extract_critical_subcanvas(const Canvas& t,
                                                            unsigned long long cap = kDefaultEnumerationCap,
                                                            bool respect_chords = false) {
    SubgraphMask cm = cycle_mask(t.g, t.c);
    ExtensionSolver solver(t.g, t.a);
    const auto ch = respect_chords ? chords(t.g, t.c) : std::vector<EdgeId>{};
    std::optional<Colouring> bad, fallback;
    for_each_subgraph_colouring(t.g, t.a, cm, cap, [&](const Colouring& phi) {
        if (solver.extends(phi)) return true;
        bool clash = std::any_of(ch.begin(), ch.end(), [&](EdgeId e) { return edge_conflict(t.g, t.a, phi, e); });
        if (!clash) {
            bad = phi;
            return false;
        }
        if (!fallback) fallback = phi;
        return true;
    });
    if (!bad) bad = fallback;
    if (!bad) return std::nullopt;
    Extraction x;
    x.phi = *bad;
    x.mask = SubgraphMask::full(t.g);
    detail::greedy_prune(t.g, cm, x.mask, [&](const SubgraphMask& m) { return !solver.extends(*bad, &m); });
    x.canvas = detail::subcanvas(t, x.mask, &x.to_parent);
    return x;
}

// ---------------------------------------------------------------- metrics

struct MetricParams {
    Rational epsilon{1, 50};
    Rational alpha{1, 25};
    Rational gamma{7, 10};
    bool outer_cofacial = false;  // count the outer face when forming Q
};

/// 2e <= a, 14a + 7e <= g, g + 6a + 3e <= 1, all positive.
inline bool stronglinear_parameters_ok(const MetricParams& p) {
    if (p.epsilon <= 0 || p.alpha <= 0 || p.gamma <= 0) return false;
    return 2 * p.epsilon <= p.alpha && 14 * p.alpha + 7 * p.epsilon <= p.gamma &&
           p.gamma + 6 * p.alpha + 3 * p.epsilon <= 1;
}

/// Vertices outside s with a neighbour in s.
inline std::vector<Vertex> boundary_set(const PlaneGraph& g, const std::vector<char>& in_s) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (in_s[v]) continue;
        for (Vertex w : g.rotation(v))
            if (in_s[w]) {
                out.push_back(v);
                break;
            }
    }
    return out;
}

/// Vertices outside s sharing a face with a vertex of s. The outer face is
/// only used when outer_cofacial is set.
inline std::vector<Vertex> quasi_boundary_set(const PlaneGraph& g, const std::vector<char>& in_s,
                                              bool outer_cofacial) {
    std::vector<char> mark(g.num_vertices(), 0);
    auto outer = g.outer_face();
    for (FaceId f = 0; f < static_cast<FaceId>(g.faces().size()); ++f) {
        if (outer && f == *outer && !outer_cofacial) continue;
        const auto& vs = g.faces()[f].vertices;
        bool touches = std::any_of(vs.begin(), vs.end(), [&](Vertex v) { return in_s[v] != 0; });
        if (!touches) continue;
        for (Vertex v : vs)
            if (!in_s[v]) mark[v] = 1;
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (mark[v]) out.push_back(v);
    return out;
}

/// def(G|H) = |E(G) \ E(H)| - 3 |V(G) \ V(H)|.
inline std::int64_t deficiency(const PlaneGraph& g, const SubgraphMask& h) {
    return static_cast<std::int64_t>(g.num_edges() - h.edge_count()) -
           3 * static_cast<std::int64_t>(g.num_vertices() - h.vertex_count());
}

struct MetricsReport {
    std::int64_t def = 0;
    int v = 0, b = 0, q = 0;
    Rational s, d;
    Rational epsilon, alpha, gamma;

    Rational threshold() const { return 3 - gamma; }
    Rational margin() const { return d - threshold(); }
};

/// Metrics of g against the cycle c (need not be validated as a canvas).
inline MetricsReport metrics_of(const PlaneGraph& g, const std::vector<Vertex>& c, const MetricParams& p) {
    SubgraphMask cm = cycle_mask(g, c);
    MetricsReport r;
    r.epsilon = p.epsilon;
    r.alpha = p.alpha;
    r.gamma = p.gamma;
    r.def = deficiency(g, cm);
    r.v = g.num_vertices() - static_cast<int>(c.size());
    r.b = static_cast<int>(boundary_set(g, cm.vertices).size());
    r.q = static_cast<int>(quasi_boundary_set(g, cm.vertices, p.outer_cofacial).size());
    r.s = p.epsilon * r.v + p.alpha * (r.b + r.q);
    r.d = Rational(r.def) - r.s;
    return r;
}

inline MetricsReport metrics(const Canvas& t, const MetricParams& p = {}) { return metrics_of(t.g, t.c, p); }

// ------------------------------------------------- decomposition identities

struct DecompositionCheck {
    std::int64_t def_whole = 0, def_parts = 0;
    int v_whole = 0, v_parts = 0, b_whole = 0, b_parts = 0, q_whole = 0, q_parts = 0;
    Rational s_whole, s_parts, d_whole, d_parts;
    int faces = 0;
    // Vertices of G' adjacent to c in G only through edges missing from G'.
    // They sit on a face boundary, so neither G' nor any G<f> counts them in b.
    int stranded = 0;
    Rational alpha;

    bool def_identity() const { return def_whole == def_parts; }
    bool surplus_ok() const {
        return v_whole == v_parts && b_whole <= b_parts && q_whole <= q_parts && s_whole <= s_parts &&
               d_whole >= d_parts;
    }
    // Same inequalities with b on the right raised by the stranded vertices.
    bool corrected_surplus_ok() const {
        const Rational slack = alpha * stranded;
        return v_whole == v_parts && b_whole <= b_parts + stranded && q_whole <= q_parts &&
               s_whole <= s_parts + slack && d_whole >= d_parts - slack;
    }
    bool ok() const { return def_identity() && surplus_ok(); }
    std::string describe() const {
        return "def " + std::to_string(def_whole) + " vs " + std::to_string(def_parts) + ", v " +
               std::to_string(v_whole) + " vs " + std::to_string(v_parts) + ", b " + std::to_string(b_whole) +
               " vs " + std::to_string(b_parts) + ", q " + std::to_string(q_whole) + " vs " +
               std::to_string(q_parts) + ", d " + to_string(d_whole) + " vs " + to_string(d_parts) + ", stranded " +
               std::to_string(stranded);
    }
};

/// Compares G against G' (a 2-connected subgraph containing c) plus the
/// disks G<f> cut out by the finite faces f of G'.
inline DecompositionCheck decomposition_check(const PlaneGraph& g, const std::vector<Vertex>& c,
                                              const SubgraphMask& gp, const MetricParams& p = {}) {
    SubgraphMask cm = cycle_mask(g, c);
    if (!gp.contains(cm)) throw InputError("subgraph does not contain the outer cycle");
    if (!is_two_connected(g, gp)) throw InputError("subgraph is not 2-connected");
    DecompositionCheck out;
    MetricsReport whole = metrics_of(g, c, p);
    out.def_whole = whole.def;
    out.v_whole = whole.v;
    out.b_whole = whole.b;
    out.q_whole = whole.q;
    out.s_whole = whole.s;
    out.d_whole = whole.d;

    Restricted r = restrict_to(g, gp);
    std::vector<Vertex> local_c;
    for (Vertex v : c) local_c.push_back(r.from_parent[v]);
    MetricsReport base = metrics_of(r.graph, local_c, p);
    out.def_parts = base.def;
    out.v_parts = base.v;
    out.b_parts = base.b;
    out.q_parts = base.q;
    out.s_parts = base.s;
    out.d_parts = base.d;
    out.alpha = p.alpha;
    {
        std::vector<char> on_c(g.num_vertices(), 0), in_bp(g.num_vertices(), 0);
        for (Vertex v : c) on_c[v] = 1;
        for (Vertex w : boundary_set(r.graph, cycle_mask(r.graph, local_c).vertices)) in_bp[r.to_parent[w]] = 1;
        for (Vertex w : boundary_set(g, on_c))
            if (gp.vertices[w] && !in_bp[w]) ++out.stranded;
    }
    const auto& faces = r.graph.faces();
    for (FaceId f = 0; f < static_cast<FaceId>(faces.size()); ++f) {
        if (f == *r.graph.outer_face()) continue;
        std::vector<Vertex> cyc;
        for (Vertex v : faces[f].vertices) cyc.push_back(r.to_parent[v]);
        DiskSubgraph disk = disk_subgraph(g, cyc);
        MetricsReport m = metrics_of(disk.sub.graph, disk.cycle, p);
        out.def_parts += m.def;
        out.v_parts += m.v;
        out.b_parts += m.b;
        out.q_parts += m.q;
        out.s_parts += m.s;
        out.d_parts += m.d;
        ++out.faces;
    }
    return out;
}

inline bool deficiency_decomposition_check(const PlaneGraph& g, const std::vector<Vertex>& c,
                                           const SubgraphMask& gp) {
    return decomposition_check(g, c, gp).def_identity();
}

/// Random 2-connected subgraph of a 2-connected g containing the cycle c:
/// c plus up to `ears` ears, each a single edge or a path through new
/// vertices between two distinct vertices already chosen.
inline SubgraphMask random_two_connected_split(const PlaneGraph& g, const std::vector<Vertex>& c, int ears,
                                               std::uint64_t seed) {
    SubgraphMask m = cycle_mask(g, c);
    SplitMix64 rng(seed);
    const int n = g.num_vertices();
    for (int k = 0; k < ears; ++k) {
        std::vector<DartId> cand;
        for (DartId d = 0; d < g.num_darts(); ++d)
            if (m.vertices[g.dart_tail(d)] && !m.edges[g.dart_edge(d)]) cand.push_back(d);
        if (cand.empty()) break;
        DartId d = cand[rng.below(cand.size())];
        Vertex x = g.dart_tail(d), y = g.dart_head(d);
        if (m.vertices[y]) {
            m.edges[g.dart_edge(d)] = 1;
            continue;
        }
        // BFS from y outside the subgraph to a vertex with a chosen neighbour
        // other than x.
        std::vector<Vertex> parent(n, kNone), queue{y};
        parent[y] = y;
        Vertex end = kNone, attach = kNone;
        for (std::size_t i = 0; i < queue.size() && end == kNone; ++i) {
            Vertex z = queue[i];
            for (Vertex w : g.rotation(z)) {
                if (m.vertices[w]) {
                    if (w == x) continue;
                    end = z;
                    attach = w;
                    break;
                }
                if (parent[w] == kNone) {
                    parent[w] = z;
                    queue.push_back(w);
                }
            }
        }
        if (end == kNone) throw InputError("graph is not 2-connected");
        m.vertices[y] = 1;
        m.edges[g.dart_edge(d)] = 1;
        m.vertices[attach] = 1;
        m.edges[*g.find_edge(end, attach)] = 1;
        for (Vertex z = end; z != y; z = parent[z]) {
            m.vertices[z] = 1;
            m.edges[*g.find_edge(z, parent[z])] = 1;
        }
    }
    return m;
}

// ------------------------------------------------------- degree inequality

struct DegreeBound {
    std::int64_t def = 0;
    std::int64_t rhs = 0;  // 2 v(G) - |E(G - V(C))|
    bool all_five = false;
    bool chordless = false;
    bool inequality() const { return def >= rhs; }
    bool equality() const { return def == rhs; }
    // Equality forces degree five everywhere inside; conversely degree five
    // everywhere inside gives equality once there are no chords.
    bool ok() const { return inequality() && (!equality() || all_five) && (!(all_five && chordless) || equality()); }
};

inline DegreeBound degree_bound_check(const Canvas& t) {
    if (!internal_degrees_ok(t.g, t.c)) throw InputError("an internal vertex has degree below five");
    SubgraphMask cm = cycle_mask(t.g, t.c);
    DegreeBound r;
    r.def = deficiency(t.g, cm);
    std::int64_t inner_edges = 0;
    for (const Edge& e : t.g.edges())
        if (!cm.vertices[e.u] && !cm.vertices[e.v]) ++inner_edges;
    r.rhs = 2 * static_cast<std::int64_t>(t.g.num_vertices() - t.c.size()) - inner_edges;
    r.all_five = true;
    for (Vertex v = 0; v < t.g.num_vertices(); ++v)
        if (!cm.vertices[v] && t.g.degree(v) != 5) r.all_five = false;
    r.chordless = chords(t.g, t.c).empty();
    return r;
}

/// Internal degrees at least five and every cycle of length at most four
/// bounds an empty disk.
inline bool facts_hold(const Canvas& t) { return internal_degrees_ok(t.g, t.c) && short_cycle_interiors_empty(t.g); }

// ------------------------------------------------------- chords and tripods

struct TripodReport {
    Vertex vertex = kNone;
    std::vector<Vertex> neighbours;  // on C, counterclockwise; occupied face between last and first
    bool tripod = false;             // exactly three neighbours on C, else a quadpod
    bool regular = false;            // some internal face of G[V(C) + v] holds part of G
    std::vector<Vertex> occupied_face;  // boundary of that face, input ids
};

/// The tripod/quadpod report for v, or nothing when v has fewer than three
/// neighbours on C or more than one occupied internal face.
inline std::optional<TripodReport> tripod_report(const Canvas& t, Vertex v) {
    const PlaneGraph& g = t.g;
    std::vector<int> pos(g.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(t.c.size()); ++i) pos[t.c[i]] = i;
    if (v < 0 || v >= g.num_vertices() || pos[v] >= 0) return std::nullopt;
    std::vector<Vertex> nb;
    for (Vertex w : g.rotation(v))
        if (pos[w] >= 0) nb.push_back(w);
    if (nb.size() < 3) return std::nullopt;
    std::sort(nb.begin(), nb.end(), [&](Vertex x, Vertex y) { return pos[x] < pos[y]; });

    SubgraphMask h = SubgraphMask::empty(g);
    for (Vertex w : t.c) h.vertices[w] = 1;
    h.vertices[v] = 1;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (h.vertices[g.edge(e).u] && h.vertices[g.edge(e).v]) h.edges[e] = 1;
    Restricted r = restrict_to(g, h);
    std::set<FaceId> occupied;
    for (DartId d = 0; d < g.num_darts(); ++d) {
        if (!h.vertices[g.dart_tail(d)] || h.edges[g.dart_edge(d)]) continue;
        DartId sd = owning_subdart(g, h.edges, d);
        DartId local = *r.graph.find_dart(r.from_parent[g.dart_tail(sd)], r.from_parent[g.dart_head(sd)]);
        occupied.insert(r.graph.face_of_dart(local));
    }
    if (occupied.count(*r.graph.outer_face())) throw InvariantViolation("graph reaches outside its outer cycle");
    if (occupied.size() > 1) return std::nullopt;

    TripodReport rep;
    rep.vertex = v;
    rep.tripod = nb.size() == 3;
    rep.regular = !occupied.empty();
    rep.neighbours = nb;
    if (rep.regular) {
        const auto& fw = r.graph.faces()[*occupied.begin()];
        std::vector<char> on_face(g.num_vertices(), 0);
        for (Vertex x : fw.vertices) {
            on_face[r.to_parent[x]] = 1;
            rep.occupied_face.push_back(r.to_parent[x]);
        }
        if (!on_face[v]) return std::nullopt;
        const std::size_t k = nb.size();
        std::size_t start = k;
        for (std::size_t i = 0; i < k; ++i)
            if (on_face[nb[i]] && on_face[nb[(i + 1) % k]]) start = (i + 1) % k;
        if (start == k) return std::nullopt;
        std::rotate(rep.neighbours.begin(), rep.neighbours.begin() + start, rep.neighbours.end());
    }
    return rep;
}

struct ChordOrTripod {
    std::optional<EdgeId> chord;
    std::optional<TripodReport> tripod;
};

/// A chord of C (lowest id), else the lowest internal vertex with at least
/// three neighbours on C and at most one occupied internal face. Throws
/// InvariantViolation when neither exists; for critical canvases one always
/// does.
inline ChordOrTripod chord_or_tripod(const Canvas& t) {
    ChordOrTripod out;
    auto ch = chords(t.g, t.c);
    if (!ch.empty()) {
        out.chord = ch.front();
        return out;
    }
    for (Vertex v = 0; v < t.g.num_vertices(); ++v)
        if (auto rep = tripod_report(t, v)) {
            out.tripod = std::move(rep);
            return out;
        }
    throw InvariantViolation("canvas has neither a chord nor a tripod");
}

/// T + v: the canvas cut down to the boundary of the occupied face of
/// G[V(C) + v], for a regular tripod v.
inline Canvas relax(const Canvas& t, Vertex v) {
    auto rep = tripod_report(t, v);
    if (!rep || !rep->tripod || !rep->regular) throw InputError("vertex " + std::to_string(v) + " is not a regular tripod");
    DiskSubgraph disk = disk_subgraph(t.g, rep->occupied_face);
    Canvas out;
    out.a = restrict_assignment(t.a, disk.sub);
    out.c = detail::outer_walk_from(disk.sub.graph, disk.cycle[0]);
    out.g = std::move(disk.sub.graph);
    if (out.c.size() != disk.cycle.size()) throw InvariantViolation("relaxed boundary is not the disk boundary");
    const int before = t.g.num_vertices() - static_cast<int>(t.c.size());
    const int after = out.g.num_vertices() - static_cast<int>(out.c.size());
    if (after != before - 1) throw InvariantViolation("relaxation did not remove exactly one internal vertex");
    return out;
}

}  // namespace dpcanvas
