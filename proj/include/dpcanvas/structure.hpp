#pragma once

// Subgraphs of plane graphs and the structural predicates used on canvases:
// 2-connectivity, induced sub-embeddings, disks bounded by cycles, chords,
// degree conditions and short separating cycles.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpcanvas/error.hpp"
#include "dpcanvas/plane_graph.hpp"

namespace dpcanvas {

/// Vertex and edge selection over a parent graph. Edges must only join
/// selected vertices.
struct SubgraphMask {
    std::vector<char> vertices;
    std::vector<char> edges;

    static SubgraphMask full(const PlaneGraph& g) {
        return {std::vector<char>(g.num_vertices(), 1), std::vector<char>(g.num_edges(), 1)};
    }
    static SubgraphMask empty(const PlaneGraph& g) {
        return {std::vector<char>(g.num_vertices(), 0), std::vector<char>(g.num_edges(), 0)};
    }
    int vertex_count() const { return static_cast<int>(std::count(vertices.begin(), vertices.end(), 1)); }
    int edge_count() const { return static_cast<int>(std::count(edges.begin(), edges.end(), 1)); }
    bool contains(const SubgraphMask& other) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (other.vertices[i] && !vertices[i]) return false;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (other.edges[i] && !edges[i]) return false;
        return true;
    }
    friend bool operator==(const SubgraphMask&, const SubgraphMask&) = default;
};

/// Checks that consecutive vertices of the cyclic sequence are adjacent and
/// that no vertex repeats. Throws InputError otherwise.
inline void require_cycle(const PlaneGraph& g, const std::vector<Vertex>& cycle) {
    if (cycle.size() < 3) throw InputError("a cycle needs at least three vertices");
    std::vector<char> seen(g.num_vertices(), 0);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Vertex v = cycle[i];
        if (v < 0 || v >= g.num_vertices()) throw InputError("cycle vertex out of range");
        if (seen[v]) throw InputError("cycle repeats vertex " + std::to_string(v));
        seen[v] = 1;
        if (!g.adjacent(v, cycle[(i + 1) % cycle.size()]))
            throw InputError("cycle vertices " + std::to_string(v) + " and " +
                             std::to_string(cycle[(i + 1) % cycle.size()]) + " are not adjacent");
    }
}

inline SubgraphMask cycle_mask(const PlaneGraph& g, const std::vector<Vertex>& cycle) {
    require_cycle(g, cycle);
    SubgraphMask m = SubgraphMask::empty(g);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        m.vertices[cycle[i]] = 1;
        m.edges[*g.find_edge(cycle[i], cycle[(i + 1) % cycle.size()])] = 1;
    }
    return m;
}

/// True iff the selected subgraph is connected, has at least three vertices
/// and no cut vertex.
inline bool is_two_connected(const PlaneGraph& g, const SubgraphMask& m) {
    const int n = g.num_vertices();
    int count = m.vertex_count();
    if (count < 3) return false;
    Vertex root = kNone;
    for (Vertex v = 0; v < n; ++v)
        if (m.vertices[v]) {
            root = v;
            break;
        }
    std::vector<int> disc(n, -1), low(n, 0);
    struct Frame {
        Vertex v;
        DartId parent_dart;
        int next;
    };
    std::vector<Frame> stack;
    int time = 0, root_children = 0;
    bool cut = false;
    disc[root] = low[root] = time++;
    stack.push_back({root, kNone, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next < g.degree(f.v)) {
            DartId d = g.first_dart(f.v) + f.next++;
            if (!m.edges[g.dart_edge(d)] || (f.parent_dart != kNone && d == g.twin(f.parent_dart))) continue;
            Vertex w = g.dart_head(d);
            if (disc[w] < 0) {
                disc[w] = low[w] = time++;
                if (f.v == root) ++root_children;
                stack.push_back({w, d, 0});
            } else {
                low[f.v] = std::min(low[f.v], disc[w]);
            }
        } else {
            Vertex v = f.v;
            DartId pd = f.parent_dart;
            stack.pop_back();
            if (pd != kNone) {
                Vertex p = g.dart_tail(pd);
                low[p] = std::min(low[p], low[v]);
                if (p != root && low[v] >= disc[p]) cut = true;
            }
        }
    }
    if (root_children > 1) cut = true;
    for (Vertex v = 0; v < n; ++v)
        if (m.vertices[v] && disc[v] < 0) return false;
    return !cut;
}

inline bool is_two_connected(const PlaneGraph& g) { return is_two_connected(g, SubgraphMask::full(g)); }

/// A subgraph re-embedded with dense vertex ids. Vertex order and edge
/// orientation follow the parent.
struct Restricted {
    PlaneGraph graph;
    std::vector<Vertex> to_parent;    // local -> parent
    std::vector<Vertex> from_parent;  // parent -> local or kNone
    std::vector<EdgeId> edge_to_parent;
};

/// Outgoing dart of the sub-embedding face that contains the corner lying
/// clockwise after parent dart d (at d's tail). Returns kNone if the tail has
/// no selected edge.
inline DartId owning_subdart(const PlaneGraph& g, const std::vector<char>& edge_mask, DartId d) {
    DartId x = d;
    for (int i = 0; i < g.degree(g.dart_tail(d)); ++i, x = g.prev_cw(x))
        if (edge_mask[g.dart_edge(x)]) return x;
    return kNone;
}

/// Restricts g to the mask. The outer face of the result is the face with
/// outgoing dart outer_hint (a parent dart of a selected edge) when given;
/// otherwise the face that contains the parent's outer face; otherwise the
/// first traced face.
inline Restricted restrict_to(const PlaneGraph& g, const SubgraphMask& m, DartId outer_hint = kNone) {
    Restricted r;
    const int n = g.num_vertices();
    r.from_parent.assign(n, kNone);
    for (Vertex v = 0; v < n; ++v)
        if (m.vertices[v]) {
            r.from_parent[v] = static_cast<Vertex>(r.to_parent.size());
            r.to_parent.push_back(v);
        }
    std::vector<std::vector<Vertex>> rot(r.to_parent.size());
    for (std::size_t i = 0; i < r.to_parent.size(); ++i) {
        Vertex v = r.to_parent[i];
        for (int k = 0; k < g.degree(v); ++k) {
            DartId d = g.first_dart(v) + k;
            if (!m.edges[g.dart_edge(d)]) continue;
            Vertex w = g.dart_head(d);
            if (!m.vertices[w]) throw InputError("subgraph edge leaves the selected vertices");
            rot[i].push_back(r.from_parent[w]);
        }
    }
    DartId outer = outer_hint;
    if (outer == kNone) {
        if (auto f = g.outer_face()) {
            for (DartId d : g.faces()[*f].darts) {
                if (!m.vertices[g.dart_tail(d)]) continue;
                outer = owning_subdart(g, m.edges, d);
                if (outer != kNone) break;
            }
        }
    }
    bool has_edges = false;
    for (char e : m.edges) has_edges = has_edges || e;
    if (!has_edges) {
        Vertex only = kNone;
        if (auto f = g.outer_face()) {
            for (Vertex v : g.faces()[*f].vertices)
                if (m.vertices[v]) {
                    only = r.from_parent[v];
                    break;
                }
        }
        r.graph = PlaneGraph(std::move(rot), only, kNone);
    } else if (outer == kNone) {
        // No contact with the parent's outer face: first selected dart.
        for (DartId d = 0; d < g.num_darts() && outer == kNone; ++d)
            if (m.edges[g.dart_edge(d)]) outer = d;
        r.graph = PlaneGraph(std::move(rot), r.from_parent[g.dart_tail(outer)], r.from_parent[g.dart_head(outer)]);
    } else {
        if (!m.edges[g.dart_edge(outer)]) throw InputError("outer hint dart is not selected");
        r.graph = PlaneGraph(std::move(rot), r.from_parent[g.dart_tail(outer)], r.from_parent[g.dart_head(outer)]);
    }
    for (const Edge& e : r.graph.edges())
        r.edge_to_parent.push_back(*g.find_edge(r.to_parent[e.u], r.to_parent[e.v]));
    return r;
}

namespace detail {

// Two sides of a cycle: side A at c[i] is strictly clockwise after the dart to
// c[i+1] and before the dart to c[i-1]; side B is the rest.
struct CycleSides {
    std::vector<char> on_cycle;
    std::vector<int> side;     // per vertex: 0 = A, 1 = B, -1 = on cycle or unreached
    std::vector<int> dart_side;  // per dart leaving a cycle vertex: 0/1, -1 for cycle darts
    int inside = -1;           // side bounded by the cycle (disk interior)
};

inline CycleSides split_by_cycle(const PlaneGraph& g, const std::vector<Vertex>& cycle) {
    require_cycle(g, cycle);
    CycleSides cs;
    const int n = g.num_vertices();
    const std::size_t m = cycle.size();
    cs.on_cycle.assign(n, 0);
    cs.side.assign(n, -1);
    cs.dart_side.assign(g.num_darts(), -1);
    for (Vertex v : cycle) cs.on_cycle[v] = 1;
    std::vector<Vertex> stack[2];
    for (std::size_t i = 0; i < m; ++i) {
        Vertex v = cycle[i];
        DartId s = *g.find_dart(v, cycle[(i + 1) % m]);
        DartId p = *g.find_dart(v, cycle[(i + m - 1) % m]);
        int current = 0;
        DartId d = g.next_cw(s);
        for (int k = 0; k + 1 < g.degree(v); ++k, d = g.next_cw(d)) {
            if (d == p) {
                current = 1;
                continue;
            }
            cs.dart_side[d] = current;
            Vertex w = g.dart_head(d);
            if (!cs.on_cycle[w] && cs.side[w] < 0) {
                cs.side[w] = current;
                stack[current].push_back(w);
            }
        }
    }
    for (int sd = 0; sd < 2; ++sd) {
        while (!stack[sd].empty()) {
            Vertex v = stack[sd].back();
            stack[sd].pop_back();
            for (Vertex w : g.rotation(v)) {
                if (cs.on_cycle[w]) continue;
                if (cs.side[w] >= 0 && cs.side[w] != sd)
                    throw EmbeddingError("cycle does not separate the embedding consistently");
                if (cs.side[w] < 0) {
                    cs.side[w] = sd;
                    stack[sd].push_back(w);
                }
            }
        }
    }
    // The outer side is the one holding the outer face's corner at a cycle
    // vertex, or else an outer-face vertex off the cycle.
    auto outer = g.outer_face();
    if (!outer) throw InputError("graph has no outer face");
    const FaceWalk& walk = g.faces()[*outer];
    for (DartId d : walk.darts) {
        Vertex v = g.dart_tail(d);
        if (!cs.on_cycle[v]) continue;
        std::size_t i = std::find(cycle.begin(), cycle.end(), v) - cycle.begin();
        DartId s = *g.find_dart(v, cycle[(i + 1) % m]);
        int outer_side = d == s ? 0 : (g.dart_head(d) == cycle[(i + m - 1) % m] ? 1 : cs.dart_side[d]);
        cs.inside = 1 - outer_side;
        return cs;
    }
    for (Vertex v : walk.vertices)
        if (cs.side[v] >= 0) {
            cs.inside = 1 - cs.side[v];
            return cs;
        }
    throw InputError("outer face is not in the component of the cycle");
}

}  // namespace detail

/// G<C'>: the cycle together with everything embedded in the closed disk it
/// bounds, with its induced embedding and C' as the outer face.
struct DiskSubgraph {
    Restricted sub;
    std::vector<Vertex> cycle;  // local ids, same order as the input cycle
    SubgraphMask mask;          // over the parent
};

inline SubgraphMask disk_mask(const PlaneGraph& g, const std::vector<Vertex>& cycle) {
    auto cs = detail::split_by_cycle(g, cycle);
    SubgraphMask m = cycle_mask(g, cycle);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (cs.side[v] == cs.inside) m.vertices[v] = 1;
    for (DartId d = 0; d < g.num_darts(); ++d) {
        Vertex a = g.dart_tail(d);
        if (cs.on_cycle[a] ? cs.dart_side[d] == cs.inside : cs.side[a] == cs.inside) m.edges[g.dart_edge(d)] = 1;
    }
    return m;
}

/// Vertices strictly inside the disk bounded by the cycle.
inline std::vector<Vertex> disk_interior(const PlaneGraph& g, const std::vector<Vertex>& cycle) {
    auto cs = detail::split_by_cycle(g, cycle);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (cs.side[v] == cs.inside) out.push_back(v);
    return out;
}

inline DiskSubgraph disk_subgraph(const PlaneGraph& g, const std::vector<Vertex>& cycle) {
    auto cs = detail::split_by_cycle(g, cycle);
    DiskSubgraph disk;
    disk.mask = disk_mask(g, cycle);
    // Outer face of the disk: the corner outside the cycle at cycle[0].
    DartId outer = cs.inside == 0 ? *g.find_dart(cycle[0], cycle.back()) : *g.find_dart(cycle[0], cycle[1]);
    disk.sub = restrict_to(g, disk.mask, outer);
    for (Vertex v : cycle) disk.cycle.push_back(disk.sub.from_parent[v]);
    return disk;
}

/// Edges joining two vertices of the cycle that are not consecutive on it.
inline std::vector<EdgeId> chords(const PlaneGraph& g, const std::vector<Vertex>& cycle) {
    require_cycle(g, cycle);
    std::vector<int> pos(g.num_vertices(), -1);
    const int m = static_cast<int>(cycle.size());
    for (int i = 0; i < m; ++i) pos[cycle[i]] = i;
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        int a = pos[g.edge(e).u], b = pos[g.edge(e).v];
        if (a < 0 || b < 0) continue;
        int gap = std::abs(a - b);
        if (gap != 1 && gap != m - 1) out.push_back(e);
    }
    return out;
}

/// Every vertex off the cycle has degree at least five.
inline bool internal_degrees_ok(const PlaneGraph& g, const std::vector<Vertex>& cycle) {
    std::vector<char> on(g.num_vertices(), 0);
    for (Vertex v : cycle) on[v] = 1;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!on[v] && g.degree(v) < 5) return false;
    return true;
}

/// Calls fn(cycle) for every cycle of length 3 or 4, each once.
template <class Fn>
void for_each_short_cycle(const PlaneGraph& g, Fn&& fn) {
    const int n = g.num_vertices();
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b : g.rotation(a)) {
            if (b <= a) continue;
            for (Vertex c : g.rotation(b))
                if (c > b && g.adjacent(a, c)) fn(std::vector<Vertex>{a, b, c});
        }
        // 4-cycles a-b-c-d with a the minimum and b < d.
        for (Vertex b : g.rotation(a)) {
            if (b <= a) continue;
            for (Vertex d : g.rotation(a)) {
                if (d <= b) continue;
                for (Vertex c : g.rotation(b))
                    if (c > a && c != d && g.adjacent(c, d)) fn(std::vector<Vertex>{a, b, c, d});
            }
        }
    }
}

/// Every cycle of length at most four bounds a disk with no vertex inside.
inline bool short_cycle_interiors_empty(const PlaneGraph& g) {
    bool ok = true;
    for_each_short_cycle(g, [&](const std::vector<Vertex>& c) {
        if (ok && !disk_interior(g, c).empty()) ok = false;
    });
    return ok;
}

}  // namespace dpcanvas
