#pragma once

// Instance supply: random stacked triangulations, edge flips, exhaustive
// near-triangulations of small polygons, girth-5 disks, and the assignment
// modes used by the verification suites.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dpcanvas/correspondence.hpp"
#include "dpcanvas/error.hpp"
#include "dpcanvas/plane_graph.hpp"
#include "dpcanvas/random.hpp"
#include "dpcanvas/rational.hpp"

namespace dpcanvas {

using Rotation = std::vector<std::vector<Vertex>>;

/// Random stacked triangulation on n >= 3 vertices: start from a triangle
/// and repeatedly put a new vertex into a uniformly chosen inner face. Outer
/// face is 0 -> 1 -> 2.
inline PlaneGraph stacked_triangulation(int n, std::uint64_t seed) {
    if (n < 3) throw InputError("a triangulation needs at least three vertices");
    SplitMix64 rng(seed);
    std::vector<Vertex> tail, head;
    std::vector<DartId> twin, ncw;
    std::vector<DartId> any(n, kNone);
    auto dart_pair = [&](Vertex x, Vertex y) {
        DartId d = static_cast<DartId>(tail.size());
        tail.insert(tail.end(), {x, y});
        head.insert(head.end(), {y, x});
        twin.insert(twin.end(), {d + 1, d});
        ncw.insert(ncw.end(), {kNone, kNone});
        return d;
    };
    // Triangle 0,1,2 with rotations 0:[1,2] 1:[2,0] 2:[0,1].
    DartId d01 = dart_pair(0, 1), d12 = dart_pair(1, 2), d20 = dart_pair(2, 0);
    DartId d10 = d01 + 1, d21 = d12 + 1, d02 = d20 + 1;
    ncw[d01] = d02, ncw[d02] = d01;
    ncw[d12] = d10, ncw[d10] = d12;
    ncw[d20] = d21, ncw[d21] = d20;
    any[0] = d01, any[1] = d12, any[2] = d20;
    // Inner faces as their three out-darts in walk order.
    std::vector<std::array<DartId, 3>> faces{{d02, d21, d10}};
    auto insert_after = [&](DartId at, DartId d) {
        ncw[d] = ncw[at];
        ncw[at] = d;
    };
    for (Vertex v = 3; v < n; ++v) {
        std::size_t i = rng.below(faces.size());
        auto [a, b, c] = faces[i];
        Vertex x = tail[a], y = tail[b], z = tail[c];
        DartId xv = dart_pair(x, v), yv = dart_pair(y, v), zv = dart_pair(z, v);
        insert_after(a, xv);
        insert_after(b, yv);
        insert_after(c, zv);
        // At v the clockwise order is x, y, z.
        DartId vx = xv + 1, vy = yv + 1, vz = zv + 1;
        ncw[vx] = vy, ncw[vy] = vz, ncw[vz] = vx;
        any[v] = vx;
        faces[i] = {a, yv, vx};
        faces.push_back({b, zv, vy});
        faces.push_back({c, xv, vz});
    }
    Rotation rot(n);
    for (Vertex v = 0; v < n; ++v) {
        DartId d = any[v];
        do {
            rot[v].push_back(head[d]);
            d = ncw[d];
        } while (d != any[v]);
    }
    return PlaneGraph(std::move(rot), 0, 1);
}

/// Flips the edge of dart d (both sides must be triangles). Returns false
/// when the flip would create a multi-edge or d lies on the outer face.
inline bool flip_edge(const PlaneGraph& g, DartId d, Rotation& out) {
    auto outer = g.outer_face();
    DartId t = g.twin(d);
    if (outer && (g.face_of_dart(d) == *outer || g.face_of_dart(t) == *outer)) return false;
    if (g.faces()[g.face_of_dart(d)].length() != 3 || g.faces()[g.face_of_dart(t)].length() != 3) return false;
    Vertex x = g.dart_tail(d), y = g.dart_head(d);
    Vertex z = g.dart_head(g.next_in_face(d)), w = g.dart_head(g.next_in_face(t));
    if (z == w || g.adjacent(z, w)) return false;
    out = g.rotations();
    auto erase = [&](Vertex a, Vertex b) { out[a].erase(std::find(out[a].begin(), out[a].end(), b)); };
    auto insert_after = [&](Vertex a, Vertex after, Vertex b) {
        auto it = std::find(out[a].begin(), out[a].end(), after);
        out[a].insert(it + 1, b);
    };
    erase(x, y);
    erase(y, x);
    insert_after(z, x, w);
    insert_after(w, y, z);
    return true;
}

inline PlaneGraph rebuild(const PlaneGraph& g, Rotation rot) {
    auto f = g.outer_face();
    if (!f) return PlaneGraph(std::move(rot), kNone, kNone);
    return PlaneGraph::with_outer_walk(std::move(rot), g.faces()[*f].vertices);
}

/// Stacked triangulation followed by `flips` random edge flips.
inline PlaneGraph random_triangulation(int n, int flips, std::uint64_t seed) {
    PlaneGraph g = stacked_triangulation(n, seed);
    SplitMix64 rng(seed ^ 0x5bd1e995ULL);
    Rotation rot;
    for (int i = 0; i < flips; ++i) {
        DartId d = static_cast<DartId>(rng.below(static_cast<std::uint64_t>(g.num_darts())));
        if (flip_edge(g, d, rot)) g = rebuild(g, std::move(rot));
    }
    return g;
}

namespace detail {

struct CanonicalResult {
    std::vector<int> code;
    std::vector<int> label;
    bool mirror = false;
};

// BFS from every outer root dart, in both orientations; the rotation of each
// vertex is read starting from the dart back to its discoverer.
inline CanonicalResult canonical(const PlaneGraph& g) {
    CanonicalResult best;
    auto outer = g.outer_face();
    const int n = g.num_vertices();
    if (!outer) {
        best.code = {n};
        best.label.resize(n);
        for (int i = 0; i < n; ++i) best.label[i] = i;
        return best;
    }
    std::vector<int> label(n);
    std::vector<DartId> ref(n);
    std::vector<Vertex> order;
    std::vector<int> code;
    for (int mirror = 0; mirror < 2; ++mirror) {
        for (DartId root : g.faces()[*outer].darts) {
            std::fill(label.begin(), label.end(), -1);
            code.clear();
            order.clear();
            DartId r = mirror ? g.twin(root) : root;
            label[g.dart_tail(r)] = 0;
            ref[g.dart_tail(r)] = r;
            order.push_back(g.dart_tail(r));
            bool worse = false;
            for (std::size_t i = 0; i < order.size() && !worse; ++i) {
                Vertex v = order[i];
                DartId d = ref[v];
                for (int k = 0; k < g.degree(v); ++k) {
                    Vertex w = g.dart_head(d);
                    if (label[w] < 0) {
                        label[w] = static_cast<int>(order.size());
                        ref[w] = g.twin(d);
                        order.push_back(w);
                    }
                    code.push_back(label[w]);
                    d = mirror ? g.prev_cw(d) : g.next_cw(d);
                }
                code.push_back(-1);
                if (!best.code.empty() && std::lexicographical_compare(best.code.begin(), best.code.end(),
                                                                       code.begin(), code.end()))
                    worse = true;
            }
            if (worse) continue;
            if (order.size() < static_cast<std::size_t>(n)) throw InputError("canonical code needs a connected graph");
            if (best.code.empty() || code < best.code) {
                best.code = code;
                best.label = label;
                best.mirror = mirror;
            }
        }
    }
    return best;
}

}  // namespace detail

/// Canonical code of a connected plane graph rooted on its outer face,
/// minimised over the outer darts and over mirror images. Equal codes mean
/// isomorphic plane graphs with the same outer face.
inline std::vector<int> canonical_code(const PlaneGraph& g) { return detail::canonical(g).code; }

/// Relabels g in the vertex order of its canonical code.
inline PlaneGraph canonical_form(const PlaneGraph& g) {
    auto outer = g.outer_face();
    if (!outer) return g;
    auto c = detail::canonical(g);
    const int n = g.num_vertices();
    Rotation rot(n);
    for (Vertex v = 0; v < n; ++v) {
        auto& r = rot[c.label[v]];
        for (Vertex w : g.rotation(v)) r.push_back(c.label[w]);
        if (c.mirror) std::reverse(r.begin(), r.end());
    }
    std::vector<Vertex> walk;
    for (Vertex v : g.faces()[*outer].vertices) walk.push_back(c.label[v]);
    if (c.mirror) std::reverse(walk.begin(), walk.end());
    return PlaneGraph::with_outer_walk(std::move(rot), walk);
}

/// The cycle 0, 1, ..., len-1 as a plane graph with outer walk in that order.
inline PlaneGraph cycle_graph(int len) {
    Rotation rot(len);
    // Outer walk 0,1,2,...: the face through 0 -> 1 continues with the
    // dart just counterclockwise of 1 -> 0, so each rotation is [prev, next].
    for (int i = 0; i < len; ++i) rot[i] = {(i + len - 1) % len, (i + 1) % len};
    return PlaneGraph(std::move(rot), 0, 1);
}

/// All near-triangulations (inner faces triangles, chords allowed) whose
/// outer face is a cycle of length boundary and which have exactly internal
/// inner vertices, one per plane isomorphism class. Returned in canonical
/// form, sorted by code.
inline std::vector<PlaneGraph> near_triangulations(int boundary, int internal) {
    if (boundary < 3) throw InputError("boundary must have length at least 3");
    if (boundary > 9 || internal > 6) throw ResourceError("near-triangulation enumeration beyond desk scale",
                                                          static_cast<unsigned long long>(boundary * 100 + internal));
    std::map<std::vector<int>, PlaneGraph> level;
    auto closure = [&](std::vector<PlaneGraph> seeds) {
        std::map<std::vector<int>, PlaneGraph> seen;
        std::vector<PlaneGraph> work;
        for (auto& g : seeds) {
            auto c = canonical_code(g);
            if (seen.emplace(c, g).second) work.push_back(g);
        }
        Rotation rot;
        while (!work.empty()) {
            PlaneGraph g = std::move(work.back());
            work.pop_back();
            for (EdgeId e = 0; e < g.num_edges(); ++e) {
                if (!flip_edge(g, g.edge_dart(e, 0), rot)) continue;
                PlaneGraph h = rebuild(g, std::move(rot));
                auto c = canonical_code(h);
                if (seen.emplace(c, h).second) work.push_back(h);
            }
        }
        return seen;
    };
    // Fan triangulation of the polygon from vertex 0.
    PlaneGraph poly = cycle_graph(boundary);
    if (boundary > 3) {
        Rotation rot(boundary);
        for (int x = boundary - 1; x >= 1; --x) rot[0].push_back(x);
        rot[1] = {0, 2};
        rot[boundary - 1] = {boundary - 2, 0};
        for (int x = 2; x + 1 < boundary; ++x) rot[x] = {x - 1, 0, x + 1};
        poly = PlaneGraph::with_outer_walk(std::move(rot), poly.outer_walk());
    }
    level = closure({poly});
    for (int k = 1; k <= internal; ++k) {
        std::vector<PlaneGraph> seeds;
        for (auto& [code, g] : level) {
            const int n = g.num_vertices();
            for (FaceId f = 0; f < static_cast<FaceId>(g.faces().size()); ++f) {
                if (f == *g.outer_face()) continue;
                const auto& fw = g.faces()[f];
                Rotation rot = g.rotations();
                rot.emplace_back();
                for (int i = 0; i < 3; ++i) {
                    DartId d = fw.darts[i];
                    Vertex x = g.dart_tail(d);
                    auto it = std::find(rot[x].begin(), rot[x].end(), g.dart_head(d));
                    rot[x].insert(it + 1, n);
                    rot[n].push_back(x);
                }
                seeds.push_back(PlaneGraph::with_outer_walk(std::move(rot), g.outer_walk()));
            }
        }
        level = closure(std::move(seeds));
    }
    std::vector<PlaneGraph> out;
    for (auto& [code, g] : level) out.push_back(canonical_form(g));
    return out;
}

/// Shortest cycle length, or nothing for forests.
inline std::optional<int> girth(const PlaneGraph& g) {
    const int n = g.num_vertices();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = kNone;
        queue.assign(1, s);
        for (std::size_t i = 0; i < queue.size(); ++i) {
            Vertex v = queue[i];
            if (2 * dist[v] + 1 >= best) break;
            for (Vertex w : g.rotation(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (w != parent[v]) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

/// Random 2-connected plane graph of girth at least five: a cycle of length
/// boundary plus `ears` paths of 0..3 new vertices drawn across inner faces.
/// Paths that would close a cycle shorter than five are rejected.
inline PlaneGraph random_girth5_disk(int boundary, int ears, std::uint64_t seed, int max_vertices = 40) {
    if (boundary < 5) throw InputError("girth-5 disks need a boundary of length at least 5");
    SplitMix64 rng(seed);
    PlaneGraph g = cycle_graph(boundary);
    int attempts = 0;
    for (int added = 0; added < ears && attempts < 50 * (ears + 1); ++attempts) {
        std::vector<FaceId> inner;
        for (FaceId f = 0; f < static_cast<FaceId>(g.faces().size()); ++f)
            if (f != *g.outer_face()) inner.push_back(f);
        const auto& fw = g.faces()[inner[rng.below(inner.size())]];
        const int len = static_cast<int>(fw.length());
        int i = rng.below_int(len), j = rng.below_int(len);
        if (i == j) continue;
        int t = rng.below_int(4);
        if (g.num_vertices() + t > max_vertices) continue;
        // Path i -> ... -> j inside the face; the face splits into two cycles
        // of lengths gap + t + 1 and len - gap + t + 1.
        int gap = (j - i + len) % len;
        if (gap + t + 1 < 5 || len - gap + t + 1 < 5) continue;
        if (t == 0 && g.adjacent(fw.vertices[i], fw.vertices[j])) continue;
        Rotation rot = g.rotations();
        const int n = g.num_vertices();
        std::vector<Vertex> path{fw.vertices[i]};
        for (int k = 0; k < t; ++k) path.push_back(n + k);
        path.push_back(fw.vertices[j]);
        rot.resize(n + t);
        // New darts sit in the face corner: clockwise after the out-dart.
        auto at_corner = [&](int idx, Vertex to) {
            Vertex x = fw.vertices[idx];
            auto it = std::find(rot[x].begin(), rot[x].end(), g.dart_head(fw.darts[idx]));
            rot[x].insert(it + 1, to);
        };
        at_corner(i, path[1]);
        at_corner(j, path[path.size() - 2]);
        for (int k = 1; k + 1 < static_cast<int>(path.size()); ++k) rot[path[k]] = {path[k - 1], path[k + 1]};
        PlaneGraph h = PlaneGraph::with_outer_walk(std::move(rot), g.outer_walk());
        auto gi = girth(h);
        if (gi && *gi < 5) continue;
        g = std::move(h);
        ++added;
    }
    return g;
}

/// Denser girth-5 disk: ears are started at internal vertices of degree two
/// whenever the chosen face has one, and use the fewest new vertices that
/// keep both new faces at length five or more. Stops at max_vertices or
/// after `steps` attempts.
inline PlaneGraph random_girth5_patch(int boundary, int max_vertices, int steps, std::uint64_t seed) {
    if (boundary < 5) throw InputError("girth-5 disks need a boundary of length at least 5");
    SplitMix64 rng(seed);
    PlaneGraph g = cycle_graph(boundary);
    for (int step = 0; step < steps; ++step) {
        auto outer = g.outer_vertex_mask();
        std::vector<FaceId> inner;
        for (FaceId f = 0; f < static_cast<FaceId>(g.faces().size()); ++f)
            if (f != *g.outer_face()) inner.push_back(f);
        const auto& fw = g.faces()[inner[rng.below(inner.size())]];
        const int len = static_cast<int>(fw.length());
        std::vector<int> weak;
        for (int k = 0; k < len; ++k)
            if (!outer[fw.vertices[k]] && g.degree(fw.vertices[k]) == 2) weak.push_back(k);
        int i = weak.empty() ? rng.below_int(len) : weak[rng.below(weak.size())];
        int j = rng.below_int(len);
        if (weak.size() > 1 && rng.chance(1, 2)) j = weak[rng.below(weak.size())];
        if (i == j) continue;
        int gap = (j - i + len) % len;
        int t = std::max(0, 4 - std::min(gap, len - gap));
        if (g.num_vertices() + t > max_vertices) continue;
        if (t == 0 && g.adjacent(fw.vertices[i], fw.vertices[j])) continue;
        Rotation rot = g.rotations();
        const int n = g.num_vertices();
        std::vector<Vertex> path{fw.vertices[i]};
        for (int k = 0; k < t; ++k) path.push_back(n + k);
        path.push_back(fw.vertices[j]);
        rot.resize(n + t);
        auto at_corner = [&](int idx, Vertex to) {
            Vertex x = fw.vertices[idx];
            auto it = std::find(rot[x].begin(), rot[x].end(), g.dart_head(fw.darts[idx]));
            rot[x].insert(it + 1, to);
        };
        at_corner(i, path[1]);
        at_corner(j, path[path.size() - 2]);
        for (int k = 1; k + 1 < static_cast<int>(path.size()); ++k) rot[path[k]] = {path[k - 1], path[k + 1]};
        PlaneGraph h = PlaneGraph::with_outer_walk(std::move(rot), g.outer_walk());
        auto gi = girth(h);
        if (gi && *gi < 5) continue;
        g = std::move(h);
    }
    return g;
}

namespace detail {

// g plus a path from corner i to corner j of face f through t new vertices.
inline PlaneGraph add_face_path(const PlaneGraph& g, FaceId f, int i, int j, int t) {
    const auto& fw = g.faces()[f];
    Rotation rot = g.rotations();
    const int n = g.num_vertices();
    std::vector<Vertex> path{fw.vertices[i]};
    for (int k = 0; k < t; ++k) path.push_back(n + k);
    path.push_back(fw.vertices[j]);
    rot.resize(n + t);
    auto at_corner = [&](int idx, Vertex to) {
        Vertex x = fw.vertices[idx];
        auto it = std::find(rot[x].begin(), rot[x].end(), g.dart_head(fw.darts[idx]));
        rot[x].insert(it + 1, to);
    };
    at_corner(i, path[1]);
    at_corner(j, path[path.size() - 2]);
    for (int k = 1; k + 1 < static_cast<int>(path.size()); ++k) rot[path[k]] = {path[k - 1], path[k + 1]};
    return PlaneGraph::with_outer_walk(std::move(rot), g.outer_walk());
}

}  // namespace detail

/// Girth-5 disk whose interior is a tree: a path of `internal` vertices
/// across the cycle, then random legs from degree-two path vertices to the
/// boundary while the girth stays at five. Internal degrees are at most 3.
inline PlaneGraph random_girth5_tree_disk(int boundary, int internal, std::uint64_t seed) {
    if (boundary < 5) throw InputError("girth-5 disks need a boundary of length at least 5");
    if (internal < 1) throw InputError("tree disks need at least one internal vertex");
    SplitMix64 rng(seed);
    PlaneGraph g = cycle_graph(boundary);
    FaceId inner = *g.outer_face() == 0 ? 1 : 0;
    // Arc offset d between the path ends; both new faces need length >= 5.
    const int lo = std::max(1, 4 - internal), hi = std::min(boundary - 1, boundary + internal - 4);
    if (lo > hi) throw InputError("boundary too short for a girth-5 path of that length");
    const int d = std::clamp(boundary / 2 + rng.below_int(3) - 1, lo, hi);
    int i = rng.below_int(boundary);
    g = detail::add_face_path(g, inner, i, (i + d) % boundary, internal);
    for (int attempt = 0; attempt < 8 * internal; ++attempt) {
        auto outer = g.outer_vertex_mask();
        std::vector<Vertex> weak;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (!outer[v] && g.degree(v) == 2) weak.push_back(v);
        if (weak.empty()) break;
        Vertex v = weak[rng.below(weak.size())];
        std::vector<std::array<int, 3>> cand;  // face, corner of v, corner of the boundary end
        for (FaceId f = 0; f < static_cast<FaceId>(g.faces().size()); ++f) {
            if (f == *g.outer_face()) continue;
            const auto& vs = g.faces()[f].vertices;
            auto it = std::find(vs.begin(), vs.end(), v);
            if (it == vs.end()) continue;
            for (int k = 0; k < static_cast<int>(vs.size()); ++k)
                if (outer[vs[k]] && !g.adjacent(v, vs[k])) cand.push_back({f, static_cast<int>(it - vs.begin()), k});
        }
        if (cand.empty()) continue;
        auto [f, a, b] = cand[rng.below(cand.size())];
        PlaneGraph h = detail::add_face_path(g, f, a, b, 0);
        auto gi = girth(h);
        if (gi && *gi < 5) continue;
        g = std::move(h);
    }
    return g;
}

enum class AssignmentMode { ListLike, SaturatedRandom, SparseRandom };

inline std::string to_string(AssignmentMode m) {
    switch (m) {
        case AssignmentMode::ListLike: return "list-like";
        case AssignmentMode::SaturatedRandom: return "saturated-random";
        case AssignmentMode::SparseRandom: return "sparse-random";
    }
    return "?";
}

inline AssignmentMode parse_assignment_mode(const std::string& s) {
    if (s == "list-like") return AssignmentMode::ListLike;
    if (s == "saturated-random") return AssignmentMode::SaturatedRandom;
    if (s == "sparse-random") return AssignmentMode::SparseRandom;
    throw InputError("unknown assignment mode '" + s + "'");
}

inline constexpr int kListLikePalette = 7;

/// Assignment with boundary lists of size outer_size and inner lists of
/// size inner_size. List-like draws subsets of a 7-colour palette;
/// the random modes use random_assignment with density 1 or 1/2.
inline CorrespondenceAssignment make_assignment(const PlaneGraph& g, AssignmentMode mode, std::uint64_t seed,
                                                int outer_size = 3, int inner_size = 5) {
    auto outer = g.outer_vertex_mask();
    std::vector<int> sizes(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) sizes[v] = outer[v] ? outer_size : inner_size;
    if (mode == AssignmentMode::ListLike) {
        SplitMix64 rng(seed);
        std::vector<std::vector<int>> lists(g.num_vertices());
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            std::vector<int> pal(std::max(kListLikePalette, sizes[v]));
            for (int c = 0; c < static_cast<int>(pal.size()); ++c) pal[c] = c;
            rng.shuffle(pal);
            pal.resize(sizes[v]);
            std::sort(pal.begin(), pal.end());
            lists[v] = pal;
        }
        return from_list_assignment(g, lists);
    }
    Rational density = mode == AssignmentMode::SaturatedRandom ? Rational(1) : Rational(1, 2);
    return random_assignment(g, sizes, density, seed);
}

}  // namespace dpcanvas
