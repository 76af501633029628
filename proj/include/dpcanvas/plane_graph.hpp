#pragma once

// Combinatorial plane embeddings given by rotation systems.
//
// Conventions used throughout the library:
//  * rotation(v) lists the neighbours of v in clockwise order;
//  * darts are directed edges, dart (v, i) leaves v towards rotation(v)[i];
//  * faces are traced with next_in_face(d) = prev_cw(twin(d)), i.e. on arrival
//    at a vertex we leave along the edge immediately counterclockwise of the
//    one we came in on;
//  * the unbounded face is declared, never inferred.
//
// With these conventions the corner of a face at a vertex x lies clockwise
// after the face's outgoing dart at x.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dpcanvas/error.hpp"

namespace dpcanvas {

using Vertex = int;
using EdgeId = int;
using DartId = int;
using FaceId = int;

inline constexpr int kNone = -1;

struct Edge {
    Vertex u;  // lower id
    Vertex v;  // higher id
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct FaceWalk {
    std::vector<Vertex> vertices;
    std::vector<DartId> darts;  // darts[i] leaves vertices[i]
    std::size_t length() const { return darts.size(); }
};

/// Boundary walk of the outer face, plus whether it is a simple cycle.
struct BoundaryWalk {
    std::vector<Vertex> vertices;
    bool is_cycle = false;
};

class PlaneGraph {
public:
    PlaneGraph() = default;

    /// Builds an embedding whose outer face is the face traced through the
    /// dart outer_tail -> outer_head. Pass kNone for both on edgeless graphs.
    PlaneGraph(std::vector<std::vector<Vertex>> rotation, Vertex outer_tail, Vertex outer_head)
        : rotation_(std::move(rotation)) {
        build();
        if (num_darts() == 0) {
            if (outer_tail != kNone && (outer_tail < 0 || outer_tail >= num_vertices()))
                throw EmbeddingError("outer vertex out of range");
            outer_face_ = kNone;
            outer_isolated_ = num_vertices() > 0 ? (outer_tail == kNone ? 0 : outer_tail) : kNone;
            return;
        }
        auto d = find_dart(outer_tail, outer_head);
        if (!d) throw EmbeddingError("outer dart is not an edge of the graph");
        outer_face_ = face_of_dart_[*d];
    }

    /// Builds an embedding whose outer face has exactly the given boundary
    /// walk (cyclic, in traced orientation, any starting point).
    static PlaneGraph with_outer_walk(std::vector<std::vector<Vertex>> rotation,
                                      const std::vector<Vertex>& outer_walk) {
        PlaneGraph g;
        g.rotation_ = std::move(rotation);
        g.build();
        if (g.num_darts() == 0) {
            if (outer_walk.size() > 1) throw EmbeddingError("edgeless graph has a one-vertex outer walk");
            if (!outer_walk.empty() && (outer_walk[0] < 0 || outer_walk[0] >= g.num_vertices()))
                throw EmbeddingError("outer vertex out of range");
            g.outer_isolated_ = outer_walk.empty() ? (g.num_vertices() > 0 ? 0 : kNone) : outer_walk[0];
            return g;
        }
        for (FaceId f = 0; f < static_cast<FaceId>(g.faces_.size()); ++f) {
            if (same_cyclic(g.faces_[f].vertices, outer_walk)) {
                g.outer_face_ = f;
                return g;
            }
        }
        throw EmbeddingError("declared outer face walk matches no traced face");
    }

    int num_vertices() const { return static_cast<int>(rotation_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_darts() const { return static_cast<int>(dart_head_.size()); }
    int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }

    std::span<const Vertex> rotation(Vertex v) const { return rotation_[v]; }
    const std::vector<std::vector<Vertex>>& rotations() const { return rotation_; }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::optional<EdgeId> find_edge(Vertex a, Vertex b) const {
        if (a == b || a < 0 || b < 0 || a >= num_vertices() || b >= num_vertices()) return std::nullopt;
        Edge key{std::min(a, b), std::max(a, b)};
        auto it = std::lower_bound(edges_.begin(), edges_.end(), key, [](const Edge& x, const Edge& y) {
            return x.u != y.u ? x.u < y.u : x.v < y.v;
        });
        if (it == edges_.end() || !(*it == key)) return std::nullopt;
        return static_cast<EdgeId>(it - edges_.begin());
    }
    bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

    // Darts.
    DartId first_dart(Vertex v) const { return dart_offset_[v]; }
    Vertex dart_tail(DartId d) const { return dart_tail_[d]; }
    Vertex dart_head(DartId d) const { return dart_head_[d]; }
    EdgeId dart_edge(DartId d) const { return dart_edge_[d]; }
    DartId twin(DartId d) const { return twin_[d]; }
    DartId next_cw(DartId d) const {
        Vertex v = dart_tail_[d];
        DartId i = d - dart_offset_[v] + 1;
        return dart_offset_[v] + (i == degree(v) ? 0 : i);
    }
    DartId prev_cw(DartId d) const {
        Vertex v = dart_tail_[d];
        DartId i = d - dart_offset_[v];
        return dart_offset_[v] + (i == 0 ? degree(v) - 1 : i - 1);
    }
    DartId next_in_face(DartId d) const { return prev_cw(twin_[d]); }
    std::optional<DartId> find_dart(Vertex a, Vertex b) const {
        auto e = find_edge(a, b);
        if (!e) return std::nullopt;
        return edge_dart_[*e][a < b ? 0 : 1];
    }
    /// The dart of edge e leaving its lower (0) or higher (1) endpoint.
    DartId edge_dart(EdgeId e, int side) const { return edge_dart_[e][side]; }

    // Faces.
    const std::vector<FaceWalk>& faces() const { return faces_; }
    FaceId face_of_dart(DartId d) const { return face_of_dart_[d]; }
    std::optional<FaceId> outer_face() const {
        if (outer_face_ == kNone) return std::nullopt;
        return outer_face_;
    }
    /// Vertex sequence of the outer face walk; a single vertex for an
    /// edgeless non-empty graph.
    std::vector<Vertex> outer_walk() const {
        if (outer_face_ != kNone) return faces_[outer_face_].vertices;
        if (outer_isolated_ != kNone) return {outer_isolated_};
        return {};
    }
    /// Per-vertex flag: lies on the outer face walk.
    std::vector<char> outer_vertex_mask() const {
        std::vector<char> mask(num_vertices(), 0);
        for (Vertex v : outer_walk()) mask[v] = 1;
        return mask;
    }

    /// Component id per vertex (0-based, in order of smallest vertex).
    const std::vector<int>& components() const { return component_; }
    int num_components() const { return num_components_; }

private:
    static bool same_cyclic(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
        if (a.size() != b.size() || a.empty()) return false;
        const std::size_t n = a.size();
        for (std::size_t s = 0; s < n; ++s) {
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) ok = a[(s + i) % n] == b[i];
            if (ok) return true;
        }
        return false;
    }

    void build() {
        const int n = num_vertices();
        dart_offset_.assign(n + 1, 0);
        for (Vertex v = 0; v < n; ++v) dart_offset_[v + 1] = dart_offset_[v] + degree(v);
        const int darts = dart_offset_[n];
        dart_tail_.resize(darts);
        dart_head_.resize(darts);
        struct Key {
            Vertex lo, hi;
            DartId dart;
        };
        std::vector<Key> keys;
        keys.reserve(darts);
        for (Vertex v = 0; v < n; ++v) {
            for (int i = 0; i < degree(v); ++i) {
                Vertex w = rotation_[v][i];
                if (w < 0 || w >= n)
                    throw EmbeddingError("rotation of " + std::to_string(v) + " names unknown vertex");
                if (w == v) throw EmbeddingError("loop at vertex " + std::to_string(v));
                DartId d = dart_offset_[v] + i;
                dart_tail_[d] = v;
                dart_head_[d] = w;
                keys.push_back({std::min(v, w), std::max(v, w), d});
            }
        }
        std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
            if (a.lo != b.lo) return a.lo < b.lo;
            if (a.hi != b.hi) return a.hi < b.hi;
            return a.dart < b.dart;
        });
        twin_.assign(darts, kNone);
        dart_edge_.assign(darts, kNone);
        edges_.clear();
        edge_dart_.clear();
        for (std::size_t i = 0; i < keys.size();) {
            std::size_t j = i;
            while (j < keys.size() && keys[j].lo == keys[i].lo && keys[j].hi == keys[i].hi) ++j;
            const std::string name = std::to_string(keys[i].lo) + "-" + std::to_string(keys[i].hi);
            if (j - i != 2) {
                bool one_sided = true;
                for (std::size_t k = i; k < j; ++k)
                    if (dart_tail_[keys[k].dart] != dart_tail_[keys[i].dart]) one_sided = false;
                if (j - i == 1 || one_sided)
                    throw EmbeddingError("edge " + name + " missing from an endpoint's rotation");
                throw EmbeddingError("multi-edge " + name);
            }
            DartId a = keys[i].dart, b = keys[i + 1].dart;
            if (dart_tail_[a] == dart_tail_[b]) throw EmbeddingError("multi-edge " + name);
            twin_[a] = b;
            twin_[b] = a;
            EdgeId e = static_cast<EdgeId>(edges_.size());
            edges_.push_back({keys[i].lo, keys[i].hi});
            dart_edge_[a] = dart_edge_[b] = e;
            DartId from_lo = dart_tail_[a] == keys[i].lo ? a : b;
            edge_dart_.push_back({from_lo, twin_[from_lo]});
            i = j;
        }
        trace();
        label_components();
        check_euler();
    }

    void trace() {
        faces_.clear();
        face_of_dart_.assign(num_darts(), kNone);
        for (DartId start = 0; start < num_darts(); ++start) {
            if (face_of_dart_[start] != kNone) continue;
            FaceWalk walk;
            FaceId id = static_cast<FaceId>(faces_.size());
            DartId d = start;
            do {
                face_of_dart_[d] = id;
                walk.darts.push_back(d);
                walk.vertices.push_back(dart_tail_[d]);
                d = next_in_face(d);
            } while (d != start);
            faces_.push_back(std::move(walk));
        }
    }

    void label_components() {
        const int n = num_vertices();
        component_.assign(n, kNone);
        num_components_ = 0;
        std::vector<Vertex> stack;
        for (Vertex s = 0; s < n; ++s) {
            if (component_[s] != kNone) continue;
            component_[s] = num_components_;
            stack.push_back(s);
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : rotation_[v])
                    if (component_[w] == kNone) {
                        component_[w] = num_components_;
                        stack.push_back(w);
                    }
            }
            ++num_components_;
        }
    }

    // V - E + F = 2 per component; an isolated vertex counts one face.
    void check_euler() const {
        std::vector<long long> chi(num_components_, 0);
        for (Vertex v = 0; v < num_vertices(); ++v) {
            chi[component_[v]] += 1;
            if (degree(v) == 0) chi[component_[v]] += 1;
        }
        for (const Edge& e : edges_) chi[component_[e.u]] -= 1;
        for (const FaceWalk& f : faces_) chi[component_[dart_tail_[f.darts[0]]]] += 1;
        for (int c = 0; c < num_components_; ++c)
            if (chi[c] != 2)
                throw EmbeddingError("rotation system is not planar (Euler characteristic " +
                                     std::to_string(chi[c]) + ")");
    }

    std::vector<std::vector<Vertex>> rotation_;
    std::vector<Edge> edges_;
    std::vector<std::array<DartId, 2>> edge_dart_;
    std::vector<DartId> dart_offset_{0};
    std::vector<Vertex> dart_tail_, dart_head_;
    std::vector<DartId> twin_;
    std::vector<EdgeId> dart_edge_;
    std::vector<FaceWalk> faces_;
    std::vector<FaceId> face_of_dart_;
    FaceId outer_face_ = kNone;
    Vertex outer_isolated_ = kNone;
    std::vector<int> component_;
    int num_components_ = 0;
};

/// All face boundary walks; every dart is used by exactly one walk.
inline std::vector<FaceWalk> trace_faces(const PlaneGraph& g) { return g.faces(); }

inline BoundaryWalk outer_cycle(const PlaneGraph& g) {
    BoundaryWalk walk;
    walk.vertices = g.outer_walk();
    if (walk.vertices.size() < 3) return walk;
    std::vector<char> seen(g.num_vertices(), 0);
    walk.is_cycle = true;
    for (Vertex v : walk.vertices) {
        if (seen[v]) {
            walk.is_cycle = false;
            break;
        }
        seen[v] = 1;
    }
    return walk;
}

}  // namespace dpcanvas
