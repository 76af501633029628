#pragma once

// Exact extension solver. Plain backtracking over residual lists: branch on
// the uncoloured vertex with the fewest usable colours (ties to the smaller
// id), try its colours in increasing order, undo through a trail. A vertex
// with one usable colour is always picked first, so singletons are assigned
// eagerly; an empty residual list backtracks at once.

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dpcanvas/correspondence.hpp"
#include "dpcanvas/error.hpp"
#include "dpcanvas/plane_graph.hpp"
#include "dpcanvas/structure.hpp"

namespace dpcanvas {

inline constexpr unsigned long long kDefaultEnumerationCap = 10'000'000ULL;

class ExtensionSolver {
public:
    ExtensionSolver(const PlaneGraph& g, const CorrespondenceAssignment& a) : g_(g), a_(a) {
        validate(g, a);
        const int n = g.num_vertices();
        colour_offset_.assign(n + 1, 0);
        for (Vertex v = 0; v < n; ++v) colour_offset_[v + 1] = colour_offset_[v] + a.list_sizes[v];
        // partner_[partner_offset_[d] + c]: colour at head(d) matched to (tail(d), c)
        partner_offset_.assign(g.num_darts() + 1, 0);
        for (DartId d = 0; d < g.num_darts(); ++d)
            partner_offset_[d + 1] = partner_offset_[d] + a.list_sizes[g.dart_tail(d)];
        partner_.assign(partner_offset_.back(), kNone);
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            DartId lo = g.edge_dart(e, 0), hi = g.edge_dart(e, 1);
            for (auto [x, y] : a.matchings[e]) {
                partner_[partner_offset_[lo] + x] = y;
                partner_[partner_offset_[hi] + y] = x;
            }
        }
    }

    /// A total colouring of the selected subgraph agreeing with phi, or
    /// nothing. Vertices outside the mask stay uncoloured.
    std::optional<Colouring> extend(const Colouring& phi, const SubgraphMask* mask = nullptr) {
        require_in_range(a_, phi);
        setup(mask);
        for (Vertex v = 0; v < g_.num_vertices(); ++v) {
            if (phi[v] == kUncoloured) continue;
            if (!vertex_on_[v]) throw InputError("precoloured vertex " + std::to_string(v) + " outside the subgraph");
        }
        for (Vertex v = 0; v < g_.num_vertices(); ++v) {
            if (phi[v] == kUncoloured) continue;
            if (blocked_[colour_offset_[v] + phi[v]] > 0) return std::nullopt;
            assign(v, phi[v]);
        }
        if (!search()) return std::nullopt;
        return colour_;
    }

    bool extends(const Colouring& phi, const SubgraphMask* mask = nullptr) { return extend(phi, mask).has_value(); }

    std::uint64_t nodes() const { return nodes_; }

private:
    void setup(const SubgraphMask* mask) {
        const int n = g_.num_vertices();
        vertex_on_.assign(n, 1);
        edge_on_.assign(g_.num_edges(), 1);
        if (mask) {
            vertex_on_ = mask->vertices;
            edge_on_ = mask->edges;
        }
        colour_.assign(n, kUncoloured);
        blocked_.assign(colour_offset_.back(), 0);
        avail_.resize(n);
        for (Vertex v = 0; v < n; ++v) avail_[v] = a_.list_sizes[v];
        trail_.clear();
        nodes_ = 0;
    }

    // Colours v with c and blocks the matched colours of uncoloured
    // neighbours. Returns false if some neighbour ran out of colours.
    bool assign(Vertex v, int c) {
        colour_[v] = c;
        bool ok = true;
        for (int i = 0; i < g_.degree(v); ++i) {
            DartId d = g_.first_dart(v) + i;
            if (!edge_on_[g_.dart_edge(d)]) continue;
            Vertex w = g_.dart_head(d);
            if (colour_[w] != kUncoloured) continue;
            int p = partner_[partner_offset_[d] + c];
            if (p == kNone) continue;
            int& b = blocked_[colour_offset_[w] + p];
            if (b++ == 0 && --avail_[w] == 0) ok = false;
            trail_.push_back(colour_offset_[w] + p);
            trail_.push_back(w);
        }
        return ok;
    }

    void unassign(Vertex v, std::size_t mark) {
        while (trail_.size() > mark) {
            Vertex w = trail_.back();
            trail_.pop_back();
            int slot = trail_.back();
            trail_.pop_back();
            if (--blocked_[slot] == 0) ++avail_[w];
        }
        colour_[v] = kUncoloured;
    }

    bool search() {
        ++nodes_;
        Vertex best = kNone;
        for (Vertex v = 0; v < g_.num_vertices(); ++v) {
            if (!vertex_on_[v] || colour_[v] != kUncoloured) continue;
            if (best == kNone || avail_[v] < avail_[best]) best = v;
            if (avail_[best] == 0) return false;
        }
        if (best == kNone) return true;
        for (int c = 0; c < a_.list_sizes[best]; ++c) {
            if (blocked_[colour_offset_[best] + c] > 0) continue;
            std::size_t mark = trail_.size();
            if (assign(best, c) && search()) return true;
            unassign(best, mark);
        }
        return false;
    }

    const PlaneGraph& g_;
    const CorrespondenceAssignment& a_;
    std::vector<int> colour_offset_, partner_offset_, partner_;
    std::vector<char> vertex_on_, edge_on_;
    Colouring colour_;
    std::vector<int> blocked_, avail_, trail_;
    std::uint64_t nodes_ = 0;
};

inline std::optional<Colouring> extend(const PlaneGraph& g, const CorrespondenceAssignment& a, const Colouring& phi) {
    return ExtensionSolver(g, a).extend(phi);
}

inline bool extends_to(const PlaneGraph& g, const CorrespondenceAssignment& a, const Colouring& phi,
                       const SubgraphMask& sub) {
    return ExtensionSolver(g, a).extends(phi, &sub);
}

/// Product of palette sizes over the selected vertices, saturating.
inline unsigned long long palette_product(const CorrespondenceAssignment& a, const std::vector<char>& vertices) {
    unsigned long long p = 1;
    constexpr auto kMax = std::numeric_limits<unsigned long long>::max();
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (!vertices[v]) continue;
        auto k = static_cast<unsigned long long>(a.list_sizes[v]);
        if (k == 0) return 0;
        p = p > kMax / k ? kMax : p * k;
    }
    return p;
}

/// Calls fn(phi) for every proper colouring of the subgraph s (its own edges
/// only) in lexicographic order of (colour of smallest vertex, ...). fn may
/// return false to stop early. Throws ResourceError when the palette product
/// exceeds cap.
inline void for_each_subgraph_colouring(const PlaneGraph& g, const CorrespondenceAssignment& a,
                                        const SubgraphMask& s, unsigned long long cap,
                                        const std::function<bool(const Colouring&)>& fn) {
    validate(g, a);
    unsigned long long product = palette_product(a, s.vertices);
    if (product > cap)
        throw ResourceError("boundary colouring product " + std::to_string(product) + " exceeds cap " +
                                std::to_string(cap),
                            product);
    std::vector<Vertex> order;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (s.vertices[v]) order.push_back(v);
    Colouring phi(g.num_vertices(), kUncoloured);
    // Earlier neighbours in the order, with the dart pointing back at them.
    std::vector<std::vector<EdgeId>> back(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int k = 0; k < g.degree(order[i]); ++k) {
            DartId d = g.first_dart(order[i]) + k;
            if (s.edges[g.dart_edge(d)] && g.dart_head(d) < order[i]) back[i].push_back(g.dart_edge(d));
        }
    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (stop) return;
        if (i == order.size()) {
            if (!fn(phi)) stop = true;
            return;
        }
        Vertex v = order[i];
        for (int c = 0; c < a.list_sizes[v] && !stop; ++c) {
            phi[v] = c;
            bool ok = true;
            for (EdgeId e : back[i])
                if (edge_conflict(g, a, phi, e)) {
                    ok = false;
                    break;
                }
            if (ok) rec(i + 1);
        }
        phi[v] = kUncoloured;
    };
    rec(0);
}

inline std::vector<Colouring> enumerate_subgraph_colourings(const PlaneGraph& g, const CorrespondenceAssignment& a,
                                                            const SubgraphMask& s,
                                                            unsigned long long cap = kDefaultEnumerationCap) {
    std::vector<Colouring> out;
    for_each_subgraph_colouring(g, a, s, cap, [&](const Colouring& phi) {
        out.push_back(phi);
        return true;
    });
    return out;
}

/// Proper colourings of the cycle c. Chords of c are not part of the cycle
/// and do not constrain these colourings.
inline std::vector<Colouring> enumerate_boundary_colourings(const PlaneGraph& g, const CorrespondenceAssignment& a,
                                                            const std::vector<Vertex>& c,
                                                            unsigned long long cap = kDefaultEnumerationCap) {
    SubgraphMask s = SubgraphMask::empty(g);
    if (c.size() >= 3) {
        s = cycle_mask(g, c);
    } else {
        for (Vertex v : c) s.vertices.at(v) = 1;
        if (c.size() == 2) s.edges[*g.find_edge(c[0], c[1])] = 1;
    }
    return enumerate_subgraph_colourings(g, a, s, cap);
}

}  // namespace dpcanvas
