#pragma once

// Constructive 5-correspondence colouring of plane graphs by Thomassen's
// induction, run iteratively.
//
// The graph is cut into blocks, visited along the block-cut tree so that each
// block meets the coloured part in its precoloured path S. Every inner face
// of a block is triangulated with edges carrying empty matchings, and the
// block is then coloured by a stack of "regions". A region is a disk bounded
// by a cycle of nodes with the coloured edge a -> b = succ(a) on it. With
// w = pred(a):
//   * if w has a chord, split along the one nearest a; the side holding a is
//     done first, the other side then has S = (w, z);
//   * otherwise keep two colours of w that avoid a, strike their partners from
//     w's inner neighbours (which join the cycle), solve the smaller region,
//     and finally colour w avoiding pred(w).
// Lists are cut down to the lowest three colours on the cycle and five
// inside before the induction touches them.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "dpcanvas/correspondence.hpp"
#include "dpcanvas/error.hpp"
#include "dpcanvas/plane_graph.hpp"

namespace dpcanvas {

namespace detail {

struct Blocks {
    std::vector<int> edge_block;
    std::vector<std::vector<EdgeId>> edges;
    std::vector<std::vector<Vertex>> vertices;
    std::vector<std::vector<int>> of_vertex;
};

// Biconnected components, iteratively (edge stack).
inline Blocks biconnected_blocks(const PlaneGraph& g) {
    const int n = g.num_vertices();
    Blocks b;
    b.edge_block.assign(g.num_edges(), kNone);
    b.of_vertex.assign(n, {});
    std::vector<int> disc(n, -1), low(n, 0);
    struct Frame {
        Vertex v, parent;
        EdgeId parent_edge;
        int next;
    };
    std::vector<Frame> frames;
    std::vector<EdgeId> estack;
    std::vector<int> stamp(n, -1);
    int time = 0;
    for (Vertex r = 0; r < n; ++r) {
        if (disc[r] >= 0 || g.degree(r) == 0) continue;
        disc[r] = low[r] = time++;
        frames.push_back({r, kNone, kNone, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next < g.degree(f.v)) {
                DartId d = g.first_dart(f.v) + f.next++;
                EdgeId e = g.dart_edge(d);
                if (e == f.parent_edge) continue;
                Vertex w = g.dart_head(d);
                if (disc[w] < 0) {
                    estack.push_back(e);
                    disc[w] = low[w] = time++;
                    frames.push_back({w, f.v, e, 0});
                } else if (disc[w] < disc[f.v]) {
                    estack.push_back(e);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            Frame done = f;
            frames.pop_back();
            if (done.parent == kNone) continue;
            low[done.parent] = std::min(low[done.parent], low[done.v]);
            if (low[done.v] < disc[done.parent]) continue;
            const int id = static_cast<int>(b.edges.size());
            b.edges.emplace_back();
            b.vertices.emplace_back();
            EdgeId e;
            do {
                e = estack.back();
                estack.pop_back();
                b.edge_block[e] = id;
                b.edges[id].push_back(e);
                for (Vertex x : {g.edge(e).u, g.edge(e).v})
                    if (stamp[x] != id) {
                        stamp[x] = id;
                        b.vertices[id].push_back(x);
                        b.of_vertex[x].push_back(id);
                    }
            } while (e != done.parent_edge);
        }
    }
    return b;
}

class ThomassenEngine {
public:
    ThomassenEngine(const PlaneGraph& g, const CorrespondenceAssignment& a) : g_(g), a_(a) {
        const int n = g.num_vertices();
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
        const int darts = g.num_darts();
        tail_.resize(darts);
        head_.resize(darts);
        twin_.resize(darts);
        ncw_.resize(darts);
        pcw_.resize(darts);
        orig_.resize(darts);
        for (DartId d = 0; d < darts; ++d) {
            tail_[d] = g.dart_tail(d);
            head_[d] = g.dart_head(d);
            twin_[d] = g.twin(d);
            orig_[d] = d;
        }
        colour_.assign(n, kUncoloured);
        lists_.assign(n, {});
        touched_.assign(n, 0);
        block_dart_.assign(n, kNone);
        pos_.assign(n, 0);
        pos_stamp_.assign(n, -1);
        outer_out_.assign(n, kNone);
        if (auto f = g.outer_face())
            for (DartId d : g.faces()[*f].darts)
                if (outer_out_[g.dart_tail(d)] == kNone) outer_out_[g.dart_tail(d)] = d;
    }

    Colouring run(const std::vector<Vertex>& s, const Colouring& phi_s) {
        blocks_ = biconnected_blocks(g_);
        std::vector<char> block_done(blocks_.edges.size(), 0);
        std::deque<std::pair<int, std::vector<Vertex>>> queue;
        auto enqueue_blocks_at = [&](Vertex v) {
            for (int b : blocks_.of_vertex[v])
                if (!block_done[b]) {
                    block_done[b] = 1;
                    queue.push_back({b, {v}});
                }
        };
        auto drain = [&] {
            while (!queue.empty()) {
                auto [b, sb] = queue.front();
                queue.pop_front();
                colour_block(b, sb);
                for (Vertex v : blocks_.vertices[b]) enqueue_blocks_at(v);
            }
        };
        for (Vertex v : s) colour_[v] = phi_s[v];
        if (s.size() == 2) {
            int b = blocks_.edge_block[*g_.find_edge(s[0], s[1])];
            block_done[b] = 1;
            queue.push_back({b, s});
        }
        if (!s.empty()) {
            for (Vertex v : s) enqueue_blocks_at(v);
            drain();
        }
        for (Vertex v = 0; v < g_.num_vertices(); ++v) {
            if (colour_[v] != kUncoloured) continue;
            if (a_.list_sizes[v] == 0) throw InputError("empty list at vertex " + std::to_string(v));
            colour_[v] = 0;
            enqueue_blocks_at(v);
            drain();
        }
        return colour_;
    }

private:
    struct Node {
        Vertex v;
        int next, prev;
        DartId out;  // v -> vertex of next
        bool alive;
    };
    struct Task {
        bool colour;
        int node;      // region: the node a
        Vertex w;      // colour: vertex to colour
        DartId to_pred;  // w -> pred(w)
        int x, y;
    };

    int partner(DartId d, int c) const {
        DartId o = orig_[d];
        return o == kNone ? kNone : partner_[partner_offset_[o] + c];
    }

    DartId new_dart(Vertex from, Vertex to) {
        DartId d = static_cast<DartId>(tail_.size());
        tail_.push_back(from);
        head_.push_back(to);
        twin_.push_back(kNone);
        ncw_.push_back(kNone);
        pcw_.push_back(kNone);
        orig_.push_back(kNone);
        return d;
    }

    // Adds x-y inside the face whose out-darts at x and y are dx and dy.
    // Returns the new dart x -> y.
    DartId add_edge(DartId dx, DartId dy) {
        Vertex x = tail_[dx], y = tail_[dy];
        DartId ex = new_dart(x, y), ey = new_dart(y, x);
        twin_[ex] = ey;
        twin_[ey] = ex;
        for (auto [d, e] : {std::pair{dx, ex}, std::pair{dy, ey}}) {
            ncw_[e] = ncw_[d];
            pcw_[e] = d;
            pcw_[ncw_[d]] = e;
            ncw_[d] = e;
        }
        return ex;
    }

    DartId next_in_face(DartId d) const { return pcw_[twin_[d]]; }

    void colour_block(int b, const std::vector<Vertex>& s) {
        const auto& bv = blocks_.vertices[b];
        const auto& be = blocks_.edges[b];
        if (be.size() == 1) {
            const Edge& e = g_.edge(be[0]);
            Vertex p = s[0], v = e.u == p ? e.v : e.u;
            if (colour_[v] != kUncoloured) return;  // both ends precoloured
            DartId d = *g_.find_dart(p, v);
            int bad = partner(d, colour_[p]);
            for (int c = 0; c < a_.list_sizes[v]; ++c)
                if (c != bad) {
                    colour_[v] = c;
                    return;
                }
            throw InputError("list at vertex " + std::to_string(v) + " too small");
        }
        // Link the block's darts around each vertex in the parent's order.
        for (Vertex v : bv) {
            DartId first = kNone, last = kNone;
            for (int i = 0; i < g_.degree(v); ++i) {
                DartId d = g_.first_dart(v) + i;
                if (blocks_.edge_block[g_.dart_edge(d)] != b) continue;
                if (first == kNone) first = d;
                if (last != kNone) {
                    ncw_[last] = d;
                    pcw_[d] = last;
                }
                last = d;
            }
            ncw_[last] = first;
            pcw_[first] = last;
            block_dart_[v] = first;
        }
        // Outer face of the block.
        DartId outer = kNone;
        for (Vertex v : bv) {
            if (outer_out_[v] == kNone) continue;
            DartId d = outer_out_[v];
            while (blocks_.edge_block[g_.dart_edge(d)] != b) d = g_.prev_cw(d);
            outer = d;
            break;
        }
        if (outer == kNone) outer = block_dart_[s[0]];
        ++face_stamp_;
        if (static_cast<int>(seen_.size()) < g_.num_darts()) seen_.resize(g_.num_darts(), -1);
        std::vector<DartId> outer_walk;
        for (DartId d = outer;;) {
            seen_[d] = face_stamp_;
            outer_walk.push_back(d);
            d = next_in_face(d);
            if (d == outer) break;
        }
        for (DartId d0 : be)
            for (DartId start : {g_.edge_dart(d0, 0), g_.edge_dart(d0, 1)}) {
                if (seen_[start] == face_stamp_) continue;
                std::vector<DartId> face;
                for (DartId d = start;;) {
                    seen_[d] = face_stamp_;
                    face.push_back(d);
                    d = next_in_face(d);
                    if (d == start) break;
                }
                triangulate(face);
            }
        // Lists.
        ++stamp_;
        for (DartId d : outer_walk) pos_stamp_[tail_[d]] = stamp_;
        for (Vertex v : s)
            if (pos_stamp_[v] != stamp_) throw InvariantViolation("precoloured vertex is not on the block's outer face");
        for (Vertex v : bv) {
            if (colour_[v] != kUncoloured) continue;
            const int want = pos_stamp_[v] == stamp_ ? 3 : 5;
            if (a_.list_sizes[v] < want)
                throw InvariantViolation("vertex " + std::to_string(v) + " has fewer than " + std::to_string(want) +
                                         " colours in its block");
            lists_[v].resize(want);
            for (int c = 0; c < want; ++c) lists_[v][c] = c;
        }
        run_regions(outer_walk, s);
        for (Vertex v : bv)
            if (colour_[v] == kUncoloured) throw InvariantViolation("block vertex left uncoloured");
    }

    void triangulate(const std::vector<DartId>& face) {
        const int k = static_cast<int>(face.size());
        if (k <= 3) return;
        ++stamp_;
        std::vector<Vertex> f(k);
        std::vector<DartId> out(face);
        for (int i = 0; i < k; ++i) {
            f[i] = tail_[face[i]];
            pos_stamp_[f[i]] = stamp_;
            pos_[f[i]] = i;
        }
        int s = 0;
        while (k - s > 3) {
            Vertex apex = f[s];
            bool blocked = false;
            DartId d0 = block_dart_[apex], d = d0;
            do {
                Vertex x = head_[d];
                if (pos_stamp_[x] == stamp_ && pos_[x] >= s + 2 && pos_[x] <= k - 2) blocked = true;
                d = ncw_[d];
            } while (d != d0 && !blocked);
            if (!blocked) {
                for (int j = s + 2; j <= k - 2; ++j) out[s] = add_edge(out[s], out[j]);
                return;
            }
            out[k - 1] = add_edge(out[k - 1], out[s + 1]);
            ++s;
        }
    }

    int make_node(Vertex v, DartId out) {
        nodes_.push_back({v, kNone, kNone, out, true});
        touched_[v] = 1;
        return static_cast<int>(nodes_.size()) - 1;
    }

    void link(int p, int n, DartId d) {
        nodes_[p].next = n;
        nodes_[p].out = d;
        nodes_[n].prev = p;
        ensure_maps();
        out_node_[d] = p;
        in_node_[twin_[d]] = n;
    }

    void ensure_maps() {
        if (out_node_.size() < tail_.size()) {
            out_node_.resize(tail_.size(), kNone);
            in_node_.resize(tail_.size(), kNone);
        }
    }

    // The live node of z whose arc contains dart from_z (z -> w).
    int node_around(DartId from_z) const {
        DartId c = ncw_[from_z], cc = pcw_[from_z];
        for (;;) {
            int n = out_node_[c];
            if (n != kNone && nodes_[n].alive && nodes_[n].out == c) return n;
            n = in_node_[cc];
            if (n != kNone && nodes_[n].alive && twin_[nodes_[nodes_[n].prev].out] == cc) return n;
            if (c == from_z) throw InvariantViolation("chord endpoint is not on the cycle");
            c = ncw_[c];
            cc = pcw_[cc];
        }
    }

    int lowest_avoiding(Vertex v, int bad) const {
        for (int c : lists_[v])
            if (c != bad) return c;
        return kNone;
    }

    void run_regions(const std::vector<DartId>& outer_walk, const std::vector<Vertex>& s) {
        nodes_.clear();
        const int m = static_cast<int>(outer_walk.size());
        for (int i = 0; i < m; ++i) make_node(tail_[outer_walk[i]], outer_walk[i]);
        for (int i = 0; i < m; ++i) link(i, (i + 1) % m, outer_walk[i]);
        int a = kNone;
        for (int i = 0; i < m; ++i)
            if (nodes_[i].v == s[0]) a = i;
        if (s.size() == 2) {
            if (nodes_[nodes_[a].next].v != s[1]) {
                for (int i = 0; i < m; ++i)
                    if (nodes_[i].v == s[1]) a = i;
                if (nodes_[nodes_[a].next].v != s[0]) throw InvariantViolation("precoloured edge is not on the cycle");
            }
        } else {
            Vertex bv = nodes_[nodes_[a].next].v;
            int c = lowest_avoiding(bv, partner(nodes_[a].out, colour_[nodes_[a].v]));
            if (c == kNone) throw InvariantViolation("no colour left next to the precoloured vertex");
            colour_[bv] = c;
        }
        std::vector<Task> stack{{false, a, kNone, kNone, 0, 0}};
        std::vector<DartId> arc;
        while (!stack.empty()) {
            Task t = stack.back();
            stack.pop_back();
            if (t.colour) {
                Vertex p = tail_[twin_[t.to_pred]];
                if (colour_[p] == kUncoloured) throw InvariantViolation("predecessor uncoloured");
                int bad = partner(twin_[t.to_pred], colour_[p]);
                colour_[t.w] = t.x != bad ? t.x : t.y;
                if (colour_[t.w] == bad) throw InvariantViolation("both reserved colours blocked");
                continue;
            }
            const int A = t.node;
            const int B = nodes_[A].next, W = nodes_[A].prev;
            if (W == B) {
                nodes_[A].alive = nodes_[B].alive = false;
                continue;
            }
            const Vertex w = nodes_[W].v, av = nodes_[A].v;
            const int P = nodes_[W].prev;
            const DartId dp = twin_[nodes_[P].out];  // w -> pred(w)
            const DartId ds = nodes_[W].out;         // w -> a
            arc.clear();
            DartId chord = kNone;
            for (DartId d = ncw_[dp]; d != ds; d = ncw_[d]) {
                arc.push_back(d);
                if (touched_[head_[d]]) chord = d;
            }
            if (chord != kNone) {
                const int Z = node_around(twin_[chord]);
                const int ZP = nodes_[Z].prev;
                const int Z1 = make_node(nodes_[Z].v, kNone), W1 = make_node(w, kNone);
                link(ZP, Z1, nodes_[ZP].out);
                link(Z1, W1, twin_[chord]);
                link(W1, A, ds);
                link(W, Z, chord);
                stack.push_back({false, W, kNone, kNone, 0, 0});
                stack.push_back({false, A, kNone, kNone, 0, 0});
                continue;
            }
            // Reserve two colours of w away from a.
            int bad = partner(twin_[ds], colour_[av]);
            int x = kNone, y = kNone;
            for (int c : lists_[w]) {
                if (c == bad) continue;
                if (x == kNone) x = c;
                else if (y == kNone) y = c;
            }
            if (y == kNone) throw InvariantViolation("fewer than two reserved colours at vertex " + std::to_string(w));
            int prev = P;
            DartId step = next_in_face(dp);  // pred(w) -> u_1 (or a)
            for (DartId d : arc) {
                Vertex u = head_[d];
                auto& l = lists_[u];
                for (int c : {partner(d, x), partner(d, y)})
                    if (c != kNone) l.erase(std::remove(l.begin(), l.end(), c), l.end());
                if (l.size() > 3) l.resize(3);
                int U = make_node(u, kNone);
                link(prev, U, step);
                step = next_in_face(d);
                prev = U;
            }
            link(prev, A, step);
            nodes_[W].alive = false;
            stack.push_back({true, kNone, w, dp, x, y});
            stack.push_back({false, A, kNone, kNone, 0, 0});
        }
    }

    const PlaneGraph& g_;
    const CorrespondenceAssignment& a_;
    std::vector<int> partner_offset_, partner_;
    std::vector<Vertex> tail_, head_;
    std::vector<DartId> twin_, ncw_, pcw_, orig_;
    Colouring colour_;
    std::vector<std::vector<int>> lists_;
    std::vector<char> touched_;
    std::vector<DartId> block_dart_, outer_out_;
    std::vector<int> pos_, pos_stamp_, seen_;
    int stamp_ = 0, face_stamp_ = 0;
    Blocks blocks_;
    std::vector<Node> nodes_;
    std::vector<int> out_node_, in_node_;
};

}  // namespace detail

/// Extends the colouring phi_s of the path s (at most two vertices, an edge
/// of the outer walk when two) to all of g. Needs lists of size at least 5
/// off the outer walk and at least 3 on it.
inline Colouring colour_planar(const PlaneGraph& g, const CorrespondenceAssignment& a, const std::vector<Vertex>& s,
                               const Colouring& phi_s) {
    validate(g, a);
    require_in_range(a, phi_s);
    const int n = g.num_vertices();
    if (s.size() > 2) throw InputError("precoloured path has more than two vertices");
    auto outer = g.outer_vertex_mask();
    for (Vertex v : s) {
        if (v < 0 || v >= n) throw InputError("precoloured vertex out of range");
        if (!outer[v]) throw InputError("precoloured vertex " + std::to_string(v) + " is not on the outer walk");
        if (phi_s[v] == kUncoloured) throw InputError("precoloured vertex " + std::to_string(v) + " has no colour");
    }
    if (s.size() == 2) {
        auto d = g.find_dart(s[0], s[1]);
        if (!d) throw InputError("precoloured vertices are not adjacent");
        if (g.face_of_dart(*d) != *g.outer_face() && g.face_of_dart(g.twin(*d)) != *g.outer_face())
            throw InputError("precoloured edge is not on the outer walk");
        Colouring only(n, kUncoloured);
        only[s[0]] = phi_s[s[0]];
        only[s[1]] = phi_s[s[1]];
        if (!is_valid_colouring(g, a, only, false)) throw InputError("precolouring is not proper");
    }
    for (Vertex v = 0; v < n; ++v) {
        if (std::find(s.begin(), s.end(), v) != s.end()) continue;
        const int need = outer[v] ? 3 : 5;
        if (a.list_sizes[v] < need)
            throw InputError("vertex " + std::to_string(v) + " needs a list of size at least " + std::to_string(need));
    }
    std::vector<Vertex> path = s;
    Colouring phi = phi_s;
    if (path.empty() && n > 0) {
        Vertex r = g.outer_walk()[0];
        path = {r};
        phi.assign(n, kUncoloured);
        phi[r] = 0;
    }
    Colouring out = detail::ThomassenEngine(g, a).run(path, phi);
    if (!is_valid_colouring(g, a, out, true)) throw InvariantViolation("constructed colouring is not proper");
    return out;
}

/// Colours a plane graph whose lists all have size at least five.
inline Colouring colour_5cc(const PlaneGraph& g, const CorrespondenceAssignment& a) {
    validate(g, a);
    const int n = g.num_vertices();
    if (n == 0) return {};
    for (Vertex v = 0; v < n; ++v)
        if (a.list_sizes[v] < 5) throw InputError("vertex " + std::to_string(v) + " has fewer than five colours");
    Colouring phi(n, kUncoloured);
    Vertex r = g.outer_walk()[0];
    phi[r] = 0;
    return colour_planar(g, a, {r}, phi);
}

}  // namespace dpcanvas
