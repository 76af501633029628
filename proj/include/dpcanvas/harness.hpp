#pragma once

// Instance streams and the verification suites behind `dpcanvas verify`.
// Each suite maps an instance id to at most one record; records are sorted
// by id before they are printed, so reports do not depend on threading.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dpcanvas/canvas.hpp"
#include "dpcanvas/canvas_text.hpp"
#include "dpcanvas/certify.hpp"
#include "dpcanvas/error.hpp"
#include "dpcanvas/generate.hpp"
#include "dpcanvas/girth5.hpp"
#include "dpcanvas/random.hpp"
#include "dpcanvas/rational.hpp"
#include "dpcanvas/thomassen.hpp"

namespace dpcanvas {

struct Instance {
    std::uint64_t id = 0;
    Canvas canvas;
    AssignmentMode mode = AssignmentMode::ListLike;
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t id) {
    return SplitMix64(seed ^ (id * 0xD1B54A32D192ED03ULL)).next();
}

/// Near-triangulations with the given boundary and internal count whose
/// internal vertices all have degree at least five. Cached per process.
inline const std::vector<PlaneGraph>& degree_five_near_triangulations(int boundary, int internal) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<PlaneGraph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(boundary, internal);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<PlaneGraph> keep;
    for (auto& g : near_triangulations(boundary, internal))
        if (internal_degrees_ok(g, g.outer_walk())) keep.push_back(std::move(g));
    return cache.emplace(key, std::move(keep)).first->second;
}

/// Deterministic stream: boundary lengths 3..boundary_len, internal counts
/// 0..max_internal, every degree-five near-triangulation, seeds_per_graph
/// assignments each. Outer lists have three colours, inner lists five.
inline std::vector<Instance> enumerate_instances(int max_internal, int boundary_len, AssignmentMode mode,
                                                 std::uint64_t seed, int seeds_per_graph = 1) {
    if (boundary_len < 3) throw InputError("boundary length must be at least 3");
    if (max_internal < 0) throw InputError("internal count must be non-negative");
    if (boundary_len > 7 || max_internal > 5)
        throw ResourceError("exhaustive stream is capped at boundary 7 and 5 internal vertices",
                            static_cast<unsigned long long>(boundary_len * 100 + max_internal));
    std::vector<Instance> out;
    std::uint64_t id = 0;
    for (int len = 3; len <= boundary_len; ++len)
        for (int k = 0; k <= max_internal; ++k)
            for (const PlaneGraph& g : degree_five_near_triangulations(len, k))
                for (int s = 0; s < seeds_per_graph; ++s, ++id) {
                    Instance x;
                    x.id = id;
                    x.mode = mode;
                    x.canvas = {g, g.outer_walk(), make_assignment(g, mode, mix_seed(seed, id))};
                    out.push_back(std::move(x));
                }
    return out;
}

// ------------------------------------------------------------------ reports

struct Record {
    std::uint64_t id = 0;
    bool pass = true;
    Rational margin;
    std::string tag;          // what kind of instance was checked
    std::string canvas_text;  // filled on failure
    std::string message;      // failure reason
    std::vector<std::string> notes;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t scanned = 0;
    std::vector<Record> records;
    std::vector<std::pair<std::uint64_t, std::string>> skipped;  // resource caps

    std::size_t failures() const {
        return std::count_if(records.begin(), records.end(), [](const Record& r) { return !r.pass; });
    }
    bool all_pass() const { return failures() == 0; }
    std::optional<Rational> min_margin() const {
        std::optional<Rational> m;
        for (const auto& r : records)
            if (!m || r.margin < *m) m = r.margin;
        return m;
    }

    std::string render() const {
        std::ostringstream os;
        for (const auto& r : records) {
            os << "instance " << r.id << " suite " << suite << " result " << (r.pass ? "pass" : "fail") << " margin "
               << to_string(r.margin) << "\n";
            for (const auto& n : r.notes) os << "note " << r.id << " " << n << "\n";
            if (!r.pass) {
                os << "reason " << r.message << "\n";
                os << "begin canvas " << r.id << "\n" << r.canvas_text << "end canvas " << r.id << "\n";
            }
        }
        for (const auto& [id, why] : skipped) os << "skipped " << id << " " << why << "\n";
        std::map<std::string, int> tags;
        for (const auto& r : records) ++tags[r.tag];
        os << "summary suite " << suite << " scanned " << scanned << " records " << records.size() << " pass "
           << records.size() - failures() << " fail " << failures() << " skipped " << skipped.size() << "\n";
        for (const auto& [t, n] : tags) os << "tag " << t << " " << n << "\n";
        std::size_t notes = 0;
        for (const auto& r : records) notes += r.notes.size();
        if (notes) os << "notes " << notes << "\n";
        if (auto m = min_margin()) os << "min-margin " << to_string(*m) << "\n";
        return os.str();
    }
};

struct SuiteParams {
    MetricParams metric;
    Girth5Params girth5;
    std::uint64_t seed = 1;
    unsigned long long cap = kDefaultEnumerationCap;
    int max_boundary = 6;
    int max_internal = 4;
    int seeds_per_graph = 4;
    int instances = 200;  // for the randomly generated suites
    int threads = 0;      // 0: hardware concurrency
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"stronglinear", "facts", "chord-tripod", "certify", "thomassen", "girth5"};
    return names;
}

namespace detail {

inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    unsigned t = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
    t = static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(n, 1)));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < n;) fn(i);
    };
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < t; ++k) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
}

inline std::string text_of(const std::string& name, const PlaneGraph& g, const CorrespondenceAssignment& a,
                           const Colouring& phi = {}) {
    CanvasInstance ci{name, g, a, phi.empty() ? Colouring(g.num_vertices(), kUncoloured) : phi};
    return emit_canvas_text(ci);
}

inline void fail_if(Record& r, bool bad, const std::string& why) {
    if (bad && r.pass) {
        r.pass = false;
        r.message = why;
    }
}

// The canvas stream shared by the structural suites: every assignment mode.
inline std::vector<Instance> structural_stream(const SuiteParams& p) {
    std::vector<Instance> all;
    const AssignmentMode modes[] = {AssignmentMode::ListLike, AssignmentMode::SaturatedRandom,
                                    AssignmentMode::SparseRandom};
    for (int m = 0; m < 3; ++m) {
        auto part = enumerate_instances(p.max_internal, p.max_boundary, modes[m], p.seed + 1000003ULL * m,
                                        p.seeds_per_graph);
        for (auto& x : part) {
            x.id = all.size();
            all.push_back(std::move(x));
        }
    }
    return all;
}

// Critical subcanvases from the first failing colouring and from the first
// failing colouring that is proper on the chords, without repeats.
inline std::vector<Extraction> extractions(const Canvas& t, unsigned long long cap) {
    std::vector<Extraction> out;
    for (bool respect : {false, true}) {
        auto ex = extract_critical_subcanvas(t, cap, respect);
        if (!ex) break;
        if (out.empty() || !(out.front().mask == ex->mask)) out.push_back(std::move(*ex));
    }
    return out;
}

inline int min_internal_degree(const Canvas& t) {
    std::vector<char> on(t.g.num_vertices(), 0);
    for (Vertex v : t.c) on[v] = 1;
    int best = -1;
    for (Vertex v = 0; v < t.g.num_vertices(); ++v)
        if (!on[v] && (best < 0 || t.g.degree(v) < best)) best = t.g.degree(v);
    return best;
}

inline std::optional<Record> check_stronglinear(const Instance& x, const SuiteParams& p) {
    std::optional<Record> r;
    for (const auto& ex : extractions(x.canvas, p.cap)) {
        auto m = metrics(ex.canvas, p.metric);
        if (m.v < 2) continue;
        if (!r) {
            r.emplace();
            r->id = x.id;
            r->margin = m.margin();
        }
        r->tag = "critical-v" + std::to_string(m.v);
        r->margin = std::min(r->margin, m.margin());
        if (m.d < m.threshold() && r->pass) {
            fail_if(*r, true, "d = " + to_string(m.d) + " below " + to_string(m.threshold()));
            r->canvas_text = text_of("critical-" + std::to_string(x.id), ex.canvas.g, ex.canvas.a);
        }
    }
    return r;
}

inline std::optional<Record> check_facts(const Instance& x, const SuiteParams& p) {
    auto exs = extractions(x.canvas, p.cap);
    if (exs.empty()) return std::nullopt;
    Record r;
    r.id = x.id;
    r.tag = "critical-no-internal";
    r.margin = Rational(0);
    bool first = true;
    for (const auto& ex : exs) {
        const Canvas& t = ex.canvas;
        int md = min_internal_degree(t);
        if (md >= 0) {
            r.tag = "critical";
            r.margin = first ? Rational(md - 5) : std::min(r.margin, Rational(md - 5));
            first = false;
        }
        bool was = r.pass;
        fail_if(r, !is_critical(t, p.cap), "extracted canvas is not critical");
        fail_if(r, !internal_degrees_ok(t.g, t.c), "internal vertex of degree below five");
        fail_if(r, !short_cycle_interiors_empty(t.g), "cycle of length at most four with a vertex inside");
        if (was && !r.pass) r.canvas_text = text_of("critical-" + std::to_string(x.id), t.g, t.a);
    }
    return r;
}

inline std::optional<Record> check_chord_tripod(const Instance& x, const SuiteParams& p) {
    Record r;
    r.id = x.id;
    r.tag = "no-critical";
    std::optional<Rational> margin;
    auto take = [&](Rational m) {
        if (!margin || m < *margin) margin = m;
    };
    const Canvas* bad = &x.canvas;
    // On arbitrary graphs b is only superadditive up to stranded vertices;
    // extracted critical canvases must meet the plain inequalities.
    auto splits = [&](const Canvas& t, std::uint64_t salt, bool critical) {
        const int extra = t.g.num_edges() - static_cast<int>(t.c.size());
        for (int k = 0; k < 3; ++k) {
            auto sp = random_two_connected_split(t.g, t.c, k == 0 ? extra : k, mix_seed(p.seed + salt, x.id * 3 + k));
            auto dc = decomposition_check(t.g, t.c, sp, p.metric);
            fail_if(r, !dc.def_identity(), "deficiency decomposition identity fails");
            fail_if(r, !dc.corrected_surplus_ok(), "surplus superadditivity fails: " + dc.describe());
            if (critical) {
                fail_if(r, !dc.surplus_ok(), "surplus superadditivity fails on a critical canvas: " + dc.describe());
                take(dc.d_whole - dc.d_parts);
            } else if (!dc.surplus_ok()) {
                r.notes.push_back("stranded-boundary " + dc.describe());
            }
        }
        if (internal_degrees_ok(t.g, t.c)) fail_if(r, !degree_bound_check(t).ok(), "degree inequality fails");
    };
    splits(x.canvas, 11, false);
    auto exs = extractions(x.canvas, p.cap);
    for (const auto& ex : exs) {
        const Canvas& t = ex.canvas;
        if (r.pass) bad = &t;
        try {
            auto ct = chord_or_tripod(t);
            r.tag = ct.chord ? "chord" : (ct.tripod->tripod ? "tripod" : "quadpod");
            if (ct.tripod && ct.tripod->tripod && ct.tripod->regular) {
                Canvas relaxed = relax(t, ct.tripod->vertex);
                auto before = metrics(t, p.metric), after = metrics(relaxed, p.metric);
                Rational slack = before.d - (after.d - (2 * p.metric.alpha + p.metric.epsilon));
                fail_if(r, slack < 0, "relaxation lowers d by more than 2a+e");
                take(slack);
            }
        } catch (const InvariantViolation& e) {
            fail_if(r, true, e.what());
        }
        splits(t, 29, true);
    }
    r.margin = margin.value_or(Rational(0));
    if (!r.pass) r.canvas_text = text_of("instance-" + std::to_string(x.id), bad->g, bad->a);
    return r;
}

inline std::optional<Record> check_certify(const Instance& x, const SuiteParams& p) {
    const Canvas& t = x.canvas;
    Record r;
    r.id = x.id;
    SubgraphMask cm = cycle_mask(t.g, t.c);
    SubgraphMask h = minimal_certificate(t.g, t.c, t.a, p.cap);
    r.tag = h == cm ? "certificate-is-c" : "certificate";
    fail_if(r, !certificate_valid(t.g, t.c, t.a, h, p.cap), "certificate is not valid");
    for (EdgeId e = 0; e < t.g.num_edges() && r.pass; ++e) {
        if (!h.edges[e] || cm.edges[e]) continue;
        SubgraphMask smaller = h;
        smaller.edges[e] = 0;
        fail_if(r, certificate_valid(t.g, t.c, t.a, smaller, p.cap), "certificate is not edge-minimal");
    }
    if (!(h == cm)) {
        Restricted sub = restrict_to(t.g, h);
        SubgraphMask local = SubgraphMask::empty(sub.graph);
        for (Vertex v : t.c) local.vertices[sub.from_parent[v]] = 1;
        for (EdgeId e = 0; e < sub.graph.num_edges(); ++e)
            if (cm.edges[sub.edge_to_parent[e]]) local.edges[e] = 1;
        fail_if(r, !is_S_critical(sub.graph, restrict_assignment(t.a, sub), local, p.cap),
                "certificate is not critical for c");
    }
    const int k = static_cast<int>(t.c.size());
    std::vector<BoundReport> bounds{certificate_bound(h.vertex_count(), k)};
    for (const auto& ex : extractions(t, p.cap))
        for (auto& b : bound_report(ex.canvas, true)) bounds.push_back(b);
    std::optional<Rational> margin;
    for (const auto& b : bounds) {
        fail_if(r, !b.ok(), b.form + " bound violated");
        if (!margin || b.margin() < *margin) margin = b.margin();
    }
    r.margin = *margin;
    if (!r.pass) r.canvas_text = text_of("instance-" + std::to_string(x.id), t.g, t.a);
    return r;
}

inline std::optional<Record> check_thomassen(std::uint64_t id, const SuiteParams& p) {
    SplitMix64 rng(mix_seed(p.seed, id));
    const int n = 4 + rng.below_int(197);
    PlaneGraph g = random_triangulation(n, 2 * n, rng.next());
    const auto mode = static_cast<AssignmentMode>(id % 3);
    const bool path = id % 2 == 1;  // precoloured outer edge, 3-lists on the outer walk
    CorrespondenceAssignment a = make_assignment(g, mode, rng.next(), path ? 3 : 5, 5);
    Record r;
    r.id = id;
    r.tag = std::string(path ? "outer-edge-" : "5cc-") + to_string(mode);
    r.margin = Rational(0);
    Colouring phi(n, kUncoloured);
    try {
        Colouring out;
        if (path) {
            auto w = g.outer_walk();
            phi[w[0]] = 0;
            auto c1 = residual_lists(g, a, phi)[w[1]];
            phi[w[1]] = c1.front();
            out = colour_planar(g, a, {w[0], w[1]}, phi);
        } else {
            phi.assign(n, kUncoloured);
            out = colour_5cc(g, a);
        }
        fail_if(r, !is_valid_colouring(g, a, out, true), "colouring is not proper");
    } catch (const InvariantViolation& e) {
        fail_if(r, true, e.what());
    }
    if (!r.pass) {
        r.margin = Rational(-1);
        r.canvas_text = text_of("triangulation-" + std::to_string(id), g, a, phi);
    }
    return r;
}

inline std::optional<Record> check_girth5(std::uint64_t id, const SuiteParams& p) {
    SplitMix64 rng(mix_seed(p.seed, id));
    const auto mode = static_cast<AssignmentMode>(id % 3);
    Record r;
    r.id = id;
    std::optional<Rational> margin;
    auto take = [&](Rational m) {
        if (!margin || m < *margin) margin = m;
    };
    std::string text;

    // Critical canvases with S the outer cycle.
    {
        // Three shapes: short boundaries with 3-lists; long ones with 2-lists
        // on C so the boundary enumeration stays small; tree interiors with
        // 2-lists on C and unconstrained C edges, which leave C with many
        // colourings and so produce criticals outside the excluded shapes.
        // S = C may carry any lists.
        const int kind = static_cast<int>((id / 3) % 3);
        int boundary = 0;
        PlaneGraph g;
        if (kind == 0) {
            boundary = 7 + rng.below_int(3);
            g = random_girth5_disk(boundary, 2 + rng.below_int(10), rng.next(), 26);
        } else if (kind == 1) {
            boundary = 10 + rng.below_int(3);
            g = random_girth5_patch(boundary, 40, 120, rng.next());
        } else {
            boundary = 9 + rng.below_int(5);
            g = random_girth5_tree_disk(boundary, 2 + rng.below_int(4), rng.next());
        }
        CorrespondenceAssignment a = make_assignment(g, mode, rng.next(), kind == 0 ? 3 : 2, 3);
        if (kind == 2)
            for (int i = 0; i < boundary; ++i) a.matchings[*g.find_edge(i, (i + 1) % boundary)].clear();
        Canvas t{g, g.outer_walk(), a};
        auto ex = extract_critical_subcanvas(t, p.cap);
        r.tag = kind == 2 ? "tree-no-critical" : "no-critical";
        if (ex) {
            const Canvas& k = ex->canvas;
            Girth5Canvas gc{k.g, cycle_mask(k.g, k.c), k.a};
            auto gi = girth(k.g);
            fail_if(r, gi && *gi < 5, "extraction lowered the girth");
            for (Vertex v = 0; v < k.g.num_vertices(); ++v)
                if (!gc.s.vertices[v]) fail_if(r, k.g.degree(v) < 3, "internal vertex of degree below three");
            if (girth5_excluded_shape(gc)) {
                r.tag = "critical-excluded-shape";
            } else {
                r.tag = "critical-v" + std::to_string(k.g.num_vertices() - static_cast<int>(k.c.size()));
                auto in = girth5_inequality(gc, p.girth5);
                fail_if(r, !in.ok(), "3e - (5+e)v - aq = " + to_string(in.lhs) + " below 3");
                take(in.margin());
            }
            try {
                auto b = girth5_bound_check(k.g, k.c, k.a, p.cap);
                fail_if(r, !b.ok(), "89|V(C)| bound violated");
                take(b.margin());
            } catch (const InputError& e) {
                fail_if(r, true, e.what());
            }
            if (kind == 2) r.tag = "tree-" + r.tag;
            if (!r.pass) text = text_of("girth5-critical-" + std::to_string(id), k.g, k.a);
        }
    }

    // Extendability of a short outer path or cycle.
    {
        const int boundary = 5 + rng.below_int(4);
        PlaneGraph g = random_girth5_disk(boundary, 1 + rng.below_int(8), rng.next(), 24);
        auto w = g.outer_walk();
        const int len = static_cast<int>(w.size());
        const int slen = 1 + rng.below_int(std::min(6, len));
        const int start = rng.below_int(len);
        std::vector<Vertex> s;
        std::vector<char> in_s(g.num_vertices(), 0), blocked(g.num_vertices(), 0);
        for (int i = 0; i < slen; ++i) {
            s.push_back(w[(start + i) % len]);
            in_s[s.back()] = 1;
        }
        for (Vertex v : s)
            for (Vertex u : g.rotation(v)) blocked[u] = 1;
        std::vector<Vertex> a_set;
        std::vector<int> sizes(g.num_vertices(), 3);
        for (Vertex v : w) {
            if (in_s[v] || blocked[v] || !rng.chance(1, 2)) continue;
            a_set.push_back(v);
            sizes[v] = 2;
            for (Vertex u : g.rotation(v)) blocked[u] = 1;
            blocked[v] = 1;
        }
        Rational density = mode == AssignmentMode::SparseRandom ? Rational(1, 2) : Rational(1);
        CorrespondenceAssignment a = random_assignment(g, sizes, density, rng.next());
        bool ok = thomassen_g5_extendability(g, a, s, a_set, p.cap);
        fail_if(r, !ok, "a colouring of s does not extend");
        if (!ok && text.empty()) text = text_of("girth5-path-" + std::to_string(id), g, a);
    }
    r.margin = margin.value_or(Rational(0));
    if (!r.pass) {
        r.canvas_text = text;
        if (r.margin >= 0) r.margin = Rational(-1);
    }
    return r;
}

}  // namespace detail

/// Runs one suite. Throws InputError on an unknown suite or parameters the
/// checked statements do not cover.
inline VerificationReport run_suite(const std::string& name, const SuiteParams& p) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
        throw InputError("unknown suite '" + name + "'");
    if ((name == "stronglinear" || name == "chord-tripod") && !stronglinear_parameters_ok(p.metric))
        throw InputError("epsilon, alpha, gamma violate 2e<=a, 14a+7e<=g, g+6a+3e<=1");
    if (name == "girth5" && !girth5_parameters_ok(p.girth5))
        throw InputError("girth-5 parameters violate 9e<=a, 2.5a+5.5e<=1, 11e+1<=3a");
    VerificationReport rep;
    rep.suite = name;
    std::mutex mu;
    auto collect = [&](std::uint64_t id, const std::function<std::optional<Record>()>& fn,
                       const std::function<std::string()>& text) {
        try {
            auto r = fn();
            std::lock_guard<std::mutex> lock(mu);
            if (r) rep.records.push_back(std::move(*r));
        } catch (const ResourceError& e) {
            std::lock_guard<std::mutex> lock(mu);
            rep.skipped.push_back({id, e.what()});
        } catch (const Error& e) {
            // Anything else thrown while checking is a failed instance.
            Record r;
            r.id = id;
            r.pass = false;
            r.margin = Rational(-1);
            r.tag = "error";
            r.message = e.what();
            r.canvas_text = text();
            std::lock_guard<std::mutex> lock(mu);
            rep.records.push_back(std::move(r));
        }
    };
    if (name == "thomassen" || name == "girth5") {
        rep.scanned = static_cast<std::uint64_t>(p.instances);
        detail::parallel_for(p.instances, p.threads, [&](std::size_t i) {
            collect(
                i, [&] { return name == "thomassen" ? detail::check_thomassen(i, p) : detail::check_girth5(i, p); },
                [&] { return "graph seed-" + std::to_string(p.seed) + "-instance-" + std::to_string(i) + "\n"; });
        });
    } else {
        auto stream = detail::structural_stream(p);
        rep.scanned = stream.size();
        detail::parallel_for(stream.size(), p.threads, [&](std::size_t i) {
            const Instance& x = stream[i];
            collect(
                x.id,
                [&]() -> std::optional<Record> {
                    if (name == "stronglinear") return detail::check_stronglinear(x, p);
                    if (name == "facts") return detail::check_facts(x, p);
                    if (name == "chord-tripod") return detail::check_chord_tripod(x, p);
                    return detail::check_certify(x, p);
                },
                [&] { return detail::text_of("instance-" + std::to_string(x.id), x.canvas.g, x.canvas.a); });
        });
    }
    std::sort(rep.records.begin(), rep.records.end(), [](const Record& a, const Record& b) { return a.id < b.id; });
    std::sort(rep.skipped.begin(), rep.skipped.end());
    return rep;
}

}  // namespace dpcanvas
