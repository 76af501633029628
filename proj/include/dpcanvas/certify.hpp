#pragma once

// Precolouring extension certificates: a subgraph H of G containing C such
// that a colouring of C extends to G as soon as it extends to H. Plus the
// linear size bounds, evaluated exactly.

#include <string>
#include <vector>

#include "dpcanvas/canvas.hpp"
#include "dpcanvas/correspondence.hpp"
#include "dpcanvas/rational.hpp"
#include "dpcanvas/solver.hpp"
#include "dpcanvas/structure.hpp"

namespace dpcanvas {

/// Every colouring of C that extends to h extends to g.
inline bool certificate_valid(const PlaneGraph& g, const std::vector<Vertex>& c, const CorrespondenceAssignment& a,
                              const SubgraphMask& h, unsigned long long cap = kDefaultEnumerationCap) {
    SubgraphMask cm = cycle_mask(g, c);
    if (!h.contains(cm)) throw InputError("certificate does not contain the outer cycle");
    ExtensionSolver solver(g, a);
    bool ok = true;
    for_each_subgraph_colouring(g, a, cm, cap, [&](const Colouring& phi) {
        if (solver.extends(phi, &h) && !solver.extends(phi)) ok = false;
        return ok;
    });
    return ok;
}

/// Greedy edge-minimal certificate: edges off C in decreasing id are dropped
/// while every colouring of C that fails on G still fails, then vertices
/// left isolated go.
inline SubgraphMask minimal_certificate(const PlaneGraph& g, const std::vector<Vertex>& c,
                                        const CorrespondenceAssignment& a,
                                        unsigned long long cap = kDefaultEnumerationCap) {
    SubgraphMask cm = cycle_mask(g, c);
    auto failing = failing_colourings(g, a, cm, cap);
    ExtensionSolver solver(g, a);
    SubgraphMask h = SubgraphMask::full(g);
    detail::greedy_prune(g, cm, h, [&](const SubgraphMask& m) {
        for (const auto& phi : failing)
            if (solver.extends(phi, &m)) return false;
        return true;
    });
    return h;
}

struct BoundReport {
    std::string form;
    Rational lhs;    // measured size
    Rational bound;  // allowed size
    Rational margin() const { return bound - lhs; }
    bool ok() const { return lhs <= bound; }
};

/// With epsilon = 1/50: (1+e)/e = 51 and 4/e = 200.
inline Rational bound_multiplier(Rational epsilon = {1, 50}) { return (1 + epsilon) / epsilon; }
inline Rational bound_offset(Rational epsilon = {1, 50}) { return 4 / epsilon; }

/// |V(G)| <= 51|V(C)| - 200 for a critical canvas.
inline BoundReport critical_bound(int vertices, int cycle_length, Rational epsilon = {1, 50}) {
    return {"critical", Rational(vertices), bound_multiplier(epsilon) * cycle_length - bound_offset(epsilon)};
}

/// |V(H)| <= 51|V(C)| for a certificate.
inline BoundReport certificate_bound(int vertices, int cycle_length, Rational epsilon = {1, 50}) {
    return {"certificate", Rational(vertices), bound_multiplier(epsilon) * cycle_length};
}

/// |X| <= 50(|Y| - 1): vertices strictly inside against the boundary length.
inline BoundReport disk_bound(int inside, int cycle_length) {
    return {"disk", Rational(inside), Rational(50) * (cycle_length - 1)};
}

inline std::vector<BoundReport> bound_report(const Canvas& t, bool critical) {
    const int n = t.g.num_vertices(), k = static_cast<int>(t.c.size());
    std::vector<BoundReport> out;
    if (critical) out.push_back(critical_bound(n, k));
    out.push_back(certificate_bound(n, k));
    out.push_back(disk_bound(n - k, k));
    return out;
}

}  // namespace dpcanvas
