#pragma once

// CanvasText: a line format for a plane graph with a correspondence
// assignment and an optional partial colouring.
//
//   graph wheel5
//   vertex 0 list 3 outer
//   rotation 0: 1,4,5
//   outerface 0 1 2 3 4
//   edge 0 1 match 0-0,1-1
//   precolour 0=2
//
// Rotations are clockwise. Edges without an edge line carry an empty
// matching. '#' starts a comment. The canonical form lists vertices and
// rotations by id (each rotation starting at its smallest neighbour), the
// outer walk from its smallest vertex, every edge in (u, v) order with
// sorted pairs, then the precoloured vertices.

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dpcanvas/correspondence.hpp"
#include "dpcanvas/error.hpp"
#include "dpcanvas/plane_graph.hpp"

namespace dpcanvas {

class ParseError : public InputError {
public:
    ParseError(int line, int column, const std::string& what)
        : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_, column_;
};

struct CanvasInstance {
    std::string name = "canvas";
    PlaneGraph g;
    CorrespondenceAssignment a;
    Colouring precolouring;  // all kUncoloured when absent
};

namespace detail {

struct Token {
    std::string_view text;
    int column;  // 1-based
};

// Splits on blanks and on the separators in seps, which are dropped.
inline std::vector<Token> tokenize(std::string_view line, std::string_view seps) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        auto is_sep = [&](char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || seps.find(ch) != seps.npos; };
        while (i < line.size() && is_sep(line[i])) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !is_sep(line[j])) ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

inline int to_int(const Token& t, int line, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size() || value < 0)
        throw ParseError(line, t.column, std::string("expected ") + what + ", got '" + std::string(t.text) + "'");
    return value;
}

}  // namespace detail

inline CanvasInstance parse_canvas_text(std::string_view text) {
    struct VertexLine {
        int line = 0;
        int list = -1;
        bool outer = false;
    };
    struct EdgeLine {
        int line;
        int column;
        Vertex u, v;
        std::vector<std::pair<ColourPair, int>> pairs;  // with column
    };
    struct PreLine {
        int line, column;
        Vertex v;
        int c;
    };
    std::optional<std::string> name;
    std::vector<VertexLine> verts;
    std::vector<std::vector<Vertex>> rot;
    std::vector<int> rot_line;
    std::vector<Vertex> outer;
    int outer_line = 0;
    std::vector<EdgeLine> edge_lines;
    std::vector<PreLine> pre;

    auto grow = [&](Vertex v) {
        if (v >= static_cast<Vertex>(verts.size())) {
            verts.resize(v + 1);
            rot.resize(v + 1);
            rot_line.resize(v + 1, 0);
        }
    };

    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++lineno;
        if (auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
        auto head = detail::tokenize(line, "");
        if (head.empty()) {
            if (end == text.size()) break;
            continue;
        }
        const std::string_view kw = head[0].text;
        if (kw == "graph") {
            if (head.size() != 2) throw ParseError(lineno, head[0].column, "expected 'graph <name>'");
            if (name) throw ParseError(lineno, head[0].column, "second graph line");
            name = std::string(head[1].text);
        } else if (kw == "vertex") {
            if (head.size() < 4 || head.size() > 5 || head[2].text != "list")
                throw ParseError(lineno, head[0].column, "expected 'vertex <id> list <k> [outer]'");
            Vertex v = detail::to_int(head[1], lineno, "a vertex id");
            int k = detail::to_int(head[3], lineno, "a list size");
            if (head.size() == 5 && head[4].text != "outer")
                throw ParseError(lineno, head[4].column, "expected 'outer' or end of line");
            grow(v);
            if (verts[v].line) throw ParseError(lineno, head[1].column, "vertex " + std::to_string(v) + " declared twice");
            verts[v] = {lineno, k, head.size() == 5};
        } else if (kw == "rotation") {
            auto colon = line.find(':');
            if (colon == line.npos) throw ParseError(lineno, head[0].column, "expected 'rotation <id>: <ids>'");
            auto left = detail::tokenize(line.substr(0, colon), "");
            if (left.size() != 2) throw ParseError(lineno, head[0].column, "expected 'rotation <id>: <ids>'");
            Vertex v = detail::to_int(left[1], lineno, "a vertex id");
            grow(v);
            if (rot_line[v]) throw ParseError(lineno, left[1].column, "second rotation for vertex " + std::to_string(v));
            rot_line[v] = lineno;
            for (auto t : detail::tokenize(line.substr(colon + 1), ",")) {
                t.column += static_cast<int>(colon) + 1;
                rot[v].push_back(detail::to_int(t, lineno, "a vertex id"));
            }
        } else if (kw == "outerface") {
            if (outer_line) throw ParseError(lineno, head[0].column, "second outerface line");
            outer_line = lineno;
            auto rest = detail::tokenize(line.substr(head[0].column - 1 + kw.size()), ",");
            for (auto t : rest) {
                t.column += head[0].column - 1 + static_cast<int>(kw.size());
                outer.push_back(detail::to_int(t, lineno, "a vertex id"));
            }
        } else if (kw == "edge") {
            if (head.size() < 4 || head.size() > 5 || head[3].text != "match")
                throw ParseError(lineno, head[0].column, "expected 'edge <u> <v> match <a>-<b>,...'");
            EdgeLine el{lineno, head[0].column, detail::to_int(head[1], lineno, "a vertex id"),
                        detail::to_int(head[2], lineno, "a vertex id"), {}};
            if (el.u >= el.v) throw ParseError(lineno, head[1].column, "edge endpoints must satisfy u < v");
            if (head.size() == 5) {
                std::size_t off = head[4].column - 1;
                for (auto t : detail::tokenize(line.substr(off), ",")) {
                    t.column += static_cast<int>(off);
                    auto dash = t.text.find('-');
                    if (dash == t.text.npos) throw ParseError(lineno, t.column, "expected a pair '<a>-<b>'");
                    detail::Token x{t.text.substr(0, dash), t.column};
                    detail::Token y{t.text.substr(dash + 1), t.column + static_cast<int>(dash) + 1};
                    el.pairs.push_back({{detail::to_int(x, lineno, "a colour"), detail::to_int(y, lineno, "a colour")},
                                        t.column});
                }
            }
            edge_lines.push_back(std::move(el));
        } else if (kw == "precolour") {
            if (head.size() != 2) throw ParseError(lineno, head[0].column, "expected 'precolour <v>=<c>'");
            auto eq = head[1].text.find('=');
            if (eq == head[1].text.npos) throw ParseError(lineno, head[1].column, "expected '<v>=<c>'");
            detail::Token x{head[1].text.substr(0, eq), head[1].column};
            detail::Token y{head[1].text.substr(eq + 1), head[1].column + static_cast<int>(eq) + 1};
            pre.push_back({lineno, head[1].column, detail::to_int(x, lineno, "a vertex id"),
                           detail::to_int(y, lineno, "a colour")});
        } else {
            throw ParseError(lineno, head[0].column, "unknown keyword '" + std::string(kw) + "'");
        }
        if (end == text.size()) break;
    }

    if (!name) throw ParseError(lineno, 1, "missing graph line");
    const int n = static_cast<int>(verts.size());
    for (Vertex v = 0; v < n; ++v) {
        if (!verts[v].line) throw ParseError(rot_line[v] ? rot_line[v] : lineno, 1, "vertex " + std::to_string(v) + " is not declared");
        if (!rot_line[v]) throw ParseError(verts[v].line, 1, "vertex " + std::to_string(v) + " has no rotation line");
        for (Vertex w : rot[v])
            if (w >= n) throw ParseError(rot_line[v], 1, "rotation of " + std::to_string(v) + " names unknown vertex " + std::to_string(w));
    }
    if (n > 0 && !outer_line) throw ParseError(lineno, 1, "missing outerface line");

    CanvasInstance out;
    out.name = *name;
    try {
        out.g = PlaneGraph::with_outer_walk(rot, outer);
    } catch (const EmbeddingError& e) {
        throw ParseError(outer_line ? outer_line : lineno, 1, std::string("embedding: ") + e.what());
    }
    auto on_outer = out.g.outer_vertex_mask();
    for (Vertex v = 0; v < n; ++v)
        if (static_cast<bool>(on_outer[v]) != verts[v].outer)
            throw ParseError(verts[v].line, 1,
                             "vertex " + std::to_string(v) + (verts[v].outer ? " is marked outer but is not on the outer face"
                                                                            : " lies on the outer face but is not marked outer"));
    out.a = CorrespondenceAssignment::empty(out.g, 0);
    for (Vertex v = 0; v < n; ++v) out.a.list_sizes[v] = verts[v].list;
    std::vector<int> seen_edge(out.g.num_edges(), 0);
    for (const auto& el : edge_lines) {
        auto e = out.g.find_edge(el.u, el.v);
        if (!e) throw ParseError(el.line, el.column, "no edge " + std::to_string(el.u) + "-" + std::to_string(el.v) + " in the rotation system");
        if (seen_edge[*e]) throw ParseError(el.line, el.column, "second edge line for " + std::to_string(el.u) + "-" + std::to_string(el.v));
        seen_edge[*e] = el.line;
        std::vector<char> used_u(verts[el.u].list, 0), used_v(verts[el.v].list, 0);
        for (auto [p, col] : el.pairs) {
            if (p.first >= verts[el.u].list || p.second >= verts[el.v].list)
                throw ParseError(el.line, col, "pair " + std::to_string(p.first) + "-" + std::to_string(p.second) + " out of palette range");
            if (used_u[p.first] || used_v[p.second]) throw ParseError(el.line, col, "pairs do not form a matching");
            used_u[p.first] = used_v[p.second] = 1;
            out.a.matchings[*e].push_back(p);
        }
        std::sort(out.a.matchings[*e].begin(), out.a.matchings[*e].end());
    }
    out.precolouring.assign(n, kUncoloured);
    for (const auto& p : pre) {
        if (p.v >= n) throw ParseError(p.line, p.column, "precoloured vertex out of range");
        if (p.c >= verts[p.v].list) throw ParseError(p.line, p.column, "precolour out of palette range");
        if (out.precolouring[p.v] != kUncoloured) throw ParseError(p.line, p.column, "vertex precoloured twice");
        out.precolouring[p.v] = p.c;
    }
    return out;
}

inline std::string emit_canvas_text(const CanvasInstance& x) {
    const PlaneGraph& g = x.g;
    validate(g, x.a);
    std::ostringstream os;
    os << "graph " << x.name << "\n";
    auto outer = g.outer_vertex_mask();
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        os << "vertex " << v << " list " << x.a.list_sizes[v] << (outer[v] ? " outer" : "") << "\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::vector<Vertex> r(g.rotation(v).begin(), g.rotation(v).end());
        if (!r.empty()) std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
        os << "rotation " << v << ":";
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : " ") << r[i];
        os << "\n";
    }
    auto walk = g.outer_walk();
    // A walk may revisit vertices; start at the first visit of the minimum.
    if (!walk.empty()) std::rotate(walk.begin(), std::min_element(walk.begin(), walk.end()), walk.end());
    os << "outerface";
    for (Vertex v : walk) os << " " << v;
    os << "\n";
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto m = x.a.matchings[e];
        std::sort(m.begin(), m.end());
        os << "edge " << g.edge(e).u << " " << g.edge(e).v << " match";
        for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : " ") << m[i].first << "-" << m[i].second;
        os << "\n";
    }
    for (Vertex v = 0; v < static_cast<Vertex>(x.precolouring.size()); ++v)
        if (x.precolouring[v] != kUncoloured) os << "precolour " << v << "=" << x.precolouring[v] << "\n";
    return os.str();
}

inline std::string canonical_canvas_text(std::string_view text) { return emit_canvas_text(parse_canvas_text(text)); }

}  // namespace dpcanvas
