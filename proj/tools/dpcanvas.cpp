// dpcanvas command line. Exit codes: 0 everything checked passed, 1 some
// check failed, 2 bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dpcanvas/dpcanvas.hpp"

using namespace dpcanvas;

namespace {

struct Options {
    std::string command;
    std::string file;
    std::string epsilon = "1/50", alpha = "1/25", gamma = "7/10";
    std::string g5_epsilon = "1/100", g5_alpha = "37/100";
    std::uint64_t seed = 1;
    unsigned long long cap = kDefaultEnumerationCap;
    std::string cofacial = "off";
    std::string suite;
    std::string mode = "list-like";
    int boundary = 6, internal = 4, seeds = 4, instances = 200, threads = 0;
};

CanvasInstance load(const Options& o) {
    if (o.file.empty()) throw InputError("--file is required for " + o.command);
    std::ifstream in(o.file);
    if (!in) throw InputError("cannot read " + o.file);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_canvas_text(ss.str());
}

MetricParams metric_params(const Options& o) {
    MetricParams p;
    p.epsilon = parse_rational(o.epsilon);
    p.alpha = parse_rational(o.alpha);
    p.gamma = parse_rational(o.gamma);
    p.outer_cofacial = o.cofacial == "on";
    return p;
}

Canvas as_canvas(const CanvasInstance& x) {
    auto walk = outer_cycle(x.g);
    if (!walk.is_cycle) throw InputError("outer face boundary is not a cycle");
    return validate_canvas(x.g, walk.vertices, x.a);
}

void print_colouring(const Colouring& phi) {
    std::cout << "colouring";
    for (std::size_t v = 0; v < phi.size(); ++v) std::cout << " " << v << "=" << phi[v];
    std::cout << "\n";
}

int run(const Options& o) {
    const std::string& cmd = o.command;
    if (cmd == "solve") {
        auto x = load(o);
        auto out = extend(x.g, x.a, x.precolouring);
        if (!out) {
            std::cout << "result none\n";
            return 0;
        }
        print_colouring(*out);
        return 0;
    }
    if (cmd == "thomassen") {
        auto x = load(o);
        std::vector<Vertex> s;
        for (Vertex v = 0; v < x.g.num_vertices(); ++v)
            if (x.precolouring[v] != kUncoloured) s.push_back(v);
        Colouring out = s.empty() ? colour_5cc(x.g, x.a) : colour_planar(x.g, x.a, s, x.precolouring);
        print_colouring(out);
        return is_valid_colouring(x.g, x.a, out, true) ? 0 : 1;
    }
    if (cmd == "critical") {
        auto t = as_canvas(load(o));
        std::cout << "critical " << (is_critical(t, o.cap) ? "yes" : "no") << "\n";
        return 0;
    }
    if (cmd == "extract-critical") {
        auto x = load(o);
        auto ex = extract_critical_subcanvas(as_canvas(x), o.cap);
        if (!ex) {
            std::cout << "none\n";
            return 0;
        }
        CanvasInstance out{x.name + "-critical", ex->canvas.g, ex->canvas.a,
                           Colouring(ex->canvas.g.num_vertices(), kUncoloured)};
        std::cout << emit_canvas_text(out);
        return 0;
    }
    if (cmd == "metrics") {
        auto t = as_canvas(load(o));
        auto m = metrics(t, metric_params(o));
        std::cout << "def " << m.def << "\nv " << m.v << "\nb " << m.b << "\nq " << m.q << "\ns " << to_string(m.s)
                  << "\nd " << to_string(m.d) << "\nthreshold " << to_string(m.threshold()) << "\nmargin "
                  << to_string(m.margin()) << "\n";
        return 0;
    }
    if (cmd == "certify") {
        auto x = load(o);
        auto t = as_canvas(x);
        SubgraphMask h = minimal_certificate(t.g, t.c, t.a, o.cap);
        bool valid = certificate_valid(t.g, t.c, t.a, h, o.cap);
        Restricted sub = restrict_to(t.g, h);
        CanvasInstance out{x.name + "-certificate", sub.graph, restrict_assignment(t.a, sub),
                           Colouring(sub.graph.num_vertices(), kUncoloured)};
        std::cout << emit_canvas_text(out);
        auto b = certificate_bound(h.vertex_count(), static_cast<int>(t.c.size()));
        std::cout << "valid " << (valid ? "yes" : "no") << "\nbound " << b.form << " " << to_string(b.lhs) << " <= "
                  << to_string(b.bound) << " margin " << to_string(b.margin()) << "\n";
        return valid && b.ok() ? 0 : 1;
    }
    if (cmd == "enumerate") {
        auto stream = enumerate_instances(o.internal, o.boundary, parse_assignment_mode(o.mode), o.seed, o.seeds);
        for (const auto& x : stream) {
            CanvasInstance ci{"instance-" + std::to_string(x.id), x.canvas.g, x.canvas.a,
                              Colouring(x.canvas.g.num_vertices(), kUncoloured)};
            std::cout << emit_canvas_text(ci) << "\n";
        }
        return 0;
    }
    if (cmd == "verify") {
        if (o.suite.empty()) throw InputError("--suite is required for verify");
        SuiteParams p;
        p.metric = metric_params(o);
        p.girth5.epsilon = parse_rational(o.g5_epsilon);
        p.girth5.alpha = parse_rational(o.g5_alpha);
        p.girth5.outer_cofacial = p.metric.outer_cofacial;
        p.seed = o.seed;
        p.cap = o.cap;
        p.max_boundary = o.boundary;
        p.max_internal = o.internal;
        p.seeds_per_graph = o.seeds;
        p.instances = o.instances;
        p.threads = o.threads;
        auto rep = run_suite(o.suite, p);
        std::cout << rep.render();
        return rep.all_pass() ? 0 : 1;
    }
    throw InputError("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Correspondence colouring of plane graphs and canvases"};
    Options o;
    app.add_option("command", o.command, "solve | thomassen | critical | extract-critical | metrics | certify | enumerate | verify")
        ->required()
        ->check(CLI::IsMember({"solve", "thomassen", "critical", "extract-critical", "metrics", "certify", "enumerate",
                               "verify"}));
    app.add_option("--file", o.file, "CanvasText input");
    app.add_option("--epsilon", o.epsilon, "epsilon as p/q");
    app.add_option("--alpha", o.alpha, "alpha as p/q");
    app.add_option("--gamma", o.gamma, "gamma as p/q");
    app.add_option("--g5-epsilon", o.g5_epsilon, "epsilon for the girth5 suite");
    app.add_option("--g5-alpha", o.g5_alpha, "alpha for the girth5 suite");
    app.add_option("--seed", o.seed, "random seed");
    app.add_option("--cap", o.cap, "enumeration cap on palette products");
    app.add_option("--outer-face-cofacial", o.cofacial, "count the outer face in the quasi-boundary")
        ->check(CLI::IsMember({"on", "off"}));
    app.add_option("--suite", o.suite, "stronglinear | facts | chord-tripod | certify | thomassen | girth5");
    app.add_option("--mode", o.mode, "list-like | saturated-random | sparse-random");
    app.add_option("--boundary", o.boundary, "largest boundary length in the exhaustive stream");
    app.add_option("--internal", o.internal, "largest internal vertex count in the exhaustive stream");
    app.add_option("--seeds-per-graph", o.seeds, "assignments per graph in the exhaustive stream");
    app.add_option("--instances", o.instances, "instances for the random suites");
    app.add_option("--threads", o.threads, "worker threads, 0 for all cores");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        return run(o);
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const EmbeddingError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 1;
    }
}
