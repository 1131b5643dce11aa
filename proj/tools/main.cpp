#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "gg/diag_dominate.hpp"
#include "gg/edge_dominate.hpp"
#include "gg/geometry.hpp"
#include "gg/io.hpp"
#include "gg/lowerbounds.hpp"
#include "gg/monotone.hpp"
#include "gg/oracle.hpp"
#include "render.hpp"

using namespace gg;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kParse = 1, kInvalid = 2, kNotMonotone = 3, kViolation = 4 };

// Thrown for bad flag values that CLI11 cannot check on its own.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

struct Algo {
    DomMode mode;
    DominatingSet (*run)(const TriangulationGraph&, AlgoStats*);
    int (*bound)(int);
};

const std::map<std::string, Algo>& algos() {
    static const std::map<std::string, Algo> m{
        {"diag-linear", {DomMode::DiagonalAllowed, diag_2dominate_linear, diag_bound}},
        {"diag-contract", {DomMode::DiagonalAllowed, diag_2dominate_contraction, diag_bound}},
        {"edge-quadratic", {DomMode::EdgeOnly, edge_2dominate_quadratic, edge_bound_quadratic}},
        {"edge-linear", {DomMode::EdgeOnly, edge_2dominate_linear, edge_bound_linear}},
    };
    return m;
}

std::string mode_name(DomMode m) { return m == DomMode::EdgeOnly ? "edge" : "diag"; }

std::string edges_str(const std::vector<Edge>& es) {
    std::string s;
    for (Edge e : es) s += (s.empty() ? "" : " ") + std::to_string(e.a) + "-" + std::to_string(e.b);
    return s;
}

// ---- dominate ----

struct DominateOpts {
    std::string input, algo = "diag-linear", out, svg;
};

int cmd_dominate(const DominateOpts& o) {
    auto t = graph_from_json(read_file(o.input));
    const Algo& a = algos().at(o.algo);
    AlgoStats st;
    auto d = a.run(t, &st);
    spdlog::info("{}: n={} size={} bound={} pops={} reductions={}", o.algo, t.n(), d.size(), a.bound(t.n()), st.pops,
                 st.reductions);
    if (!is_2_dominated(t, d)) {
        std::cerr << "error: result does not 2-dominate the graph\n";
        return kViolation;
    }
    emit(dominating_set_to_json(d), o.out);
    if (!o.svg.empty()) emit(cli::render_graph(t, &d), o.svg);
    return kOk;
}

// ---- guard ----

struct GuardOpts {
    std::string input, strategy = "mobile", out, svg;
    int density = 0;
};

int cmd_guard(const GuardOpts& o) {
    auto P = polygon_from_json(read_file(o.input));
    GuardSet g;
    if (o.strategy == "monotone") {
        if (!is_x_monotone(P)) {
            std::cerr << "error: polygon is not x-monotone\n";
            return kNotMonotone;
        }
        g = monotone_edge_guards(P);
    } else {
        static const std::map<std::string, GuardStrategy> s{
            {"mobile", GuardStrategy::MobileN3}, {"edge-q", GuardStrategy::EdgeQ}, {"edge-linear", GuardStrategy::EdgeLinear}};
        g = guard_piecewise_convex(P, s.at(o.strategy));
    }
    spdlog::info("{}: n={} guards={}", o.strategy, P.n(), g.size());
    if (o.density > 0) {
        auto rep = verify_guard_set(P, g, o.density);
        if (!rep.covered) {
            std::cerr << "error: " << rep.witnesses.size() << " uncovered samples, first at (" << rep.witnesses[0].x
                      << ", " << rep.witnesses[0].y << ")\n";
            return kViolation;
        }
    }
    emit(guard_set_to_json(g), o.out);
    if (!o.svg.empty()) emit(cli::render_polygon(P, &g), o.svg);
    return kOk;
}

// ---- genlb ----

struct GenOpts {
    std::string family, out;
    int k = 3, n = 9, m = 1, variant = 1, residue = 0;
    std::uint64_t seed = 0;
};

int cmd_genlb(const GenOpts& o) {
    std::string text;
    const std::string& f = o.family;
    if (f == "gamma7") text = graph_to_json(gamma7());
    else if (f == "diag") text = graph_to_json(gen_diag_lb(o.m, o.variant));
    else if (f == "edge") text = graph_to_json(gen_edge_lb(o.m, o.residue));
    else if (f == "glued") text = graph_to_json(gen_edge_lb_glued(o.m));
    else if (f == "random") text = graph_to_json(random_triangulation(o.n, o.seed));
    else if (f == "spikes") text = polygon_to_json(gen_spike_polygon(o.k));
    else if (f == "fan") text = polygon_to_json(gen_fan_polygon(o.n));
    else text = polygon_to_json(gen_monotone_lb(o.variant, o.m));
    emit(text, o.out);
    return kOk;
}

// ---- verify ----

struct VerifyOpts {
    std::vector<std::string> inputs;
    int exhaustive = 0, density = 50;
    std::string mode = "diag", algo, out;
    bool as_json = false;
};

int verify_exhaustive(const VerifyOpts& o) {
    if (o.exhaustive < 3 || o.exhaustive > 12) throw UsageError("--exhaustive must be in 3..12");
    DomMode mode = o.mode == "edge" ? DomMode::EdgeOnly : DomMode::DiagonalAllowed;
    json results = json::array();
    std::ostringstream text;
    bool bad = false;
    for (const auto& [name, a] : algos()) {
        if (a.mode != mode || (!o.algo.empty() && o.algo != name)) continue;
        auto run = a.run;
        auto rep = check_bound_exhaustive(
            o.exhaustive, mode, [run](const TriangulationGraph& t) { return run(t, nullptr); }, a.bound, false);
        bad = bad || !rep.violations.empty();
        text << name << ": " << rep.violations.size() << " violations / " << rep.instances << " triangulations\n";
        json vs = json::array();
        for (const auto& v : rep.violations) {
            json ds = json::array();
            for (Edge e : v.diagonals) ds.push_back({e.a, e.b});
            vs.push_back({{"diagonals", ds}, {"reason", v.reason}});
        }
        if (!rep.violations.empty())
            text << "  witness: diagonals " << edges_str(rep.violations[0].diagonals) << ": "
                 << rep.violations[0].reason << '\n';
        results.push_back({{"algo", name}, {"instances", rep.instances}, {"violations", vs}});
    }
    if (results.empty()) throw UsageError("--algo " + o.algo + " does not run in mode " + o.mode);
    json j{{"n", o.exhaustive}, {"mode", mode_name(mode)}, {"results", results}};
    emit(o.as_json ? j.dump(2) : text.str(), o.out);
    return bad ? kViolation : kOk;
}

int cmd_verify(const VerifyOpts& o) {
    if (o.exhaustive) return verify_exhaustive(o);
    if (o.inputs.empty()) throw UsageError("verify needs --exhaustive or input files");
    std::map<std::string, std::string> docs;
    for (const auto& path : o.inputs) {
        std::string text = read_file(path);
        std::string kind;
        try {
            kind = detect_kind(text);
        } catch (const IoError& e) {
            throw IoError(path + ": " + e.what(), e.line(), e.column());
        }
        if (docs.count(kind)) throw UsageError("two " + kind + " documents given");
        docs[kind] = text;
    }
    json j;
    std::ostringstream text;
    bool ok = true;
    if (docs.count("polygon")) {
        auto P = polygon_from_json(docs["polygon"]);
        j["polygon"] = {{"n", P.n()}, {"x_monotone", is_x_monotone(P)}};
        text << "polygon: n=" << P.n() << " valid\n";
        if (docs.count("guard_set")) {
            auto g = guard_set_from_json(docs["guard_set"]);
            auto rep = verify_guard_set(P, g, o.density);
            ok = rep.covered;
            json w = json::array();
            for (const auto& p : rep.witnesses) w.push_back({p.x, p.y});
            j["coverage"] = {{"covered", rep.covered},
                             {"guards", g.size()},
                             {"density", o.density},
                             {"interior_samples", rep.interior_samples},
                             {"witnesses", w}};
            if (!rep.caveat.empty()) j["coverage"]["caveat"] = rep.caveat;
            text << "covered=" << (rep.covered ? "true" : "false") << " guards=" << g.size()
                 << " samples=" << rep.interior_samples << '\n';
            if (!rep.covered)
                text << "  witness: (" << rep.witnesses[0].x << ", " << rep.witnesses[0].y << ") and "
                     << rep.witnesses.size() - 1 << " more\n";
        }
    }
    if (docs.count("graph")) {
        auto t = graph_from_json(docs["graph"]);
        j["graph"] = {{"n", t.n()}};
        text << "graph: n=" << t.n() << " valid\n";
        if (docs.count("dominating_set")) {
            auto d = dominating_set_from_json(docs["dominating_set"]);
            bool dom = is_2_dominated(t, d);
            ok = ok && dom;
            j["domination"] = {{"dominated", dom}, {"members", d.size()}};
            text << "dominated=" << (dom ? "true" : "false") << " members=" << d.size() << '\n';
            if (!dom) {
                std::vector<int> missing;
                auto cov = covered_vertices(t.n(), d.members);
                for (int v = 0; v < t.n(); ++v)
                    if (!cov[v]) missing.push_back(v);
                if (!missing.empty()) text << "  witness: vertex " << missing[0] << '\n';
                j["domination"]["uncovered"] = missing;
            }
        }
    }
    if (j.is_null()) throw UsageError("nothing to verify");
    emit(o.as_json ? j.dump(2) : text.str(), o.out);
    return ok ? kOk : kViolation;
}

// ---- render ----

struct RenderOpts {
    std::string input, result, out;
};

int cmd_render(const RenderOpts& o) {
    std::string text = read_file(o.input);
    std::string kind = detect_kind(text);
    std::string res = o.result.empty() ? "" : read_file(o.result);
    if (kind == "graph") {
        auto t = graph_from_json(text);
        std::optional<DominatingSet> d;
        if (!res.empty()) d = dominating_set_from_json(res);
        emit(cli::render_graph(t, d ? &*d : nullptr), o.out);
    } else if (kind == "polygon") {
        auto P = polygon_from_json(text);
        std::optional<GuardSet> g;
        if (!res.empty()) g = guard_set_from_json(res);
        emit(cli::render_polygon(P, g ? &*g : nullptr), o.out);
    } else {
        throw UsageError("render input must be a graph or a polygon");
    }
    return kOk;
}

// ---- monotone ----

struct MonotoneOpts {
    std::string input, out;
    std::vector<int> corners;
    bool as_json = false;
};

int cmd_monotone(const MonotoneOpts& o) {
    auto P = polygon_from_json(read_file(o.input));
    if (!is_x_monotone(P)) {
        std::cerr << "error: polygon is not x-monotone\n";
        return kNotMonotone;
    }
    MonotoneDecomposition d;
    GuardSet g{GuardMode::EdgeGuards, {}};
    if (o.corners.empty()) {
        d = decompose(P);
        g = monotone_edge_guards(P);
    } else {
        d = decompose(P, o.corners);
        for (int e : monotone_edge_guards(P, o.corners))
            for (int a : d.edge_arcs[e]) g.guards.push_back({Guard::Kind::Arc, a, {}});
        g.normalize();
    }
    if (o.as_json) {
        json u = json::array();
        for (auto p : d.u) u.push_back({p.x, p.y});
        json j{{"n", d.n},     {"u", u},         {"vertex", d.vertex}, {"sigma", d.sigma},
               {"e_opp", d.e_opp}, {"edge_arcs", d.edge_arcs}, {"guards", json::parse(guard_set_to_json(g))}};
        emit(j.dump(2), o.out);
        return kOk;
    }
    std::ostringstream s;
    char buf[160];
    s << "   j          x          y  vertex  sigma  left(lo,up)  right(lo,up)  opp\n";
    for (std::size_t i = 0; i < d.u.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%4zu %10.4f %10.4f  %6d  %5d  %5d,%-5d  %6d,%-5d  %4d\n", i, d.u[i].x, d.u[i].y,
                      d.vertex[i], d.sigma[i], d.e_left[i][0], d.e_left[i][1], d.e_right[i][0], d.e_right[i][1],
                      d.e_opp[i]);
        s << buf;
    }
    std::string arcs;
    for (const Guard& x : g.guards) arcs += (arcs.empty() ? "" : " ") + std::to_string(x.arc);
    s << "guards (" << g.size() << "): arcs " << arcs << '\n';
    emit(s.str(), o.out);
    return kOk;
}

void setup_logging() {
    auto log = spdlog::stderr_color_st("gg");
    spdlog::set_default_logger(log);
    spdlog::set_pattern("[%l] %v");
    const char* env = std::getenv("GG_LOG");
    spdlog::set_level(env ? spdlog::level::from_str(env) : spdlog::level::warn);
}

}  // namespace

int main(int argc, char** argv) {
    setup_logging();
    CLI::App app{"2-dominating sets of triangulation graphs and guard sets for piecewise-convex polygons"};
    app.require_subcommand(1);
    std::function<int()> action;

    std::vector<std::string> algo_names;
    for (const auto& [k, v] : algos()) algo_names.push_back(k);

    DominateOpts dom;
    auto* c = app.add_subcommand("dominate", "2-dominating set of a triangulation graph");
    c->add_option("input", dom.input, "graph JSON")->required()->check(CLI::ExistingFile);
    c->add_option("--algo", dom.algo)->check(CLI::IsMember(algo_names));
    c->add_option("--out", dom.out, "write JSON here instead of stdout");
    c->add_option("--svg", dom.svg, "also render the result");
    c->callback([&] { action = [&] { return cmd_dominate(dom); }; });

    GuardOpts grd;
    c = app.add_subcommand("guard", "guard set of a piecewise-convex polygon");
    c->add_option("input", grd.input, "polygon JSON")->required()->check(CLI::ExistingFile);
    c->add_option("--strategy", grd.strategy)->check(CLI::IsMember({"mobile", "edge-q", "edge-linear", "monotone"}));
    c->add_option("--density", grd.density, "verify the result at this sampling density");
    c->add_option("--out", grd.out);
    c->add_option("--svg", grd.svg);
    c->callback([&] { action = [&] { return cmd_guard(grd); }; });

    GenOpts gen;
    c = app.add_subcommand("genlb", "lower-bound instances");
    c->add_option("family", gen.family)
        ->required()
        ->check(CLI::IsMember({"gamma7", "diag", "edge", "glued", "random", "spikes", "fan", "monotone"}));
    c->add_option("--k", gen.k, "spikes");
    c->add_option("--n", gen.n, "fan, random");
    c->add_option("--m", gen.m, "diag, edge, glued, monotone");
    c->add_option("--variant", gen.variant, "diag (1..3), monotone (1..2)");
    c->add_option("--residue", gen.residue, "edge (0, 1, 3, 4)");
    c->add_option("--seed", gen.seed, "random");
    c->add_option("--out", gen.out);
    c->callback([&] { action = [&] { return cmd_genlb(gen); }; });

    VerifyOpts ver;
    c = app.add_subcommand("verify", "exhaustive bound checks or verification of a result");
    c->add_option("inputs", ver.inputs, "polygon + guard set, or graph + dominating set")->check(CLI::ExistingFile);
    c->add_option("--exhaustive", ver.exhaustive, "check every triangulation of the convex n-gon");
    c->add_option("--mode", ver.mode)->check(CLI::IsMember({"diag", "edge"}));
    c->add_option("--algo", ver.algo)->check(CLI::IsMember(algo_names));
    c->add_option("--density", ver.density)->check(CLI::PositiveNumber);
    c->add_flag("--json", ver.as_json);
    c->add_option("--out", ver.out);
    c->callback([&] { action = [&] { return cmd_verify(ver); }; });

    RenderOpts ren;
    c = app.add_subcommand("render", "SVG of a graph or polygon and an optional result");
    c->add_option("input", ren.input)->required()->check(CLI::ExistingFile);
    c->add_option("result", ren.result, "dominating set or guard set JSON")->check(CLI::ExistingFile);
    c->add_option("--out", ren.out);
    c->callback([&] { action = [&] { return cmd_render(ren); }; });

    MonotoneOpts mon;
    c = app.add_subcommand("monotone", "decomposition table and edge guards of an x-monotone polygon");
    c->add_option("input", mon.input)->required()->check(CLI::ExistingFile);
    c->add_option("--corners", mon.corners, "corner vertices of a locally convex polygon")->delimiter(',');
    c->add_flag("--json", mon.as_json);
    c->add_option("--out", mon.out);
    c->callback([&] { action = [&] { return cmd_monotone(mon); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kParse;
    }
    try {
        return action();
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    } catch (const NotMonotoneError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNotMonotone;
    } catch (const std::exception& e) {
        // GraphError, GeometryError, LowerBoundError, UsageError
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }
}
