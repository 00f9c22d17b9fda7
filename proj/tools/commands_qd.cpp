#include <atomic>
#include <cmath>
#include <cstdio>
#include <regex>
#include <thread>

#include <jqd/errors.hpp>
#include <jqd/geodesy.hpp>
#include <jqd/limitfield.hpp>
#include <jqd/qdclass.hpp>
#include <jqd/tracer.hpp>

#include "cli_common.hpp"
#include "render.hpp"

namespace jqdcli {

namespace {

Json header(const char* command) { return Json{{"schema", 1}, {"command", command}}; }

jqd::NormalizedQD qd_from(const Options& o) {
    require(!o.p1.empty() && !o.p2.empty(), "--p1 and --p2 are required");
    return {parse_complex(o.p1), parse_complex(o.p2)};
}

Json heights_json(const jqd::NormalizedQD& qd) {
    if (!jqd::genericity(qd).p1_off_poles || !jqd::genericity(qd).p2_off_poles) return nullptr;
    auto h = jqd::heights(qd);
    return Json{{"C1", cx_json(h.C1)},           {"Cm1", cx_json(h.Cm1)},   {"hplus", h.hplus},
                {"hminus", h.hminus},           {"h1", h.h1},             {"h", h.h},
                {"spiral_plus", jqd::to_string(h.spiral_plus)}, {"spiral_minus", jqd::to_string(h.spiral_minus)}};
}

void cmd_classify(const Options& o) {
    auto qd = qd_from(o);
    auto t = jqd::classify(qd);
    Json out = header("classify");
    out["p1"] = cx_json(qd.p1);
    out["p2"] = cx_json(qd.p2);
    out["variant"] = jqd::to_string(t.variant);
    out["boundary_marker"] = t.boundary_marker;
    switch (t.variant) {
        case jqd::Variant::Degenerate:
            out["degenerate"] = Json{{"kind", jqd::to_string(t.degenerate.kind)},
                                     {"pole", t.degenerate.pole},
                                     {"swapped", t.degenerate.swapped},
                                     {"p1_subkind", t.degenerate.p1_subkind}};
            break;
        case jqd::Variant::TwoCircles:
            out["second_pole"] = t.second_pole;
            out["zero_on_Dinf"] = jqd::to_string(t.zero_on_Dinf);
            break;
        case jqd::Variant::OneCircleOneStrip_a:
            out["pole_of_p1"] = t.pole_of_p1;
            out["pole_of_p2"] = t.pole_of_p2;
            break;
        case jqd::Variant::OneCircleOneStrip_b1: out["zero_on_Dinf"] = jqd::to_string(t.zero_on_Dinf); break;
        case jqd::Variant::OneCircleTwoStrips: {
            out["orientation"] = t.b2 ? "b2" : "b3";
            out["strip_pole"] = t.strip_pole;
            out["zero_on_Dinf"] = jqd::to_string(t.zero_on_Dinf);
            out["single_source"] = jqd::to_string(t.single_source);
            out["single_target"] = t.single_target;
            auto d = jqd::strip_diagram(qd);
            out["subcase"] = jqd::to_string(d.subcase);
            out["subcase_boundary"] = d.boundary_marker;
            break;
        }
        default: break;
    }
    bool both_real = std::abs(qd.p1.imag()) <= jqd::kGenericTol && std::abs(qd.p2.imag()) <= jqd::kGenericTol;
    if (t.variant != jqd::Variant::Degenerate && !both_real) {
        // Region of the pair in the frame classify normalized to.
        cx a = t.swapped ? qd.p2 : qd.p1, b = t.swapped ? qd.p1 : qd.p2;
        if (t.conjugated) a = std::conj(a), b = std::conj(b);
        out["region"] = jqd::to_string(jqd::region_of(a, b).region);
    }
    out["normalization"] = Json{{"swapped", t.swapped}, {"conjugated", t.conjugated}};
    out["heights"] = heights_json(qd);
    emit(o, out);
}

void cmd_spiral(const Options& o) {
    auto qd = qd_from(o);
    auto [sp, sm] = jqd::spiral_behavior(qd);
    Json out = header("spiral");
    out["p1"] = cx_json(qd.p1);
    out["p2"] = cx_json(qd.p2);
    out["plus"] = jqd::to_string(sp);
    out["minus"] = jqd::to_string(sm);
    out["heights"] = heights_json(qd);
    emit(o, out);
}

void cmd_diagram(const Options& o) {
    auto qd = qd_from(o);
    auto d = jqd::strip_diagram(qd);
    auto s = jqd::subcase_by_inequalities(qd);
    Json out = header("diagram");
    out["p1"] = cx_json(qd.p1);
    out["p2"] = cx_json(qd.p2);
    out["x2"] = d.x2;
    out["h1"] = d.h1;
    out["x2prime"] = d.x2prime;
    out["h"] = d.h;
    out["u"] = Json::array({d.u1, d.u2, d.u3, d.u4});
    out["subcase"] = jqd::to_string(d.subcase);
    out["boundary_marker"] = d.boundary_marker;
    out["subcase_by_inequalities"] = jqd::to_string(s.subcase);
    out["mirrored"] = d.mirrored;
    out["F_p2"] = cx_json(jqd::F_p2_closed_form(qd));
    if (!o.svg.empty()) write_file(o.svg, jqd::diagram_svg(d));
    emit(o, out);
}

void cmd_geodesics(const Options& o) {
    auto qd = qd_from(o);
    Json out = header("geodesics");
    out["p1"] = cx_json(qd.p1);
    out["p2"] = cx_json(qd.p2);
    Json inv = Json::parse(jqd::inventory_json(jqd::geodesic_inventory(qd)));
    for (auto it = inv.begin(); it != inv.end(); ++it) out[it.key()] = it.value();
    emit(o, out);
}

void cmd_short_s(const Options& o) {
    auto qd = qd_from(o);
    Json out = header("short-s");
    out["p1"] = cx_json(qd.p1);
    out["p2"] = cx_json(qd.p2);
    Json vals = Json::array();
    for (auto& v : jqd::short_s_values(qd)) vals.push_back(Json{{"s", v.s}, {"kinds", v.kinds}, {"multiplicity", v.multiplicity}});
    out["values"] = vals;
    out["count"] = vals.size();
    emit(o, out);
}

void cmd_trace(const Options& o) {
    jqd::TraceOptions topt;
    topt.budget = o.budget;
    topt.workers = o.workers;
    Json out = header("trace");
    jqd::RationalQD rq = [&] {
        if (!o.A.empty() || !o.B.empty()) {
            require(!o.A.empty() && !o.B.empty(), "--A and --B go together");
            auto t2 = jqd::limit_differential(jqd::LimitParams(parse_complex(o.A), parse_complex(o.B)));
            if (t2.degenerate) jqd::fail_input("degenerate", "A + B + 2 = 0: the differential is not normalizable");
            out["A"] = cx_json(parse_complex(o.A));
            out["B"] = cx_json(parse_complex(o.B));
            out["p1"] = cx_json(t2.qd.p1);
            out["p2"] = cx_json(t2.qd.p2);
            return jqd::RationalQD::from_normalized(t2.qd);
        }
        auto qd = qd_from(o);
        out["p1"] = cx_json(qd.p1);
        out["p2"] = cx_json(qd.p2);
        return jqd::RationalQD::from_normalized(qd);
    }();
    if (o.s != 0) rq = rq.rotated(o.s);
    out["s"] = o.s;
    auto g = jqd::trace_critical(rq, topt);
    Json verts = Json::array();
    for (auto& v : g.vertices) verts.push_back(Json{{"z", cx_json(v.z)}, {"order", v.order}});
    Json arcs = Json::array();
    for (auto& a : g.arcs) {
        arcs.push_back(Json{{"start_cp", a.start_cp},
                            {"start_ray", a.start_ray},
                            {"end", jqd::to_string(a.end.kind)},
                            {"end_cp", a.end.cp},
                            {"end_ray", a.end.ray},
                            {"spiral", a.end.kind == jqd::EndKind::pole_spiral ? Json(jqd::to_string(a.end.spiral))
                                                                                : Json(nullptr)},
                            {"q_length", a.q_length},
                            {"steps", a.steps}});
    }
    Json edges = Json::array();
    for (auto& e : g.edges) edges.push_back(Json{{"a", e.a}, {"b", e.b}, {"q_length", e.q_length}});
    out["vertices"] = verts;
    out["arcs"] = arcs;
    out["n_edges"] = edges.size();
    out["edges"] = edges;
    if (!o.csv.empty()) write_file(o.csv, jqd::graph_csv(g));
    if (!o.svg.empty()) write_file(o.svg, graph_svg(g, 2.0 * rq.scale()));
    emit(o, out);
}

struct GridSpec {
    double x0, x1, y0, y1;
};

GridSpec parse_grid(const std::string& s) {
    static const std::regex re(R"(^\s*([-+]?[0-9.]+(?:[eE][-+]?[0-9]+)?)\.\.([-+]?[0-9.]+(?:[eE][-+]?[0-9]+)?))"
                               R"(x([-+]?[0-9.]+(?:[eE][-+]?[0-9]+)?)\.\.([-+]?[0-9.]+(?:[eE][-+]?[0-9]+)?)\s*$)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) jqd::fail_input("usage", "grid must look like -3..3x-3..3");
    double v[4];
    for (int k = 0; k < 4; ++k) v[k] = std::stod(m[k + 1].str());
    require(v[0] < v[1] && v[2] < v[3], "grid ranges must be increasing");
    return {v[0], v[1], v[2], v[3]};
}

void cmd_sweep(const Options& o) {
    require(!o.p1.empty(), "--p1 is required");
    require(o.res >= 1 && o.res <= 4000, "--res must be in [1, 4000]");
    require(o.workers >= 1, "--workers must be >= 1");
    cx p1 = parse_complex(o.p1);
    GridSpec gs = parse_grid(o.grid);
    const int res = o.res;
    std::vector<SweepCell> cells(std::size_t(res) * res);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < cells.size();) {
            SweepCell& c = cells[k];
            c.i = int(k % res);
            c.j = int(k / res);
            c.re = gs.x0 + (c.i + 0.5) * (gs.x1 - gs.x0) / res;
            c.im = gs.y0 + (c.j + 0.5) * (gs.y1 - gs.y0) / res;
            try {
                auto t = jqd::classify({p1, {c.re, c.im}});
                c.variant = t.variant;
                c.label = jqd::to_string(t.variant);
                if (t.variant == jqd::Variant::OneCircleTwoStrips)
                    c.label = std::string(t.b2 ? "b2/" : "b3/") + jqd::to_string(t.zero_on_Dinf);
                c.boundary = t.boundary_marker;
                c.ok = true;
            } catch (const std::exception& e) {
                c.error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < o.workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    Json out = header("sweep");
    out["p1"] = cx_json(p1);
    out["grid"] = Json::array({gs.x0, gs.x1, gs.y0, gs.y1});
    out["res"] = res;
    Json counts = Json::object();
    int boundary = 0;
    Json failures = Json::array();
    std::string csv = "i,j,re,im,type,boundary\n";
    char buf[160];
    for (const auto& c : cells) {
        if (!c.ok) {
            failures.push_back(Json{{"i", c.i}, {"j", c.j}, {"p2", cx_json({c.re, c.im})}, {"error", c.error}});
            continue;
        }
        const std::string& v = c.label;
        counts[v] = counts.value(v, 0) + 1;
        boundary += c.boundary;
        std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g,%s,%d\n", c.i, c.j, c.re, c.im, v.c_str(), int(c.boundary));
        csv += buf;
    }
    out["counts"] = counts;
    out["boundary_cells"] = boundary;
    out["failures"] = failures;
    if (!o.csv.empty()) write_file(o.csv, csv);
    if (!o.svg.empty()) write_file(o.svg, sweep_svg(cells, res, gs.x0, gs.x1, gs.y0, gs.y1, p1));
    emit(o, out);
}

void qd_options(CLI::App* c, Options& o) {
    c->add_option("--p1", o.p1, "first zero, e.g. 2i or -0.5+0.5i or 0,2");
    c->add_option("--p2", o.p2, "second zero");
    c->add_option("--json", o.json, "write JSON here instead of stdout");
}

}  // namespace

void add_qd_commands(CLI::App& app, Options& o) {
    auto* c = app.add_subcommand("classify", "Topological type of -(z-p1)(z-p2)/(z^2-1)^2 dz^2");
    qd_options(c, o);
    c->callback([&o] { cmd_classify(o); });

    auto* sp = app.add_subcommand("spiral", "Trajectory behaviour at the poles +1 and -1");
    qd_options(sp, o);
    sp->callback([&o] { cmd_spiral(o); });

    auto* dg = app.add_subcommand("diagram", "Strip diagram of a two-strip configuration");
    qd_options(dg, o);
    dg->add_option("--svg", o.svg, "write the w-plane picture");
    dg->callback([&o] { cmd_diagram(o); });

    auto* ge = app.add_subcommand("geodesics", "Short geodesics and geodesic loops with rotation angles");
    qd_options(ge, o);
    ge->callback([&o] { cmd_geodesics(o); });

    auto* ss = app.add_subcommand("short-s", "Rotation values s with short trajectories");
    qd_options(ss, o);
    ss->callback([&o] { cmd_short_s(o); });

    auto* tr = app.add_subcommand("trace", "Numerical critical graph");
    qd_options(tr, o);
    tr->add_option("--A", o.A, "trace the limiting differential for (A, B) instead");
    tr->add_option("--B", o.B);
    tr->add_option("--s", o.s, "rotate to exp(-is) Q");
    tr->add_option("--budget", o.budget, "Q-length budget per arc");
    tr->add_option("--workers", o.workers);
    tr->add_option("--csv", o.csv, "arc polylines");
    tr->add_option("--svg", o.svg, "z-plane picture");
    tr->callback([&o] { cmd_trace(o); });

    auto* sw = app.add_subcommand("sweep", "Type map over a grid of p2 for fixed p1");
    sw->add_option("--p1", o.p1);
    sw->add_option("--grid", o.grid, "x0..x1xy0..y1");
    sw->add_option("--res", o.res, "cells per side");
    sw->add_option("--workers", o.workers);
    sw->add_option("--json", o.json);
    sw->add_option("--csv", o.csv);
    sw->add_option("--svg", o.svg);
    sw->callback([&o] { cmd_sweep(o); });
}

}  // namespace jqdcli
