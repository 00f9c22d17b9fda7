#include "render.hpp"

#include <cmath>
#include <cstdio>

namespace jqdcli {

namespace {

const char* arc_color(jqd::EndKind k) {
    switch (k) {
        case jqd::EndKind::critical_point: return "#d62728";
        case jqd::EndKind::pole_spiral: return "#1f77b4";
        case jqd::EndKind::pole_radial: return "#17becf";
        case jqd::EndKind::closed: return "#2ca02c";
        case jqd::EndKind::infinity: return "#9467bd";
        case jqd::EndKind::truncated: return "#7f7f7f";
    }
    return "black";
}

const char* label_color(const std::string& label) {
    if (label == "b2/p1") return "#9ecae1";
    if (label == "b2/p2") return "#3182bd";
    if (label == "b3/p1") return "#fdd0a2";
    if (label == "b3/p2") return "#e6550d";
    return nullptr;
}

const char* variant_color(jqd::Variant v) {
    switch (v) {
        case jqd::Variant::ThreeCircles_a: return "#fdd0a2";
        case jqd::Variant::ThreeCircles_b: return "#fdae6b";
        case jqd::Variant::ThreeCircles_c: return "#e6550d";
        case jqd::Variant::TwoCircles: return "#31a354";
        case jqd::Variant::OneCircleOneStrip_a: return "#756bb1";
        case jqd::Variant::OneCircleOneStrip_b1: return "#9e9ac8";
        case jqd::Variant::OneCircleTwoStrips: return "#9ecae1";
        case jqd::Variant::Degenerate: return "#636363";
    }
    return "white";
}

}  // namespace

std::string graph_svg(const jqd::CriticalGraph& g, double hw) {
    const double W = 700;
    auto X = [&](double x) { return (x + hw) / (2 * hw) * W; };
    auto Y = [&](double y) { return (hw - y) / (2 * hw) * W; };
    std::string s;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\">\n"
                  "<rect width=\"100%%\" height=\"100%%\" fill=\"white\"/>\n",
                  W, W);
    s += buf;
    for (const auto& arc : g.arcs) {
        std::snprintf(buf, sizeof buf, "<polyline fill=\"none\" stroke=\"%s\" stroke-width=\"1.5\" points=\"",
                      arc_color(arc.end.kind));
        s += buf;
        for (jqd::cx z : arc.points) {
            if (std::abs(z.real()) > 3 * hw || std::abs(z.imag()) > 3 * hw) break;
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", X(z.real()), Y(z.imag()));
            s += buf;
        }
        s += "\"/>\n";
    }
    for (const auto& v : g.vertices) {
        std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%d\" fill=\"%s\"/>\n", X(v.z.real()),
                      Y(v.z.imag()), v.is_pole() ? 5 : 4, v.is_pole() ? "black" : "#d62728");
        s += buf;
    }
    s += "</svg>\n";
    return s;
}

std::string sweep_svg(const std::vector<SweepCell>& cells, int res, double x0, double x1, double y0, double y1,
                      std::complex<double> p1) {
    const double W = 800;
    double cw = W / res;
    std::string s;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" shape-rendering=\"crispEdges\">\n",
                  W, W);
    s += buf;
    for (const auto& c : cells) {
        const char* color = "#ff00ff";
        if (c.ok) {
            const char* lc = label_color(c.label);
            color = c.boundary ? "black" : (lc ? lc : variant_color(c.variant));
        }
        std::snprintf(buf, sizeof buf, "<rect x=\"%.3f\" y=\"%.3f\" width=\"%.3f\" height=\"%.3f\" fill=\"%s\"/>\n",
                      c.i * cw, (res - 1 - c.j) * cw, cw + 0.01, cw + 0.01, color);
        s += buf;
    }
    auto X = [&](double x) { return (x - x0) / (x1 - x0) * W; };
    auto Y = [&](double y) { return (y1 - y) / (y1 - y0) * W; };
    for (double pole : {-1.0, 1.0}) {
        std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n",
                      X(pole), Y(0));
        s += buf;
    }
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"5\" fill=\"red\"/>\n", X(p1.real()),
                  Y(p1.imag()));
    s += buf;
    s += "</svg>\n";
    return s;
}

}  // namespace jqdcli
