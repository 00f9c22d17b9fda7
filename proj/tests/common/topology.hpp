#pragma once

// Classifier-vs-tracer comparison on the unrotated differential. Each zero
// carries three critical rays; we compare the multiset of ray ends per zero
// (labels p1, p2, +1, -1, inf) and the spiral kind of every pole end.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "jqd/qdclass.hpp"
#include "jqd/tracer.hpp"

namespace topo {

using jqd::cx;

inline std::string zero_name(jqd::ZeroLabel z) { return z == jqd::ZeroLabel::p1 ? "p1" : "p2"; }
inline jqd::ZeroLabel other(jqd::ZeroLabel z) {
    return z == jqd::ZeroLabel::p1 ? jqd::ZeroLabel::p2 : jqd::ZeroLabel::p1;
}
inline std::string pole_name(int pole) { return pole == 1 ? "+1" : pole == -1 ? "-1" : "inf"; }

struct RayPattern {
    std::array<std::vector<std::string>, 2> ends;  // [p1, p2], sorted
    bool defined = false;
};

inline RayPattern expected_pattern(const jqd::TopologicalType& t) {
    using jqd::Variant;
    RayPattern r;
    auto set = [&](jqd::ZeroLabel z, std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        r.ends[z == jqd::ZeroLabel::p1 ? 0 : 1] = std::move(v);
    };
    const auto P1 = jqd::ZeroLabel::p1, P2 = jqd::ZeroLabel::p2;
    switch (t.variant) {
    case Variant::ThreeCircles_a:
    case Variant::ThreeCircles_b:
        set(P1, {"p1", "p1", "p2"});
        set(P2, {"p2", "p2", "p1"});
        break;
    case Variant::ThreeCircles_c:
        set(P1, {"p2", "p2", "p2"});
        set(P2, {"p1", "p1", "p1"});
        break;
    case Variant::TwoCircles: {
        auto zd = t.zero_on_Dinf, zo = other(zd);
        auto strip = pole_name(-t.second_pole);
        set(zd, {zero_name(zd), zero_name(zd), strip});
        set(zo, {zero_name(zo), zero_name(zo), strip});
        break;
    }
    case Variant::OneCircleOneStrip_a:
        set(P1, {"p2", "p2", pole_name(t.pole_of_p1)});
        set(P2, {"p1", "p1", pole_name(t.pole_of_p2)});
        break;
    case Variant::OneCircleOneStrip_b1: {
        auto zd = t.zero_on_Dinf, zo = other(zd);
        set(zd, {zero_name(zd), zero_name(zd), zero_name(zo)});
        set(zo, {zero_name(zd), "+1", "-1"});
        break;
    }
    case Variant::OneCircleTwoStrips: {
        auto zd = t.zero_on_Dinf, zo = other(zd);
        auto strip = pole_name(t.strip_pole);
        set(zd, {zero_name(zd), zero_name(zd), strip});
        set(zo, {strip, strip, pole_name(t.single_target)});
        break;
    }
    case Variant::Degenerate:
        return r;
    }
    r.defined = true;
    return r;
}

struct TracedPattern {
    RayPattern rays;
    bool spiral_ok = true;   // every pole end agrees with spiral_behavior
    bool complete = true;    // no truncated / infinity ends
    std::string detail;
};

inline TracedPattern traced_pattern(const jqd::NormalizedQD& qd, const jqd::CriticalGraph& g) {
    TracedPattern out;
    auto sp = jqd::spiral_behavior(qd);
    auto label_of = [&](int cp) -> std::string {
        cx z = g.vertices[cp].z;
        if (g.vertices[cp].is_pole()) return std::abs(z - 1.0) < 1e-9 ? "+1" : "-1";
        return std::abs(z - qd.p1) <= std::abs(z - qd.p2) ? "p1" : "p2";
    };
    for (const auto& a : g.arcs) {
        std::string from = label_of(a.start_cp);
        std::string end;
        switch (a.end.kind) {
        case jqd::EndKind::critical_point:
            end = label_of(a.end.cp);
            break;
        case jqd::EndKind::pole_spiral:
        case jqd::EndKind::pole_radial: {
            end = label_of(a.end.cp);
            jqd::Spiral want = end == "+1" ? sp.first : sp.second;
            jqd::Spiral got = a.end.kind == jqd::EndKind::pole_radial ? jqd::Spiral::radial : a.end.spiral;
            if (want != got) {
                out.spiral_ok = false;
                out.detail += " spiral@" + end + ":" + jqd::to_string(got) + "!=" + jqd::to_string(want);
            }
            break;
        }
        case jqd::EndKind::infinity:
            end = "inf";
            break;
        default:
            out.complete = false;
            end = jqd::to_string(a.end.kind);
        }
        out.rays.ends[from == "p1" ? 0 : 1].push_back(end);
    }
    for (auto& v : out.rays.ends) std::sort(v.begin(), v.end());
    out.rays.defined = true;
    return out;
}

inline std::string show(const RayPattern& r) {
    std::string s;
    for (int k = 0; k < 2; ++k) {
        s += k ? " p2:{" : "p1:{";
        for (size_t i = 0; i < r.ends[k].size(); ++i) s += (i ? "," : "") + r.ends[k][i];
        s += "}";
    }
    return s;
}

struct Concordance {
    bool match = false;
    bool boundary = false;
    std::string detail;
};

inline Concordance concordance(const jqd::NormalizedQD& qd, const jqd::TraceOptions& opt = {}) {
    Concordance c;
    auto t = jqd::classify(qd);
    c.boundary = t.boundary_marker;
    auto want = expected_pattern(t);
    if (!want.defined) {
        c.detail = "degenerate";
        return c;
    }
    auto g = jqd::trace_critical(qd, opt);
    auto got = traced_pattern(qd, g);
    c.match = got.complete && got.spiral_ok && got.rays.ends == want.ends;
    if (!c.match)
        c.detail = std::string(jqd::to_string(t.variant)) + " want " + show(want) + " got " + show(got.rays) + got.detail;
    return c;
}

}  // namespace topo
