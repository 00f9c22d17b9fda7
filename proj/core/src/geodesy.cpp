#include "jqd/geodesy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "jqd/errors.hpp"

namespace jqd {

namespace {

constexpr double kPi = std::numbers::pi;
const cx I(0.0, 1.0);

struct Radicals {
    cx m1, m2, q1, q2;  // sqrt(p_k -+ 1) on the chosen sheets
};

Radicals radicals(const NormalizedQD& qd, const BranchContext& c) {
    return {double(c.m1) * std::sqrt(qd.p1 - 1.0), double(c.m2) * std::sqrt(qd.p2 - 1.0),
            double(c.q1) * std::sqrt(qd.p1 + 1.0), double(c.q2) * std::sqrt(qd.p2 + 1.0)};
}

cx phi_raw(const NormalizedQD& qd, cx z, const BranchContext& c) {
    Radicals R = radicals(qd, c);
    cx S1 = R.m1 * R.m2, Sm = R.q1 * R.q2;
    cx r1 = double(c.r1) * std::sqrt(z - qd.p1), r2 = double(c.r2) * std::sqrt(z - qd.p2);
    auto L = [](cx w, int k) { return std::log(w) + 2.0 * kPi * I * double(k); };
    cx v = S1 * L(z - 1.0, c.k_zm1) - Sm * L(z + 1.0, c.k_zp1) + 4.0 * L(r1 + r2, c.k_sum) +
           2.0 * Sm * L(R.q1 * r2 - R.q2 * r1, c.k_plus) - 2.0 * S1 * L(R.m1 * r2 - R.m2 * r1, c.k_minus);
    return v / (4.0 * kPi * I);
}

bool near_pole(cx z) { return std::abs(z - 1.0) < kGenericTol || std::abs(z + 1.0) < kGenericTol; }

double seg_distance(cx a, cx b, cx p) {
    cx d = b - a;
    double L2 = std::norm(d);
    double t = L2 > 0 ? std::clamp(((p - a) * std::conj(d)).real() / L2, 0.0, 1.0) : 0.0;
    return std::abs(a + t * d - p);
}

struct Frame {
    NormalizedQD qd;      // after the b3 mirror
    TopologicalType type; // of the original input
    bool mirrored = false;
};

Frame two_strip_frame(const NormalizedQD& qd) {
    Frame f{qd, classify(qd), false};
    if (f.type.variant != Variant::OneCircleTwoStrips)
        fail_input("not_two_strip", std::string("configuration is ") + to_string(f.type.variant));
    if (!f.type.b2) {
        f.qd = {-qd.p1, -qd.p2};
        f.mirrored = true;
    }
    return f;
}

cx upper_w2(const NormalizedQD& qd) {
    auto [c1, cm1] = leading_coeffs(qd);
    return 0.5 + 0.25 * (upper_sqrt(c1) + upper_sqrt(cm1));
}

int cmp_tol(double x, double y, double tol) {
    if (std::abs(x - y) <= tol) return 0;
    return x < y ? -1 : 1;
}

}  // namespace

double fold_angle(double a) {
    double r = std::fmod(a, kPi);
    if (r < 0) r += kPi;
    if (r >= kPi) r -= kPi;
    return r;
}

double fold_s(double s) {
    double r = std::fmod(s, 2 * kPi);
    if (r < 0) r += 2 * kPi;
    if (r >= 2 * kPi) r -= 2 * kPi;
    return r;
}

cx phi_sqrt_q(const NormalizedQD& qd, cx z, const BranchContext& c) {
    cx r1 = double(c.r1) * std::sqrt(z - qd.p1), r2 = double(c.r2) * std::sqrt(z - qd.p2);
    return -I * r1 * r2 / ((z - 1.0) * (z + 1.0));
}

cx phi(const NormalizedQD& qd, cx z, const BranchContext& c) {
    if (near_pole(z)) fail_input("critical_point", "phi evaluated at a pole");
    if (!genericity(qd).generic()) fail_input("degenerate", "phi needs distinct zeros off the poles");
    cx v = phi_raw(qd, z, c);
    if (c.debug_check) {
        double eps = 1e-5 * std::max(1.0, std::abs(z));
        double dmin = std::min(std::abs(z - qd.p1), std::abs(z - qd.p2));
        dmin = std::min({dmin, std::abs(z - 1.0), std::abs(z + 1.0)});
        if (dmin > 10 * eps) {
            cx fd = (phi_raw(qd, z + eps, c) - phi_raw(qd, z - eps, c)) / (2 * eps);
            cx ref = phi_sqrt_q(qd, z, c) / (2 * kPi);
            if (std::abs(fd - ref) > 1e-6 * (1.0 + std::abs(ref)))
                fail_numeric("branch", "finite-difference derivative disagrees with sqrt(Q)/(2 pi)");
        }
    }
    return v;
}

cx phi_at_p1(const NormalizedQD& qd, const BranchContext& c) {
    if (!genericity(qd).generic()) fail_input("degenerate", "phi needs distinct zeros off the poles");
    return phi_raw(qd, qd.p1, c);
}

cx F_p2_closed_form(const NormalizedQD& qd) {
    auto [c1, cm1] = leading_coeffs(qd);
    return 0.5 + 0.25 * (upper_sqrt(c1) - upper_sqrt(cm1));
}

QuadratureResult F_numeric(const NormalizedQD& qd, cx z_from, cx z_to, const std::vector<cx>& waypoints,
                           double tol) {
    if (!genericity(qd).generic()) fail_input("degenerate", "quadrature needs a generic configuration");
    std::vector<cx> path{z_from};
    path.insert(path.end(), waypoints.begin(), waypoints.end());
    path.push_back(z_to);
    const std::array<cx, 4> cps{qd.p1, qd.p2, cx(1.0), cx(-1.0)};
    constexpr double kClear = 1e-3;
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
        for (std::size_t k = 0; k < cps.size(); ++k) {
            bool is_zero = k < 2;
            bool at_start = s == 0 && is_zero && path.front() == cps[k];
            bool at_end = s + 2 == path.size() && is_zero && path.back() == cps[k];
            if (at_start || at_end) {
                // Only the touching endpoint may come close.
                cx other = at_start ? path[s + 1] : path[s];
                if (other == cps[k]) fail_input("path_too_close", "degenerate segment at a zero");
                continue;
            }
            if (seg_distance(path[s], path[s + 1], cps[k]) < kClear)
                fail_input("path_too_close", "path passes within 1e-3 of a critical point");
        }
    }

    // Continuous square roots of z - p1, z - p2 carried segment to segment.
    std::array<cx, 2> zeros{qd.p1, qd.p2};
    std::array<cx, 2> r{std::sqrt(z_from - qd.p1), std::sqrt(z_from - qd.p2)};
    QuadratureResult out{0.0, 0.0};
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
        cx a = path[s], b = path[s + 1], d = b - a;
        if (d == cx{}) continue;
        auto root_at = [&](int k, double t) -> cx {
            cx off = a - zeros[k];
            if (off == cx{}) return std::sqrt(t) * std::sqrt(d);
            return r[k] * std::sqrt(1.0 + t * d / off);
        };
        auto f = [&](double tau) -> cx {
            double t = 0.5 * (1.0 - std::cos(kPi * tau));
            double dt = 0.5 * kPi * std::sin(kPi * tau);
            cx z = a + t * d;
            return -I * root_at(0, t) * root_at(1, t) / ((z - 1.0) * (z + 1.0)) * d * dt / (2 * kPi);
        };
        double err = 0;
        cx v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, 0.0, 1.0, 30, tol, &err);
        out.value += v;
        out.error_estimate += err;
        r = {root_at(0, 1.0), root_at(1, 1.0)};
    }
    return out;
}

LatticeMatch lattice_reduce(const NormalizedQD& qd, cx delta, int kmax) {
    auto [c1, cm1] = leading_coeffs(qd);
    cx gp = 0.5 * upper_sqrt(c1), gm = 0.5 * upper_sqrt(cm1);
    LatticeMatch best;
    best.deviation = INFINITY;
    for (int kp = -kmax; kp <= kmax; ++kp)
        for (int km = -kmax; km <= kmax; ++km) {
            cx rest = delta - double(kp) * gp - double(km) * gm;
            for (int k1 = -kmax; k1 <= kmax; ++k1) {
                double dev = std::abs(rest - double(k1));
                if (dev < best.deviation) best = {k1, kp, km, dev};
            }
        }
    return best;
}

const char* to_string(Subcase s) {
    static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h", "i"};
    return names[int(s)];
}

char letter(Subcase s) { return char('a' + int(s)); }

StripDiagram strip_diagram(const NormalizedQD& qd) {
    Frame f = two_strip_frame(qd);
    StripDiagram d;
    d.mirrored = f.mirrored;
    cx w1 = F_p2_closed_form(f.qd), w2 = upper_w2(f.qd);
    d.x2 = w1.real();
    d.h1 = w1.imag();
    d.x2prime = w2.real();
    d.h = w2.imag();
    if (d.h1 <= kSubcaseTol) fail_input("not_two_strip", "strip height h1 vanishes");
    d.u1 = (d.x2 - 1.0) * d.h / d.h1;
    d.u2 = d.u1 + 1.0;
    d.u3 = d.x2 * d.h / d.h1;
    d.u4 = d.u3 + 1.0;
    const double us[4] = {d.u1, d.u2, d.u3, d.u4};
    int pos = 8;  // index into a..i
    for (int k = 0; k < 4; ++k) {
        double tol = kSubcaseTol * std::max(1.0, std::abs(us[k]));
        int c = cmp_tol(d.x2prime, us[k], tol);
        if (c < 0) { pos = 2 * k; break; }
        if (c == 0) { pos = 2 * k + 1; break; }
    }
    d.subcase = Subcase(pos);
    d.boundary_marker = pos % 2 == 1;
    return d;
}

SubcaseResult subcase_by_inequalities(const NormalizedQD& qd) {
    Frame f = two_strip_frame(qd);
    cx w1 = F_p2_closed_form(f.qd), w2 = upper_w2(f.qd);
    if (w1.imag() <= kSubcaseTol) fail_input("not_two_strip", "strip height h1 vanishes");
    double aW1 = std::arg(w1), aW1m = std::arg(w1 - 1.0);
    double aW2 = std::arg(w2), aW2m = std::arg(w2 - 1.0);
    const double t = kSubcaseTol;
    auto pick = [](int c, Subcase lo, Subcase eq) -> std::optional<SubcaseResult> {
        if (c < 0) return SubcaseResult{lo, false};
        if (c == 0) return SubcaseResult{eq, true};
        return std::nullopt;
    };
    if (auto r = pick(cmp_tol(aW1m, aW2, t), Subcase::a, Subcase::b)) return *r;
    if (auto r = pick(cmp_tol(aW1m, aW2m, t), Subcase::c, Subcase::d)) return *r;
    if (auto r = pick(cmp_tol(aW1, aW2, t), Subcase::e, Subcase::f)) return *r;
    if (auto r = pick(cmp_tol(aW1, aW2m, t), Subcase::g, Subcase::h)) return *r;
    return {Subcase::i, false};
}

namespace {

ZeroLabel other_zero(ZeroLabel z) { return z == ZeroLabel::p1 ? ZeroLabel::p2 : ZeroLabel::p1; }

struct InventoryBuilder {
    GeodesicInventory inv;
    void geodesic(const char* name, double angle, ZeroLabel a = ZeroLabel::p1, ZeroLabel b = ZeroLabel::p2) {
        double al = fold_angle(angle);
        inv.geodesics.push_back({name, a, b, al, fold_s(2 * al)});
    }
    void loop(const char* name, ZeroLabel base, int pole, double angle) {
        double al = fold_angle(angle);
        inv.loops.push_back({name, base, pole, al, fold_s(2 * al)});
    }
};

void inventory_three_circles_real(const NormalizedQD& qd, InventoryBuilder& b) {
    double a = qd.p1.real(), c = qd.p2.real();
    ZeroLabel hi = a > c ? ZeroLabel::p1 : ZeroLabel::p2, lo = other_zero(hi);
    b.geodesic("gamma_0", 0.0, lo, hi);
    if (std::max(a, c) < 1 && std::min(a, c) > -1) {
        b.loop("gamma_1", hi, 1, 0.0);
        b.loop("gamma_-1", lo, -1, 0.0);
    } else if (std::min(a, c) > 1) {
        b.loop("gamma_1", lo, 1, 0.0);
        b.loop("gamma_inf", hi, 0, 0.0);
    } else {
        b.loop("gamma_-1", hi, -1, 0.0);
        b.loop("gamma_inf", lo, 0, 0.0);
    }
}

void inventory_two_circles(const NormalizedQD& qd, const TopologicalType& t, InventoryBuilder& b) {
    // Frame with the circle pole at -1; the strip pole is +1 there.
    NormalizedQD f = t.second_pole == 1 ? NormalizedQD{-qd.p1, -qd.p2} : qd;
    int strip = t.second_pole == 1 ? -1 : 1;
    auto [c1, cm1] = leading_coeffs(f);
    cx s1 = upper_sqrt(c1);
    double scm = std::sqrt(std::abs(cm1));
    double x2 = 0.5 + 0.25 * (s1.real() - scm), x2p = 0.5 + 0.25 * (s1.real() + scm);
    double h1 = 0.25 * s1.imag();
    b.geodesic("gamma_12", std::arg(cx(x2, h1)));
    b.geodesic("gamma'_12", std::arg(cx(x2p, h1)));
    b.geodesic("gamma_21", std::arg(cx(x2 - 1.0, h1)));
    b.geodesic("gamma'_21", std::arg(cx(x2p - 1.0, h1)));
    ZeroLabel zD = t.zero_on_Dinf, zO = other_zero(zD);
    b.loop("gamma_inf", zD, 0, 0.0);
    b.loop(strip == 1 ? "gamma_-1" : "gamma_1", zO, -strip, 0.0);
    // |gamma_inf| = 1 against |gamma_circle| = sqrt(Cm1)/2 in the normalized metric.
    double gap = 1.0 - 0.5 * scm;
    if (std::abs(gap) > kSubcaseTol) {
        b.loop(gap > 0 ? "gamma_11" : "gamma_22", gap > 0 ? zD : zO, strip, 0.5 * std::arg(c1));
    } else {
        b.inv.boundary_marker = true;
    }
}

void inventory_one_strip_a(const NormalizedQD& qd, const TopologicalType& t, InventoryBuilder& b) {
    auto [c1, cm1] = leading_coeffs(qd);
    cx s1 = upper_sqrt(c1), sm = upper_sqrt(cm1);
    double x2 = 0.5 + 0.25 * (s1 - sm).real(), x2p = 0.5 + 0.25 * (s1 + sm).real();
    double H = 0.5 * s1.imag();
    double x1p = x2p - 1.0 + x2;
    b.geodesic("gamma_0", 0.0);
    b.geodesic("gamma'_0", 0.0);
    b.geodesic("gamma_12", std::arg(cx(x2p, H)));
    b.geodesic("gamma_21", std::arg(cx(x1p - x2, H)));
    ZeroLabel at_plus = t.pole_of_p1 == 1 ? ZeroLabel::p1 : ZeroLabel::p2;
    b.loop("gamma_11", at_plus, 1, 0.5 * std::arg(c1));
    b.loop("gamma_22", other_zero(at_plus), -1, 0.5 * std::arg(cm1));
}

void inventory_one_strip_b1(const NormalizedQD& qd, const TopologicalType& t, InventoryBuilder& b) {
    auto [c1, cm1] = leading_coeffs(qd);
    cx w = 0.5 + 0.25 * (upper_sqrt(c1) + upper_sqrt(cm1));
    b.geodesic("gamma_0", 0.0);
    b.geodesic("gamma_12", std::arg(w));
    b.geodesic("gamma_21", std::arg(w - 1.0));
    ZeroLabel zD = t.zero_on_Dinf, zO = other_zero(zD);
    b.loop("gamma_inf", zD, 0, 0.0);
    b.loop("gamma_1", zO, 1, 0.5 * std::arg(c1));
    b.loop("gamma_-1", zO, -1, 0.5 * std::arg(cm1));
}

void inventory_two_strips(const NormalizedQD& qd, const TopologicalType& t, InventoryBuilder& b) {
    StripDiagram d = strip_diagram(qd);
    b.inv.has_subcase = true;
    b.inv.subcase = d.subcase;
    b.inv.boundary_marker = d.boundary_marker;
    auto [c1, cm1] = leading_coeffs(qd);
    const Subcase sc = d.subcase;
    b.geodesic("gamma_12", std::arg(cx(d.x2, d.h1)));
    b.geodesic("gamma'_12", std::arg(cx(d.x2 - 1.0, d.h1)));
    if (sc != Subcase::f) b.geodesic("gamma_21", std::arg(cx(d.x2prime, d.h)));
    if (sc != Subcase::d) b.geodesic("gamma'_21", std::arg(cx(d.x2prime - 1.0, d.h)));
    ZeroLabel zD = t.zero_on_Dinf, zO = other_zero(zD);
    int P = t.strip_pole, Pp = t.single_target;
    cx cP = P == 1 ? c1 : cm1, cPp = P == 1 ? cm1 : c1;
    b.loop("gamma_inf", zD, 0, 0.0);
    b.loop(Pp == 1 ? "gamma_1" : "gamma_-1", zO, Pp, 0.5 * std::arg(cPp));
    const char* third = P == 1 ? "gamma_1" : "gamma_-1";
    switch (sc) {
        case Subcase::a:
        case Subcase::i: b.loop(third, zO, P, 0.5 * std::arg(cP)); break;
        case Subcase::b:
        case Subcase::h: break;
        default: b.loop(third, zD, P, 0.5 * std::arg(cP)); break;
    }
}

}  // namespace

GeodesicInventory geodesic_inventory(const NormalizedQD& qd) {
    TopologicalType t = classify(qd);
    InventoryBuilder b;
    b.inv.variant = t.variant;
    b.inv.boundary_marker = t.boundary_marker;
    switch (t.variant) {
        case Variant::ThreeCircles_a:
        case Variant::ThreeCircles_b: inventory_three_circles_real(qd, b); break;
        case Variant::ThreeCircles_c:
            b.geodesic("gamma_0", 0.0);
            b.geodesic("gamma_1", 0.0);
            b.geodesic("gamma_-1", 0.0);
            break;
        case Variant::TwoCircles: inventory_two_circles(qd, t, b); break;
        case Variant::OneCircleOneStrip_a: inventory_one_strip_a(qd, t, b); break;
        case Variant::OneCircleOneStrip_b1: inventory_one_strip_b1(qd, t, b); break;
        case Variant::OneCircleTwoStrips: inventory_two_strips(qd, t, b); break;
        case Variant::Degenerate:
            if (t.degenerate.kind == DegenerateKind::both_at_poles_opposite) {
                b.geodesic("interval(-1,1)", 0.0);
                break;
            }
            fail_input("not_applicable",
                       std::string("no inventory for degenerate kind ") + to_string(t.degenerate.kind));
    }
    return b.inv;
}

namespace {

std::string pole_name(int pole) {
    if (pole == 0) return "inf";
    return pole > 0 ? "+1" : "-1";
}

bool same_s(double a, double b) {
    double d = std::abs(a - b);
    return std::min(d, 2 * kPi - d) <= kSubcaseTol;
}

}  // namespace

std::vector<ShortSValue> short_s_values(const NormalizedQD& qd) {
    GeodesicInventory inv = geodesic_inventory(qd);
    std::vector<std::pair<double, std::string>> items;
    for (auto& g : inv.geodesics) items.emplace_back(g.s, "short_trajectory");
    for (auto& l : inv.loops) items.emplace_back(l.s, "trajectory_loop(" + pole_name(l.pole) + ")");
    std::vector<ShortSValue> out;
    for (auto& [s, kind] : items) {
        auto it = std::find_if(out.begin(), out.end(), [&](const ShortSValue& v) { return same_s(v.s, s); });
        if (it == out.end()) {
            out.push_back({s, {kind}, 1});
        } else {
            ++it->multiplicity;
            if (std::find(it->kinds.begin(), it->kinds.end(), kind) == it->kinds.end())
                it->kinds.push_back(kind);
        }
    }
    for (auto& v : out) std::sort(v.kinds.begin(), v.kinds.end());
    std::sort(out.begin(), out.end(), [](const ShortSValue& a, const ShortSValue& b) { return a.s < b.s; });
    return out;
}

std::string inventory_json(const GeodesicInventory& inv) {
    char buf[256];
    std::string s = "{\"variant\":\"";
    s += to_string(inv.variant);
    s += "\",\"subcase\":";
    s += inv.has_subcase ? std::string("\"") + to_string(inv.subcase) + "\"" : "null";
    s += ",\"boundary_marker\":";
    s += inv.boundary_marker ? "true" : "false";
    s += ",\"geodesics\":[";
    for (std::size_t i = 0; i < inv.geodesics.size(); ++i) {
        auto& g = inv.geodesics[i];
        std::snprintf(buf, sizeof buf, "%s{\"name\":\"%s\",\"from\":\"%s\",\"to\":\"%s\",\"angle\":%.17g,\"s\":%.17g}",
                      i ? "," : "", g.name.c_str(), to_string(g.from), to_string(g.to), g.angle, g.s);
        s += buf;
    }
    s += "],\"loops\":[";
    for (std::size_t i = 0; i < inv.loops.size(); ++i) {
        auto& l = inv.loops[i];
        std::snprintf(buf, sizeof buf, "%s{\"name\":\"%s\",\"base\":\"%s\",\"pole\":\"%s\",\"angle\":%.17g,\"s\":%.17g}",
                      i ? "," : "", l.name.c_str(), to_string(l.base), pole_name(l.pole).c_str(), l.angle, l.s);
        s += buf;
    }
    std::snprintf(buf, sizeof buf, "],\"counts\":[%d,%d]}", inv.n_geodesics(), inv.n_loops());
    s += buf;
    return s;
}

std::string diagram_svg(const StripDiagram& d) {
    // w-plane window covering 0, 1, both marked points and the u-markers.
    double xmin = std::min({0.0, d.x2, d.x2prime, d.u1}) - 0.5;
    double xmax = std::max({1.0, d.x2, d.x2prime, d.u4}) + 0.5;
    double ymin = -0.25 * d.h, ymax = 1.35 * d.h;
    const double W = 900, Hpx = 360;
    auto X = [&](double x) { return (x - xmin) / (xmax - xmin) * W; };
    auto Y = [&](double y) { return Hpx - (y - ymin) / (ymax - ymin) * Hpx; };
    std::string s;
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n"
                  "<rect width=\"100%%\" height=\"100%%\" fill=\"white\"/>\n",
                  W, Hpx, W, Hpx);
    s += buf;
    auto line = [&](double x0, double y0, double x1, double y1, const char* color, double w, const char* dash) {
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"%s\" stroke-width=\"%.1f\"%s/>\n",
                      X(x0), Y(y0), X(x1), Y(y1), color, w, dash);
        s += buf;
    };
    auto label = [&](double x, double y, const char* text, const char* color) {
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.3f\" y=\"%.3f\" font-family=\"sans-serif\" font-size=\"12\" fill=\"%s\">%s</text>\n",
                      X(x) + 4, Y(y) - 4, color, text);
        s += buf;
    };
    auto dot = [&](double x, double y, const char* color) {
        std::snprintf(buf, sizeof buf, "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"4\" fill=\"%s\"/>\n", X(x), Y(y), color);
        s += buf;
    };
    // Strip boundaries: Im w = 0, h1, h. Identified edges share a color.
    line(xmin, 0, 0, 0, "#1f77b4", 2, "");
    line(1, 0, xmax, 0, "#1f77b4", 2, "");
    line(0, 0, 1, 0, "#d62728", 3, "");
    line(xmin, d.h1, d.x2, d.h1, "#2ca02c", 2, "");
    line(d.x2, d.h1, xmax, d.h1, "#2ca02c", 1, " stroke-dasharray=\"4 3\"");
    line(xmin, d.h, d.x2prime, d.h, "#9467bd", 2, "");
    line(d.x2prime, d.h, xmax, d.h, "#9467bd", 2, "");
    // Lines through 0 and 1 parallel to W1 and W1 - 1, cut at height h.
    line(0, 0, d.u3, d.h, "#7f7f7f", 1, " stroke-dasharray=\"2 2\"");
    line(1, 0, d.u4, d.h, "#7f7f7f", 1, " stroke-dasharray=\"2 2\"");
    line(0, 0, d.u1, d.h, "#7f7f7f", 1, " stroke-dasharray=\"2 2\"");
    line(1, 0, d.u2, d.h, "#7f7f7f", 1, " stroke-dasharray=\"2 2\"");
    // Short geodesic images.
    line(0, 0, d.x2, d.h1, "#ff7f0e", 1.5, "");
    line(1, 0, d.x2, d.h1, "#ff7f0e", 1.5, "");
    if (d.subcase != Subcase::f) line(0, 0, d.x2prime, d.h, "#8c564b", 1.5, "");
    if (d.subcase != Subcase::d) line(1, 0, d.x2prime, d.h, "#8c564b", 1.5, "");
    dot(0, 0, "black");
    dot(1, 0, "black");
    dot(d.x2, d.h1, "#2ca02c");
    dot(d.x2prime, d.h, "#9467bd");
    label(0, 0, "x1", "black");
    label(1, 0, "x1'", "black");
    label(d.x2, d.h1, "x2+ih1", "#2ca02c");
    label(d.x2prime, d.h, "x2'+ih", "#9467bd");
    const double us[4] = {d.u1, d.u2, d.u3, d.u4};
    for (int k = 0; k < 4; ++k) {
        dot(us[k], d.h, "#7f7f7f");
        std::snprintf(buf, sizeof buf, "u%d", k + 1);
        std::string t = buf;
        label(us[k], d.h + 0.08 * d.h, t.c_str(), "#7f7f7f");
    }
    std::snprintf(buf, sizeof buf,
                  "<text x=\"10\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">subcase %s%s%s</text>\n",
                  to_string(d.subcase), d.boundary_marker ? " (boundary)" : "", d.mirrored ? " mirrored" : "");
    s += buf;
    s += "</svg>\n";
    return s;
}

}  // namespace jqd
