#include "jqd/qdclass.hpp"

#include <cmath>
#include <numbers>

#include "jqd/errors.hpp"

namespace jqd {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_real(cx p) { return std::abs(p.imag()) <= kGenericTol * (1 + std::abs(p)); }

struct Decision {
    bool value;
    bool marginal;  // decided by a nonzero gap inside the tolerance
};

Decision positive_real(cx c) {
    double a = std::abs(std::arg(c));
    return {a <= kRegionTol, a <= kRegionTol && a != 0.0};
}

Spiral spiral_of(cx c) {
    double a = std::arg(c);
    if (std::abs(a) <= kRegionTol) return Spiral::circle;
    if (std::abs(a) >= kPi - kRegionTol) return Spiral::radial;
    return a > 0 ? Spiral::cw : Spiral::ccw;
}

ZeroLabel other(ZeroLabel z) { return z == ZeroLabel::p1 ? ZeroLabel::p2 : ZeroLabel::p1; }

}  // namespace

const char* to_string(Spiral s) {
    switch (s) {
        case Spiral::circle: return "circle";
        case Spiral::radial: return "radial";
        case Spiral::ccw: return "ccw";
        case Spiral::cw: return "cw";
    }
    return "?";
}

const char* to_string(Region r) {
    switch (r) {
        case Region::E1_plus: return "E1+";
        case Region::E1_minus: return "E1-";
        case Region::Em1_plus: return "E-1+";
        case Region::Em1_minus: return "E-1-";
        case Region::L_plus: return "L+";
        case Region::L_minus: return "L-";
        case Region::H_plus: return "H+";
        case Region::H_minus: return "H-";
        case Region::conj_point: return "conj_p1";
        case Region::p1_point: return "p1";
    }
    return "?";
}

const char* to_string(Variant v) {
    switch (v) {
        case Variant::ThreeCircles_a: return "ThreeCircles_a";
        case Variant::ThreeCircles_b: return "ThreeCircles_b";
        case Variant::ThreeCircles_c: return "ThreeCircles_c";
        case Variant::TwoCircles: return "TwoCircles";
        case Variant::OneCircleOneStrip_a: return "OneCircleOneStrip_a";
        case Variant::OneCircleOneStrip_b1: return "OneCircleOneStrip_b1";
        case Variant::OneCircleTwoStrips: return "OneCircleTwoStrips";
        case Variant::Degenerate: return "Degenerate";
    }
    return "?";
}

const char* to_string(ZeroLabel z) { return z == ZeroLabel::p1 ? "p1" : "p2"; }

const char* to_string(DegenerateKind k) {
    switch (k) {
        case DegenerateKind::none: return "none";
        case DegenerateKind::p1_eq_p2_interior: return "p1_eq_p2_interior";
        case DegenerateKind::p1_eq_p2_real_outside: return "p1_eq_p2_real_outside";
        case DegenerateKind::p1_eq_p2_complex: return "p1_eq_p2_complex";
        case DegenerateKind::p2_at_pole: return "p2_at_pole";
        case DegenerateKind::both_at_poles_same: return "both_at_poles_same";
        case DegenerateKind::both_at_poles_opposite: return "both_at_poles_opposite";
    }
    return "?";
}

Genericity genericity(const NormalizedQD& qd) {
    Genericity g;
    g.p1_off_poles = std::abs(qd.p1 - 1.0) > kGenericTol && std::abs(qd.p1 + 1.0) > kGenericTol;
    g.p2_off_poles = std::abs(qd.p2 - 1.0) > kGenericTol && std::abs(qd.p2 + 1.0) > kGenericTol;
    g.distinct = std::abs(qd.p1 - qd.p2) > kGenericTol;
    return g;
}

cx upper_sqrt(cx c) {
    if (c.real() > 0 && std::abs(c.imag()) <= 1e-14 * c.real()) return std::sqrt(c.real());
    cx s = std::sqrt(c);
    if (s.imag() < 0) s = -s;
    return s;
}

std::pair<cx, cx> leading_coeffs(const NormalizedQD& qd) {
    auto g = genericity(qd);
    if (!g.p1_off_poles || !g.p2_off_poles)
        fail_input("degenerate", "a zero coincides with a pole");
    return {(qd.p1 - 1.0) * (qd.p2 - 1.0), (qd.p1 + 1.0) * (qd.p2 + 1.0)};
}

PoleLocalData heights(const NormalizedQD& qd) {
    auto [c1, cm1] = leading_coeffs(qd);
    PoleLocalData d;
    d.C1 = c1;
    d.Cm1 = cm1;
    d.hplus = 0.5 * upper_sqrt(c1).imag();
    d.hminus = 0.5 * upper_sqrt(cm1).imag();
    d.h1 = 0.5 * (d.hplus - d.hminus);
    d.h2 = d.hminus;
    d.h = 0.5 * (d.hplus + d.hminus);
    d.spiral_plus = spiral_of(c1);
    d.spiral_minus = spiral_of(cm1);
    return d;
}

std::pair<Spiral, Spiral> spiral_behavior(const NormalizedQD& qd) {
    auto [c1, cm1] = leading_coeffs(qd);
    return {spiral_of(c1), spiral_of(cm1)};
}

double sigma_of(cx z) { return std::abs(z - 1.0) + std::abs(z + 1.0); }
double delta_of(cx z) { return std::abs(z - 1.0) - std::abs(z + 1.0); }

RegionLabel region_of(cx p1, cx p2) {
    RegionLabel r;
    r.dsigma = sigma_of(p2) - sigma_of(p1);
    r.ddelta = delta_of(p2) - delta_of(p1);
    const double t = kRegionTol;
    cx c1 = (p1 - 1.0) * (p2 - 1.0), cm1 = (p1 + 1.0) * (p2 + 1.0);
    double a1 = std::abs(std::arg(c1)), am1 = std::abs(std::arg(cm1));
    r.on_l1_plus = a1 <= t;
    r.on_l1_minus = a1 >= kPi - t;
    r.on_lm1_plus = am1 <= t;
    r.on_lm1_minus = am1 >= kPi - t;

    double dc = std::abs(p2 - std::conj(p1)), dp = std::abs(p2 - p1);
    bool on_L = std::abs(r.dsigma) <= t, on_H = std::abs(r.ddelta) <= t;
    if (dp <= t) {
        r.region = Region::p1_point;
        r.boundary_marker = dp != 0;
    } else if (dc <= t || (on_L && on_H)) {
        r.region = Region::conj_point;
        r.boundary_marker = dc != 0;
    } else if (on_L) {
        r.region = r.ddelta < 0 ? Region::L_plus : Region::L_minus;
        r.boundary_marker = r.dsigma != 0;
    } else if (on_H) {
        r.region = r.dsigma < 0 ? Region::H_plus : Region::H_minus;
        r.boundary_marker = r.ddelta != 0;
    } else if (r.dsigma < 0) {
        r.region = r.ddelta < 0 ? Region::E1_plus : Region::Em1_plus;
    } else {
        r.region = r.ddelta < 0 ? Region::E1_minus : Region::Em1_minus;
    }
    return r;
}

std::optional<DegenerateInfo> detect_degenerate(const NormalizedQD& qd) {
    auto at = [](cx p, double pole) { return std::abs(p - pole) <= kGenericTol; };
    int pole1 = at(qd.p1, 1) ? 1 : at(qd.p1, -1) ? -1 : 0;
    int pole2 = at(qd.p2, 1) ? 1 : at(qd.p2, -1) ? -1 : 0;
    DegenerateInfo d;
    if (pole1 && pole2) {
        d.kind = pole1 == pole2 ? DegenerateKind::both_at_poles_same
                                : DegenerateKind::both_at_poles_opposite;
        d.pole = pole1 == pole2 ? pole1 : 0;
        return d;
    }
    if (pole1 || pole2) {
        d.kind = DegenerateKind::p2_at_pole;
        d.swapped = pole1 != 0;
        d.pole = pole1 ? pole1 : pole2;
        cx q = pole1 ? qd.p2 : qd.p1;
        if (!is_real(q)) d.p1_subkind = "complex";
        else d.p1_subkind = std::abs(q.real()) < 1 ? "real_interior" : "real_exterior";
        return d;
    }
    if (std::abs(qd.p1 - qd.p2) <= kGenericTol) {
        cx p = 0.5 * (qd.p1 + qd.p2);
        if (!is_real(p)) d.kind = DegenerateKind::p1_eq_p2_complex;
        else if (std::abs(p.real()) < 1) d.kind = DegenerateKind::p1_eq_p2_interior;
        else d.kind = DegenerateKind::p1_eq_p2_real_outside;
        return d;
    }
    return std::nullopt;
}

TopologicalType classify(const NormalizedQD& qd) {
    TopologicalType t;
    if (auto d = detect_degenerate(qd)) {
        t.variant = Variant::Degenerate;
        t.degenerate = *d;
        return t;
    }
    cx q1 = qd.p1, q2 = qd.p2;
    bool swapped = false, conjugated = false;
    const bool both_real = is_real(q1) && is_real(q2);

    if (both_real) {
        double a = q1.real(), b = q2.real();
        double c1 = (a - 1) * (b - 1), cm1 = (a + 1) * (b + 1);
        if (c1 > 0 && cm1 > 0) {
            t.variant = (std::abs(a) < 1 && std::abs(b) < 1) ? Variant::ThreeCircles_a
                                                             : Variant::ThreeCircles_b;
            return t;
        }
        if (c1 > 0 || cm1 > 0) {
            t.variant = Variant::TwoCircles;
            t.second_pole = c1 > 0 ? 1 : -1;
            double P = t.second_pole;
            double g = std::abs(a - P) - std::abs(b - P);
            t.zero_on_Dinf = g >= 0 ? ZeroLabel::p1 : ZeroLabel::p2;
            t.boundary_marker = std::abs(g) <= kRegionTol && g != 0;
            return t;
        }
        double hp = 0.5 * std::sqrt(-c1), hm = 0.5 * std::sqrt(-cm1);
        double gap = hp - hm;
        if (std::abs(gap) <= kRegionTol) {
            t.variant = Variant::OneCircleOneStrip_a;
            t.boundary_marker = gap != 0;
            t.pole_of_p1 = a > 0 ? 1 : -1;
            t.pole_of_p2 = -t.pole_of_p1;
            return t;
        }
        t.variant = Variant::OneCircleTwoStrips;
        t.b2 = gap > 0;
        t.strip_pole = t.b2 ? 1 : -1;
        t.single_target = -t.strip_pole;
        bool p1_beyond = (a - t.strip_pole) * t.strip_pole > 0;
        t.zero_on_Dinf = p1_beyond ? ZeroLabel::p1 : ZeroLabel::p2;
        t.single_source = other(t.zero_on_Dinf);
        return t;
    }

    if (is_real(q1)) { std::swap(q1, q2); swapped = true; }
    if (q1.imag() < 0) {
        if (q2.imag() > 0 && !is_real(q2)) {
            std::swap(q1, q2);
            swapped = !swapped;
        } else {
            q1 = std::conj(q1);
            q2 = std::conj(q2);
            conjugated = true;
        }
    }
    t.swapped = swapped;
    t.conjugated = conjugated;
    auto back = [&](ZeroLabel z) { return swapped ? other(z) : z; };

    cx c1 = (q1 - 1.0) * (q2 - 1.0), cm1 = (q1 + 1.0) * (q2 + 1.0);
    Decision pos1 = positive_real(c1), posm1 = positive_real(cm1);
    if (pos1.value && posm1.value) {
        t.variant = Variant::ThreeCircles_c;
        t.boundary_marker = pos1.marginal || posm1.marginal;
        return t;
    }
    if (pos1.value || posm1.value) {
        t.variant = Variant::TwoCircles;
        t.second_pole = pos1.value ? 1 : -1;
        double P = t.second_pole;
        double g = std::abs(q1 - P) - std::abs(q2 - P);
        t.zero_on_Dinf = back(g >= 0 ? ZeroLabel::p1 : ZeroLabel::p2);
        t.boundary_marker = pos1.marginal || posm1.marginal || (std::abs(g) <= kRegionTol && g != 0);
        return t;
    }

    RegionLabel r = region_of(q1, q2);
    t.boundary_marker = r.boundary_marker;
    switch (r.region) {
        case Region::L_plus:
        case Region::L_minus:
        case Region::conj_point:
        case Region::p1_point: {
            t.variant = Variant::OneCircleOneStrip_a;
            int pole2 = r.ddelta < 0 ? 1 : -1;
            if (swapped) { t.pole_of_p1 = pole2; t.pole_of_p2 = -pole2; }
            else { t.pole_of_p2 = pole2; t.pole_of_p1 = -pole2; }
            t.boundary_marker = true;
            if (r.region == Region::L_plus || r.region == Region::L_minus)
                t.boundary_marker = r.boundary_marker;
            return t;
        }
        case Region::H_plus:
        case Region::H_minus:
            t.variant = Variant::OneCircleOneStrip_b1;
            t.zero_on_Dinf = back(r.dsigma < 0 ? ZeroLabel::p1 : ZeroLabel::p2);
            return t;
        default: break;
    }
    PoleLocalData h = heights({q1, q2});
    t.variant = Variant::OneCircleTwoStrips;
    t.b2 = h.hplus > h.hminus;
    t.strip_pole = t.b2 ? 1 : -1;
    t.single_target = -t.strip_pole;
    bool inside = r.dsigma < 0;
    t.zero_on_Dinf = back(inside ? ZeroLabel::p1 : ZeroLabel::p2);
    t.single_source = back(inside ? ZeroLabel::p2 : ZeroLabel::p1);
    return t;
}

}  // namespace jqd
