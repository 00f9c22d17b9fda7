#pragma once

#include <optional>
#include <string>
#include <utility>

#include "jqd/polynomial.hpp"

namespace jqd {

// Q(z) dz^2 = -(z - p1)(z - p2) / ((z - 1)^2 (z + 1)^2) dz^2
struct NormalizedQD {
    cx p1;
    cx p2;
};

inline constexpr double kGenericTol = 1e-12;
inline constexpr double kRegionTol = 1e-9;

struct Genericity {
    bool p1_off_poles = true;
    bool p2_off_poles = true;
    bool distinct = true;
    bool generic() const { return p1_off_poles && p2_off_poles && distinct; }
};

Genericity genericity(const NormalizedQD& qd);

enum class Spiral { circle, radial, ccw, cw };
const char* to_string(Spiral s);

struct PoleLocalData {
    cx C1;
    cx Cm1;
    double hplus = 0;   // (1/2) Im sqrt(C1), branch with Im >= 0
    double hminus = 0;  // same for Cm1
    double h1 = 0;      // (hplus - hminus) / 2
    double h2 = 0;      // hminus
    double h = 0;       // (hplus + hminus) / 2
    Spiral spiral_plus = Spiral::circle;
    Spiral spiral_minus = Spiral::circle;
};

// Square root with Im >= 0 (positive reals map to positive reals).
cx upper_sqrt(cx c);

std::pair<cx, cx> leading_coeffs(const NormalizedQD& qd);
PoleLocalData heights(const NormalizedQD& qd);
std::pair<Spiral, Spiral> spiral_behavior(const NormalizedQD& qd);

// sigma(z) = |z-1| + |z+1|, delta(z) = |z-1| - |z+1|
double sigma_of(cx z);
double delta_of(cx z);

enum class Region {
    E1_plus,     // sigma < sigma1, delta < delta1
    E1_minus,    // sigma > sigma1, delta < delta1
    Em1_plus,    // sigma < sigma1, delta > delta1
    Em1_minus,   // sigma > sigma1, delta > delta1
    L_plus,      // on the ellipse, delta < delta1
    L_minus,     // on the ellipse, delta > delta1
    H_plus,      // on the hyperbola branch, sigma < sigma1
    H_minus,     // on the hyperbola branch, sigma > sigma1
    conj_point,  // p2 = conj(p1)
    p1_point,    // p2 = p1
};
const char* to_string(Region r);

struct RegionLabel {
    Region region = Region::E1_plus;
    bool boundary_marker = false;
    // Rays where C1 (resp. Cm1) is real; suffix gives the sign.
    bool on_l1_plus = false, on_l1_minus = false;
    bool on_lm1_plus = false, on_lm1_minus = false;
    double dsigma = 0;  // sigma(p2) - sigma(p1)
    double ddelta = 0;  // delta(p2) - delta(p1)
};

// Position of p2 relative to the ellipse/hyperbola through p1.
RegionLabel region_of(cx p1, cx p2);

enum class Variant {
    ThreeCircles_a,
    ThreeCircles_b,
    ThreeCircles_c,
    TwoCircles,
    OneCircleOneStrip_a,
    OneCircleOneStrip_b1,
    OneCircleTwoStrips,
    Degenerate,
};
const char* to_string(Variant v);

enum class ZeroLabel { p1, p2 };
const char* to_string(ZeroLabel z);

enum class DegenerateKind {
    none,
    p1_eq_p2_interior,
    p1_eq_p2_real_outside,
    p1_eq_p2_complex,
    p2_at_pole,
    both_at_poles_same,
    both_at_poles_opposite,
};
const char* to_string(DegenerateKind k);

struct DegenerateInfo {
    DegenerateKind kind = DegenerateKind::none;
    int pole = 0;             // p2_at_pole: which pole; both_at_poles_same: the pole
    bool swapped = false;     // input had p1 at the pole, roles exchanged
    std::string p1_subkind;   // p2_at_pole: real_interior | real_exterior | complex
};

struct TopologicalType {
    Variant variant = Variant::Degenerate;
    bool boundary_marker = false;

    int second_pole = 0;                   // TwoCircles: the circle pole besides infinity
    ZeroLabel zero_on_Dinf = ZeroLabel::p1;  // TwoCircles, TwoStrips, b1 (loop zero)
    int strip_pole = 0;                    // TwoStrips: pole of the strip G1 (b2 -> 1, b3 -> -1)
    bool b2 = true;                        // TwoStrips orientation
    ZeroLabel single_source = ZeroLabel::p2;  // TwoStrips: zero with a lone ray to single_target
    int single_target = 0;

    // OneCircleOneStrip_a: pole each zero's third ray reaches.
    int pole_of_p1 = 0;
    int pole_of_p2 = 0;

    DegenerateInfo degenerate;

    // Normalization applied before the region machinery.
    bool swapped = false;
    bool conjugated = false;
};

std::optional<DegenerateInfo> detect_degenerate(const NormalizedQD& qd);

TopologicalType classify(const NormalizedQD& qd);

}  // namespace jqd
