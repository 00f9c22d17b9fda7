#pragma once

#include <string>
#include <vector>

#include "jqd/qdclass.hpp"

namespace jqd {

// Sheet choices for the elementary antiderivative. Each sign picks the
// radical branch (+1 principal), each k adds 2 pi i k to the matching log.
struct BranchContext {
    int r1 = 1, r2 = 1;          // sqrt(z - p1), sqrt(z - p2)
    int m1 = 1, m2 = 1;          // sqrt(p1 - 1), sqrt(p2 - 1)
    int q1 = 1, q2 = 1;          // sqrt(p1 + 1), sqrt(p2 + 1)
    int k_zm1 = 0, k_zp1 = 0, k_sum = 0, k_plus = 0, k_minus = 0;
    bool debug_check = false;    // validate dPhi/dz against sqrt(Q)/(2 pi)
};

// Antiderivative of sqrt(Q)/(2 pi) with sqrt(Q) = -i r1 r2 / (z^2 - 1) on the
// chosen sheets. Throws critical_point at p1, p2, +-1 (except p1, p2 exactly
// where the formula has a finite limit) and branch when debug_check fails.
cx phi(const NormalizedQD& qd, cx z, const BranchContext& ctx = {});

// The sqrt(Q) branch that phi differentiates to.
cx phi_sqrt_q(const NormalizedQD& qd, cx z, const BranchContext& ctx = {});

// Limit of phi at p1 (r1 -> 0), same sheets.
cx phi_at_p1(const NormalizedQD& qd, const BranchContext& ctx = {});

// 1/2 + 1/4 (sqrt C1 - sqrt Cm1), upper branches.
cx F_p2_closed_form(const NormalizedQD& qd);

struct QuadratureResult {
    cx value;
    double error_estimate = 0;
};

// Integral of sqrt(Q)/(2 pi) along the polyline z_from -> waypoints -> z_to,
// branch continued along the path starting from -i sqrt(z-p1) sqrt(z-p2)/(z^2-1).
// Interior points must keep >= 1e-3 from p1, p2, +-1 (path_too_close otherwise).
QuadratureResult F_numeric(const NormalizedQD& qd, cx z_from, cx z_to,
                           const std::vector<cx>& waypoints = {}, double tol = 1e-12);

// Periods: 1, sqrt(C1)/2, sqrt(Cm1)/2.
struct LatticeMatch {
    int k1 = 0, kp = 0, km = 0;
    double deviation = 0;  // |delta - lattice point|
};
LatticeMatch lattice_reduce(const NormalizedQD& qd, cx delta, int kmax = 3);

enum class Subcase { a, b, c, d, e, f, g, h, i };
const char* to_string(Subcase s);
char letter(Subcase s);

struct StripDiagram {
    double x2 = 0, h1 = 0, x2prime = 0, h = 0;
    double u1 = 0, u2 = 0, u3 = 0, u4 = 0;
    Subcase subcase = Subcase::a;
    bool boundary_marker = false;
    bool mirrored = false;  // b3 input, computed for z -> -z
};

inline constexpr double kSubcaseTol = 1e-9;

// Requires a two-strip configuration (not_two_strip otherwise).
StripDiagram strip_diagram(const NormalizedQD& qd);

struct SubcaseResult {
    Subcase subcase = Subcase::a;
    bool boundary_marker = false;
};
SubcaseResult subcase_by_inequalities(const NormalizedQD& qd);

struct InventoryGeodesic {
    std::string name;
    ZeroLabel from = ZeroLabel::p1, to = ZeroLabel::p2;
    double angle = 0;  // [0, pi)
    double s = 0;      // 2 angle mod 2 pi
};

struct InventoryLoop {
    std::string name;
    ZeroLabel base = ZeroLabel::p1;
    int pole = 0;      // 0 stands for infinity
    double angle = 0;
    double s = 0;
};

struct GeodesicInventory {
    Variant variant = Variant::Degenerate;
    bool has_subcase = false;
    Subcase subcase = Subcase::a;
    bool boundary_marker = false;
    std::vector<InventoryGeodesic> geodesics;
    std::vector<InventoryLoop> loops;
    int n_geodesics() const { return int(geodesics.size()); }
    int n_loops() const { return int(loops.size()); }
};

GeodesicInventory geodesic_inventory(const NormalizedQD& qd);

struct ShortSValue {
    double s = 0;
    std::vector<std::string> kinds;  // sorted, unique: short_trajectory, trajectory_loop(+1|-1|inf)
    int multiplicity = 0;            // arcs realized at this s
};

// Distinct s values (1e-9, circular) in ascending order.
std::vector<ShortSValue> short_s_values(const NormalizedQD& qd);

std::string inventory_json(const GeodesicInventory& inv);
std::string diagram_svg(const StripDiagram& d);

// Angle folded into [0, pi) and s = 2 angle folded into [0, 2 pi).
double fold_angle(double a);
double fold_s(double s);

}  // namespace jqd
