#pragma once

#include <string>
#include <vector>

#include "jqd/polynomial.hpp"
#include "jqd/rational_qd.hpp"
#include "jqd/tracer.hpp"

namespace jqd {

// P C^2 + Q C + R = 0 with deg P = n + 2, deg Q <= n + 1, deg R <= n.
struct QuadraticCauchyEquation {
    QuadraticCauchyEquation(ComplexPolynomial P, ComplexPolynomial Q, ComplexPolynomial R);

    ComplexPolynomial P, Q, R;
    int n = 0;
};

// (1 - z^2) C^2 - ((A+B) z + A - B) C + (A + B + 1) = 0
QuadraticCauchyEquation jacobi_limit_equation(cx A, cx B);

// Q^2 - 4 P R
ComplexPolynomial discriminant(const QuadraticCauchyEquation& eq);

// (4 P R - Q^2) / P^2 dz^2 with common roots cancelled.
RationalQD theta_differential(const QuadraticCauchyEquation& eq);

struct BranchPointReport {
    std::vector<cx> points;
    bool infinity_branch = false;
    int infinity_multiplicity = 0;   // 2n + 2 - deg D
    bool discriminant_zero = false;  // D vanishes identically
    // min over roots r of P of |Q(r)| / (max|q| max(1,|r|)^deg Q); 0 when Q = 0
    double coprimality_measure = 0;
    bool not_coprime_warning = false;
};

BranchPointReport branch_points(const QuadraticCauchyEquation& eq, double tol = 1e-10);

struct PoleResidue {
    cx pole;
    cx residue;
};

// Residues of -Q/P at the simple roots of P; throws higher_order_pole.
std::vector<PoleResidue> pole_residues(const QuadraticCauchyEquation& eq, double tol = 1e-8);

struct SufficiencyReport {
    bool simple_poles = false;
    bool residues_real = false;
    bool asymptotic_real_branch = false;
    double max_residue_imag = 0;     // NaN-free only when simple_poles
    double min_alpha_imag = 0;       // over the two branches C ~ alpha / z
    cx alpha[2];
    BranchPointReport branching;
};

SufficiencyReport sufficiency_report(const QuadraticCauchyEquation& eq, double tol = 1e-9);

struct Dk0Edge {
    int a = -1, b = -1;  // indices into Dk0Report::vertices
    double q_length = 0;
};

struct Dk0Report {
    std::vector<cx> vertices;          // distinct zeros of D
    std::vector<int> multiplicity;
    std::vector<Dk0Edge> edges;        // finite critical trajectories between zeros of D
    std::vector<bool> touched;         // vertex has an incident trajectory edge (loops count)
    bool all_touched = false;
    // A subgraph covering every vertex without isolated vertices exists, i.e.
    // every vertex has an edge to a different vertex (one vertex: trivially true).
    bool spanning = false;
    int truncated_arcs = 0;            // per-arc timeouts, reported only
    int n_arcs = 0;
};

Dk0Report dk0_connectivity(const QuadraticCauchyEquation& eq, const TraceOptions& opt = {});

std::string dk0_json(const Dk0Report& r);

}  // namespace jqd
