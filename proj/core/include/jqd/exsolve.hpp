#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jqd/limitfield.hpp"
#include "jqd/polynomial.hpp"

namespace jqd {

// T_lambda = Q2 d^2/dz^2 + (Q1 lambda + P1) d/dz + (lambda^2 + p lambda + q) Q0
struct OperatorPencil {
    OperatorPencil(ComplexPolynomial Q2, ComplexPolynomial Q1, ComplexPolynomial P1, cx Q0, cx p, cx q);

    ComplexPolynomial Q2, Q1, P1;
    cx Q0, p, q;

    cx q22() const { return Q2[2]; }
    cx q12() const { return Q2[1]; }
    cx q02() const { return Q2[0]; }
    cx q11() const { return Q1[1]; }
    cx q01() const { return Q1[0]; }
    cx p11() const { return P1[1]; }
    cx p01() const { return P1[0]; }
};

// Q2 = 1 - z^2, Q1 = 0, P1 = (beta - alpha) - (alpha + beta + 2) z, Q0 = 1, p = q = 0,
// so lambda^2 = n (n + alpha + beta + 1).
OperatorPencil jacobi_pencil(cx alpha, cx beta);

struct CharacteristicPoly {
    cx q22, q11, q00;                // q22 + q11 t + q00 t^2
    std::pair<cx, cx> roots() const; // alpha_1, alpha_2
};
CharacteristicPoly characteristic_poly(const OperatorPencil& T);

struct GenericTypeReport {
    bool generic = false;
    bool rho_defined = false;  // q11 != 0
    cx rho;                    // q22 q00 / q11^2
    double arg_gap = 0;        // |arg alpha_1 - arg alpha_2| folded into [0, pi]
};
GenericTypeReport generic_type_check(const OperatorPencil& T, double tol = 1e-12);

// Diagonal entry of T_lambda on z^j: j(j-1) q22 + j (q11 lambda + p11) + Q0 (lambda^2 + p lambda + q).
cx diagonal_entry(const OperatorPencil& T, int j, cx lambda);

struct EigenvaluePair {
    cx lambda[2];       // ordered so lambda[i]/n approaches alpha_{i+1}
    cx scaled[2];       // lambda / n
    bool coincident = false;
};
EigenvaluePair eigenvalues_for_degree(const OperatorPencil& T, int n);

// Monic degree-n solution of T_lambda y = 0 with lambda = lambda_{which,n};
// throws resonant_index when some c_jj (j < n) vanishes.
ComplexPolynomial eigenpolynomial(const OperatorPencil& T, int n, int which, double tol = 1e-10);

// |T_lambda y| / ((1+|z|)^n max|y| (1 + |lambda|)^2) on the probes.
double pencil_residual(const OperatorPencil& T, cx lambda, const ComplexPolynomial& y,
                       const std::vector<cx>& probes);

struct GenCauchyRow {
    int n = 0;
    cx lambda;
    double max_root_modulus = 0;
    ResidualStats residual;
};

// Residual of Q2 C^2 + alpha Q1 C + Q0 alpha^2, divided by gamma^2 = -Q0 alpha^2,
// with C the empirical Cauchy transform of the eigenpolynomial roots.
// Throws generic_type_required for non-generic pencils.
std::vector<GenCauchyRow> gen_cauchy_residual(const OperatorPencil& T, const std::vector<int>& n_list,
                                              const std::vector<cx>& probes, int which = 1);

std::string gen_cauchy_csv(const std::vector<GenCauchyRow>& rows);

}  // namespace jqd
