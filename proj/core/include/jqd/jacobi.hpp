#pragma once

#include <vector>

#include "jqd/polynomial.hpp"
#include "jqd/roots.hpp"

namespace jqd {

struct JacobiParams {
    int n = 0;
    cx alpha = 0.0;
    cx beta = 0.0;
};

// alpha_n = A n + alpha0, beta_n = B n + beta0.
struct ParamSequence {
    cx A = 0.0;
    cx B = 0.0;
    cx alpha0 = 0.0;
    cx beta0 = 0.0;

    JacobiParams at(int n) const { return {n, A * double(n) + alpha0, B * double(n) + beta0}; }
};

// Binomial C(g, k) for complex g as prod_{j<k} (g - j) / (j + 1).
cx complex_binomial(cx g, int k);

// Explicit binomial sum in 400-digit arithmetic. If the leading coefficient
// vanishes (|lead| < 1e-30 max|a|) it is dropped and degree_drop() is set.
ComplexPolynomial jacobi_poly(const JacobiParams& params);

// Eigenvalue n (n + alpha + beta + 1) of the Jacobi operator.
cx jacobi_lambda(const JacobiParams& params);

// Max relative deviation from the Leibniz-expanded Rodrigues formula on grid.
// Requires n <= 12; rejects grid points at +-1.
double jacobi_rodrigues_check(const JacobiParams& params, const std::vector<cx>& grid);

// max |(1-z^2) y'' + (beta - alpha - (alpha+beta+2) z) y' + lambda y|
//     / ((1+|z|)^n max|a_k| (1+|lambda|)).
double ode_residual(const JacobiParams& params, const ComplexPolynomial& poly,
                    const std::vector<cx>& grid);

std::vector<RootCountingMeasure> root_cloud_sequence(const ParamSequence& seq,
                                                     const std::vector<int>& degrees,
                                                     double tol = 1e-10);

// Symmetric Hausdorff distance between two root sets.
double derivative_measure_distance(const RootCountingMeasure& mu_p,
                                   const RootCountingMeasure& mu_pprime);

}  // namespace jqd
