#pragma once

#include <array>
#include <vector>

#include "jqd/polynomial.hpp"
#include "jqd/qdclass.hpp"
#include "jqd/roots.hpp"

namespace jqd {

// Requires |1 + A + B| > 1e-12.
struct LimitParams {
    LimitParams(cx A, cx B);
    cx A;
    cx B;
};

struct BranchPair {
    cx first;   // the ~1/z branch (smaller |z C - 1|)
    cx second;
    bool coincident = false;        // discriminant vanishes at z
    bool branch_vicinity = false;   // within 1e-6 of a discriminant zero; order unreliable
};

// Roots of (1 - z^2) C^2 - ((A+B) z + A - B) C + (A + B + 1) = 0.
BranchPair limit_cauchy_branches(const LimitParams& lp, cx z);

// [(A-B)^2 - 4(A+B+1), 2(A^2-B^2), (A+B+2)^2], untrimmed.
std::array<cx, 3> limit_discriminant_coeffs(const LimitParams& lp);
ComplexPolynomial limit_discriminant(const LimitParams& lp);

// -D(z) / ((z-1)^2 (z+1)^2) dz^2 divided by (A+B+2)^2. When A+B+2 = 0 the
// discriminant is at most linear and the degenerate form is returned instead.
struct LimitDifferential {
    bool degenerate = false;
    NormalizedQD qd{};        // valid when !degenerate
    cx scale = 0.0;           // (A+B+2)^2
    ComplexPolynomial numerator;  // -D(z), always filled
};
LimitDifferential limit_differential(const LimitParams& lp);

struct ResidualStats {
    double min = 0;
    double median = 0;
    double max = 0;
    int n_probes = 0;
};
ResidualStats make_stats(std::vector<double> values);

// |(1 - z^2) C^2 - ((A+B) z + A - B) C + (A+B+1)| with C the empirical Cauchy transform.
ResidualStats limit_equation_residual(const LimitParams& lp, const RootCountingMeasure& mu,
                            const std::vector<cx>& probes);

// Point-mass limits: |(z - kappa) C - 1|; kappa = 0 is the delta_0 case.
struct DegenerateLimit {
    cx kappa = 0.0;
    static DegenerateLimit delta0() { return {}; }
    static DegenerateLimit delta_kappa(cx k) { return {k}; }
};
ResidualStats degenerate_limit_check(const DegenerateLimit& kind, const RootCountingMeasure& mu,
                                     const std::vector<cx>& probes);

// n points on |z| = r, phase offset keeps them off the real axis.
std::vector<cx> circle_probes(int n, double r, double phase = 0.1);

}  // namespace jqd
