#include "jqd/exsolve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "jqd/errors.hpp"
#include "jqd/roots.hpp"
#include "mp.hpp"

namespace jqd {

namespace {

using H = mp::Cx<mp::hp>;

// Coefficients of c_nn(lambda) = a lambda^2 + b lambda + c.
struct DiagQuadratic {
    cx a, b, c;
};

DiagQuadratic diag_quadratic(const OperatorPencil& T, int j) {
    double jj = j;
    return {T.Q0, jj * T.q11() + T.Q0 * T.p,
            jj * (jj - 1) * T.q22() + jj * T.p11() + T.Q0 * T.q};
}

std::pair<cx, cx> solve_quadratic(cx a, cx b, cx c) {
    cx d = std::sqrt(b * b - 4.0 * a * c);
    // Pick the sign that avoids cancellation, recover the other from the product.
    cx s = (std::real(std::conj(b) * d) >= 0) ? -(b + d) : -(b - d);
    if (s == cx{}) return {0.0, 0.0};
    cx r1 = s / (2.0 * a);
    cx r2 = 2.0 * c / s;
    return {r1, r2};
}

H refine_root(const DiagQuadratic& qd, cx guess) {
    H a = H::from(qd.a), b = H::from(qd.b), c = H::from(qd.c), x = H::from(guess);
    for (int it = 0; it < 8; ++it) {
        H f = (a * x + b) * x + c;
        H df = H(mp::hp(2)) * a * x + b;
        if (mp::norm2(df) == 0) break;
        x -= f / df;
    }
    return x;
}

}  // namespace

OperatorPencil::OperatorPencil(ComplexPolynomial Q2_, ComplexPolynomial Q1_, ComplexPolynomial P1_, cx Q0_,
                               cx p_, cx q_)
    : Q2(std::move(Q2_)), Q1(std::move(Q1_)), P1(std::move(P1_)), Q0(Q0_), p(p_), q(q_) {
    if (Q2.degree() > 2 || Q1.degree() > 1 || P1.degree() > 1)
        fail_input("degree", "pencil needs deg Q2 <= 2, deg Q1 <= 1, deg P1 <= 1");
    if (Q2.degree() < 2) fail_input("degenerate_pencil", "q22 must be nonzero");
    if (Q0 == cx{}) fail_input("degenerate_pencil", "Q0 must be nonzero");
}

OperatorPencil jacobi_pencil(cx alpha, cx beta) {
    return OperatorPencil(ComplexPolynomial({1.0, 0.0, -1.0}), ComplexPolynomial(),
                          ComplexPolynomial({beta - alpha, -(alpha + beta + 2.0)}), 1.0, 0.0, 0.0);
}

std::pair<cx, cx> CharacteristicPoly::roots() const {
    auto [r1, r2] = solve_quadratic(q00, q11, q22);
    // Deterministic order: by argument, then modulus.
    auto key = [](cx z) { return std::make_pair(std::arg(z), std::abs(z)); };
    if (key(r2) < key(r1)) std::swap(r1, r2);
    return {r1, r2};
}

CharacteristicPoly characteristic_poly(const OperatorPencil& T) { return {T.q22(), T.q11(), T.Q0}; }

GenericTypeReport generic_type_check(const OperatorPencil& T, double tol) {
    GenericTypeReport r;
    CharacteristicPoly cp = characteristic_poly(T);
    if (cp.q11 != cx{}) {
        r.rho_defined = true;
        r.rho = cp.q22 * cp.q00 / (cp.q11 * cp.q11);
    }
    auto [a1, a2] = cp.roots();
    double g = std::abs(std::arg(a1) - std::arg(a2));
    r.arg_gap = std::min(g, 2 * std::numbers::pi - g);
    r.generic = r.arg_gap > tol && std::abs(a1 - a2) > tol * std::max(1.0, std::abs(a1));
    return r;
}

cx diagonal_entry(const OperatorPencil& T, int j, cx lambda) {
    DiagQuadratic d = diag_quadratic(T, j);
    return (d.a * lambda + d.b) * lambda + d.c;
}

EigenvaluePair eigenvalues_for_degree(const OperatorPencil& T, int n) {
    if (n < 1) fail_input("degree", "eigenvalues need n >= 1");
    DiagQuadratic d = diag_quadratic(T, n);
    auto [l1, l2] = solve_quadratic(d.a, d.b, d.c);
    auto [a1, a2] = characteristic_poly(T).roots();
    double nn = n;
    if (std::abs(l1 / nn - a1) + std::abs(l2 / nn - a2) > std::abs(l2 / nn - a1) + std::abs(l1 / nn - a2))
        std::swap(l1, l2);
    EigenvaluePair e;
    e.lambda[0] = l1;
    e.lambda[1] = l2;
    e.scaled[0] = l1 / nn;
    e.scaled[1] = l2 / nn;
    e.coincident = std::abs(l1 - l2) <= 1e-12 * std::max(1.0, std::abs(l1));
    return e;
}

ComplexPolynomial eigenpolynomial(const OperatorPencil& T, int n, int which, double tol) {
    if (n < 0) fail_input("degree", "n must be nonnegative");
    if (which != 1 && which != 2) fail_input("which", "which must be 1 or 2");
    if (n == 0) {
        // Constant solution exists only when c_00 = Q0 (lambda^2 + p lambda + q) can vanish;
        // lambda is then a root of that quadratic, which always exists.
        return ComplexPolynomial({1.0});
    }
    EigenvaluePair ev = eigenvalues_for_degree(T, n);
    cx lam_d = ev.lambda[which - 1];
    H lam = ev.coincident ? H::from(lam_d) : refine_root(diag_quadratic(T, n), lam_d);

    auto hpc = [](cx z) { return H::from(z); };
    H q22 = hpc(T.q22()), q12 = hpc(T.q12()), q02 = hpc(T.q02());
    H q11 = hpc(T.q11()), q01 = hpc(T.q01()), p11 = hpc(T.p11()), p01 = hpc(T.p01());
    H Q0 = hpc(T.Q0), pp = hpc(T.p), qq = hpc(T.q);
    H c0 = Q0 * ((lam + pp) * lam + qq);
    H lam1 = q11 * lam + p11, lam0 = q01 * lam + p01;

    std::vector<H> a(n + 1);
    a[n] = H(1);
    for (int i = n - 1; i >= 0; --i) {
        mp::hp ii(i);
        H cii = H(ii * (ii - 1)) * q22 + H(ii) * lam1 + c0;
        // Scale of the terms forming c_ii, for the resonance test.
        double sc = std::abs(T.q22()) * i * i + std::abs(lam1.to_cx()) * i + std::abs(c0.to_cx()) +
                    std::abs(T.Q0) * std::norm(lam_d) + 1e-300;
        if (std::abs(cii.to_cx()) <= 1e-12 * sc)
            fail_numeric("resonant_index", "c_jj vanishes at j = " + std::to_string(i));
        mp::hp j1(i + 1);
        H rhs = (H(j1 * (j1 - 1)) * q12 + H(j1) * lam0) * a[i + 1];
        if (i + 2 <= n) {
            mp::hp j2(i + 2);
            rhs += H(j2 * (j2 - 1)) * q02 * a[i + 2];
        }
        a[i] = -(rhs / cii);
    }
    ComplexPolynomial y = make_hi_polynomial(std::move(a));
    std::vector<cx> probes = circle_probes(16, 1.5);
    double res = pencil_residual(T, lam.to_cx(), y, probes);
    if (res > tol)
        fail_numeric("residual", "eigenpolynomial residual " + std::to_string(res) + " exceeds tolerance");
    return y;
}

double pencil_residual(const OperatorPencil& T, cx lambda, const ComplexPolynomial& y,
                       const std::vector<cx>& probes) {
    ComplexPolynomial d1 = derivative(y), d2 = derivative(d1);
    double ymax = y.max_abs_coeff();
    double worst = 0;
    int n = std::max(0, y.degree());
    for (cx z : probes) {
        cx v = (T.Q2.is_zero() || d2.is_zero() ? cx{} : T.Q2(z) * d2(z)) +
               (d1.is_zero() ? cx{} : ((T.Q1.is_zero() ? cx{} : T.Q1(z) * lambda) +
                                       (T.P1.is_zero() ? cx{} : T.P1(z))) * d1(z)) +
               T.Q0 * ((lambda + T.p) * lambda + T.q) * y(z);
        double scale = std::pow(1.0 + std::abs(z), n) * ymax * std::pow(1.0 + std::abs(lambda), 2);
        worst = std::max(worst, std::abs(v) / scale);
    }
    return worst;
}

std::vector<GenCauchyRow> gen_cauchy_residual(const OperatorPencil& T, const std::vector<int>& n_list,
                                              const std::vector<cx>& probes, int which) {
    if (!generic_type_check(T).generic)
        fail_input("generic_type_required", "the characteristic roots share an argument");
    auto roots = characteristic_poly(T).roots();
    cx alpha = which == 1 ? roots.first : roots.second;
    cx gamma2 = -T.Q0 * alpha * alpha;
    std::vector<GenCauchyRow> rows;
    for (int n : n_list) {
        GenCauchyRow row;
        row.n = n;
        row.lambda = eigenvalues_for_degree(T, n).lambda[which - 1];
        ComplexPolynomial y = eigenpolynomial(T, n, which);
        RootCountingMeasure mu = find_roots(y);
        for (cx r : mu.roots) row.max_root_modulus = std::max(row.max_root_modulus, std::abs(r));
        std::vector<double> res;
        for (cx z : probes) {
            cx C = empirical_cauchy(mu, z);
            cx Q1z = T.Q1.is_zero() ? cx{} : T.Q1(z);
            res.push_back(std::abs((T.Q2(z) * C * C + alpha * Q1z * C + T.Q0 * alpha * alpha) / gamma2));
        }
        row.residual = make_stats(std::move(res));
        rows.push_back(row);
    }
    return rows;
}

std::string gen_cauchy_csv(const std::vector<GenCauchyRow>& rows) {
    std::string s = "n,lambda_re,lambda_im,max_root_modulus,median_residual\n";
    char buf[192];
    for (auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g\n", r.n, r.lambda.real(), r.lambda.imag(),
                      r.max_root_modulus, r.residual.median);
        s += buf;
    }
    return s;
}

}  // namespace jqd
