#include "jqd/jacobi.hpp"

#include <algorithm>
#include <cmath>

#include "jqd/errors.hpp"
#include "mp.hpp"

namespace jqd {

using mp::Cx;
using mp::hp;

cx complex_binomial(cx g, int k) {
    cx acc = 1.0;
    for (int j = 0; j < k; ++j) acc *= (g - double(j)) / double(j + 1);
    return acc;
}

namespace {

Cx<hp> hp_of(cx z) { return Cx<hp>::from(z); }

// C(g, 0..m) in hp.
std::vector<Cx<hp>> binomial_row(const Cx<hp>& g, int m) {
    std::vector<Cx<hp>> out(m + 1);
    out[0] = Cx<hp>(hp(1));
    for (int j = 0; j < m; ++j) {
        Cx<hp> f = g - Cx<hp>(hp(j));
        out[j + 1] = (hp(1) / hp(j + 1)) * (out[j] * f);
    }
    return out;
}

}  // namespace

ComplexPolynomial jacobi_poly(const JacobiParams& params) {
    const int n = params.n;
    if (n < 0) fail_input("degree", "jacobi degree must be >= 0");
    if (n == 0) return make_hi_polynomial({Cx<hp>(hp(1))});

    Cx<hp> a = hp_of(params.alpha), b = hp_of(params.beta);
    Cx<hp> na = Cx<hp>(hp(n)) + a, nb = Cx<hp>(hp(n)) + b;
    auto ca = binomial_row(na, n);  // C(n+alpha, j)
    auto cb = binomial_row(nb, n);  // C(n+beta, k)

    // U_n = c_n; U_k = c_k (z+1)^{n-k} + (z-1) U_{k+1}; result U_0 / 2^n.
    std::vector<Cx<hp>> U(n + 1), pw(n + 1);
    pw[0] = Cx<hp>(hp(1));  // (z+1)^0
    U[0] = ca[0] * cb[n];
    int deg_pw = 0, deg_u = 0;
    for (int k = n - 1; k >= 0; --k) {
        // pw <- pw * (z + 1)
        for (int j = deg_pw + 1; j >= 1; --j) pw[j] = pw[j] + pw[j - 1];
        ++deg_pw;
        // U <- U * (z - 1)
        for (int j = deg_u + 1; j >= 1; --j) U[j] = U[j - 1] - U[j];
        U[0] = -U[0];
        ++deg_u;
        Cx<hp> ck = ca[n - k] * cb[k];
        for (int j = 0; j <= deg_pw; ++j) U[j] += ck * pw[j];
    }
    hp scale = boost::multiprecision::ldexp(hp(1), -n);
    hp mx = 0;
    for (auto& u : U) {
        u = scale * u;
        mx = std::max(mx, mp::absc(u));
    }
    int top = n;
    while (top >= 0 && (mx == 0 || mp::absc(U[top]) < hp(1e-30) * mx)) --top;
    bool dropped = top < n;
    U.resize(top + 1);
    ComplexPolynomial p = make_hi_polynomial(std::move(U));
    if (dropped) p.mark_degree_drop(n);
    return p;
}

cx jacobi_lambda(const JacobiParams& params) {
    double n = params.n;
    return n * (n + params.alpha + params.beta + 1.0);
}

double jacobi_rodrigues_check(const JacobiParams& params, const std::vector<cx>& grid) {
    const int n = params.n;
    if (n > 12) fail_input("degree", "rodrigues check limited to n <= 12");
    for (cx z : grid)
        if (std::abs(z - 1.0) < 1e-14 || std::abs(z + 1.0) < 1e-14)
            fail_input("grid", "grid point at +-1 rejected");
    if (n == 0) return 0.0;
    ComplexPolynomial p = jacobi_poly(params);
    // d^n/dz^n [(1-z)^{a+n}(1+z)^{b+n}] / ((1-z)^a (1+z)^b), expanded by Leibniz.
    auto falling = [](cx g, int k) {
        cx acc = 1.0;
        for (int j = 0; j < k; ++j) acc *= g - double(j);
        return acc;
    };
    double nfact = std::tgamma(n + 1.0);
    cx pre = (n % 2 ? -1.0 : 1.0) / (std::ldexp(1.0, n) * nfact);
    double worst = 0;
    for (cx z : grid) {
        cx acc = 0.0;
        double mag = 0.0;
        for (int k = 0; k <= n; ++k) {
            cx t = complex_binomial(double(n), k).real() * (k % 2 ? -1.0 : 1.0) *
                   falling(params.alpha + double(n), k) * falling(params.beta + double(n), n - k) *
                   std::pow(1.0 - z, n - k) * std::pow(1.0 + z, k);
            acc += t;
            mag += std::abs(t);
        }
        cx r = pre * acc;
        cx v = evaluate(p, z);
        double den = std::max({std::abs(r), std::abs(v), 1e-12 * std::abs(pre) * mag, 1e-300});
        worst = std::max(worst, std::abs(v - r) / den);
    }
    return worst;
}

double ode_residual(const JacobiParams& params, const ComplexPolynomial& poly,
                    const std::vector<cx>& grid) {
    if (poly.is_zero()) return 0.0;
    const cx a = params.alpha, b = params.beta;
    const cx lam = jacobi_lambda(params);
    ComplexPolynomial d1 = derivative(poly), d2 = derivative(d1);
    double amax = poly.max_abs_coeff();
    double worst = 0;
    for (cx z : grid) {
        cx y = evaluate(poly, z);
        cx y1 = d1.is_zero() ? cx{} : evaluate(d1, z);
        cx y2 = d2.is_zero() ? cx{} : evaluate(d2, z);
        cx L = (1.0 - z * z) * y2 + (b - a - (a + b + 2.0) * z) * y1 + lam * y;
        double scale = std::pow(1 + std::abs(z), params.n) * amax * (1 + std::abs(lam));
        worst = std::max(worst, std::abs(L) / scale);
    }
    return worst;
}

std::vector<RootCountingMeasure> root_cloud_sequence(const ParamSequence& seq,
                                                     const std::vector<int>& degrees, double tol) {
    if (!std::is_sorted(degrees.begin(), degrees.end()))
        fail_input("degrees", "degrees must be ascending");
    std::vector<RootCountingMeasure> out;
    out.reserve(degrees.size());
    for (int n : degrees) {
        if (n < 1) fail_input("degree", "root clouds need degree >= 1");
        ComplexPolynomial p = jacobi_poly(seq.at(n));
        if (p.degree() < 1) fail_numeric("degenerate", "jacobi polynomial collapsed to a constant");
        out.push_back(find_roots(p, tol));
    }
    return out;
}

double derivative_measure_distance(const RootCountingMeasure& mu_p,
                                   const RootCountingMeasure& mu_pprime) {
    if (mu_p.n() == 0 || mu_pprime.n() == 0) fail_input("empty_measure", "empty root set");
    auto directed = [](const std::vector<cx>& A, const std::vector<cx>& B) {
        double h = 0;
        for (cx a : A) {
            double d = INFINITY;
            for (cx b : B) d = std::min(d, std::abs(a - b));
            h = std::max(h, d);
        }
        return h;
    };
    return std::max(directed(mu_p.roots, mu_pprime.roots), directed(mu_pprime.roots, mu_p.roots));
}

}  // namespace jqd
