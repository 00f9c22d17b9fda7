#include "jqd/limitfield.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jqd/errors.hpp"

namespace jqd {

LimitParams::LimitParams(cx a, cx b) : A(a), B(b) {
    if (std::abs(1.0 + a + b) <= 1e-12) fail_input("limit_params", "1 + A + B must be nonzero");
}

std::array<cx, 3> limit_discriminant_coeffs(const LimitParams& lp) {
    cx A = lp.A, B = lp.B;
    return {(A - B) * (A - B) - 4.0 * (A + B + 1.0), 2.0 * (A * A - B * B),
            (A + B + 2.0) * (A + B + 2.0)};
}

ComplexPolynomial limit_discriminant(const LimitParams& lp) {
    auto c = limit_discriminant_coeffs(lp);
    return ComplexPolynomial({c[0], c[1], c[2]});
}

BranchPair limit_cauchy_branches(const LimitParams& lp, cx z) {
    if (std::abs(z - 1.0) < 1e-14 || std::abs(z + 1.0) < 1e-14)
        fail_input("pole", "z = +-1 is a pole of the limiting field");
    cx A = lp.A, B = lp.B;
    cx a = 1.0 - z * z, b = -((A + B) * z + A - B), c = A + B + 1.0;
    cx disc = b * b - 4.0 * a * c;
    cx s = std::sqrt(disc);
    // Stable quadratic formula: pick the sign avoiding cancellation.
    cx q = -0.5 * (b + (std::real(std::conj(b) * s) >= 0 ? s : -s));
    cx r1 = q / a, r2 = (q == cx{}) ? -b / (2.0 * a) : c / q;
    BranchPair bp;
    if (std::abs(z * r2 - 1.0) < std::abs(z * r1 - 1.0)) std::swap(r1, r2);
    bp.first = r1;
    bp.second = r2;
    double scale = std::abs(b * b) + std::abs(4.0 * a * c);
    bp.coincident = std::abs(disc) <= 1e-14 * std::max(scale, 1e-300);
    auto D = limit_discriminant_coeffs(lp);
    if (std::abs(D[2]) > 0) {
        ComplexPolynomial Dp({D[0], D[1], D[2]});
        for (cx zero : find_roots(Dp, 1e-8).roots)
            if (std::abs(z - zero) < 1e-6) bp.branch_vicinity = true;
    } else if (std::abs(D[1]) > 0) {
        if (std::abs(z + D[0] / D[1]) < 1e-6) bp.branch_vicinity = true;
    }
    return bp;
}

LimitDifferential limit_differential(const LimitParams& lp) {
    auto D = limit_discriminant_coeffs(lp);
    LimitDifferential t;
    t.scale = D[2];
    t.numerator = ComplexPolynomial({-D[0], -D[1], -D[2]});
    if (std::abs(D[2]) <= 1e-12) {
        t.degenerate = true;
        return t;
    }
    // Roots of D via the stable quadratic formula.
    cx a = D[2], b = D[1], c = D[0];
    cx s = std::sqrt(b * b - 4.0 * a * c);
    cx q = -0.5 * (b + (std::real(std::conj(b) * s) >= 0 ? s : -s));
    cx r1, r2;
    if (q == cx{}) { r1 = r2 = 0.0; }
    else { r1 = q / a; r2 = c / q; }
    // Deterministic labelling: larger imaginary part first, then larger real part.
    if (r2.imag() > r1.imag() || (r2.imag() == r1.imag() && r2.real() > r1.real())) std::swap(r1, r2);
    t.qd = {r1, r2};
    return t;
}

ResidualStats make_stats(std::vector<double> v) {
    ResidualStats s;
    s.n_probes = static_cast<int>(v.size());
    if (v.empty()) return s;
    std::sort(v.begin(), v.end());
    s.min = v.front();
    s.max = v.back();
    std::size_t m = v.size() / 2;
    s.median = v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
    return s;
}

ResidualStats limit_equation_residual(const LimitParams& lp, const RootCountingMeasure& mu,
                            const std::vector<cx>& probes) {
    std::vector<double> r;
    r.reserve(probes.size());
    cx A = lp.A, B = lp.B;
    for (cx z : probes) {
        cx C = empirical_cauchy(mu, z);
        r.push_back(std::abs((1.0 - z * z) * C * C - ((A + B) * z + A - B) * C + (A + B + 1.0)));
    }
    return make_stats(std::move(r));
}

ResidualStats degenerate_limit_check(const DegenerateLimit& kind, const RootCountingMeasure& mu,
                                     const std::vector<cx>& probes) {
    std::vector<double> r;
    r.reserve(probes.size());
    for (cx z : probes) r.push_back(std::abs((z - kind.kappa) * empirical_cauchy(mu, z) - 1.0));
    return make_stats(std::move(r));
}

std::vector<cx> circle_probes(int n, double r, double phase) {
    std::vector<cx> out(n);
    for (int k = 0; k < n; ++k) out[k] = std::polar(r, 2 * std::numbers::pi * k / n + phase);
    return out;
}

}  // namespace jqd
