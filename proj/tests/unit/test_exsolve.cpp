#include <cmath>
#include <random>

#include "doctest.h"
#include "jqd/exsolve.hpp"
#include "jqd/jacobi.hpp"

using namespace jqd;

namespace {

using Poly = ComplexPolynomial;

cx rnd(std::mt19937_64& rng, double r = 1) {
    std::uniform_real_distribution<double> U(-r, r);
    return {U(rng), U(rng)};
}

OperatorPencil simple_pencil(cx q22, cx q11, cx q00) {
    return {Poly{0.0, 0.0, q22}, Poly{0.0, q11}, Poly{0.0, 1.0}, q00, 0.0, 0.0};
}

OperatorPencil random_generic_pencil(std::mt19937_64& rng) {
    for (;;) {
        OperatorPencil T(Poly{rnd(rng), rnd(rng), rnd(rng)}, Poly{rnd(rng), rnd(rng)}, Poly{rnd(rng), rnd(rng)},
                         rnd(rng), rnd(rng), rnd(rng));
        if (std::abs(T.Q0) < 0.5 || std::abs(T.q22()) < 0.5) continue;
        auto [a1, a2] = characteristic_poly(T).roots();
        if (std::abs(a1 - a2) < 0.5 || !generic_type_check(T).generic) continue;
        return T;
    }
}

Poly monic(const Poly& p) {
    std::vector<cx> c = p.coeffs();
    cx lead = c.back();
    for (auto& x : c) x /= lead;
    return Poly(c);
}

}  // namespace

TEST_CASE("pencil validation") {
    CHECK_THROWS(OperatorPencil(Poly{1.0, 0.0, 0.0, 1.0}, Poly{}, Poly{}, 1.0, 0.0, 0.0));
    CHECK_THROWS(OperatorPencil(Poly{1.0, 1.0}, Poly{}, Poly{}, 1.0, 0.0, 0.0));
    CHECK_THROWS(OperatorPencil(Poly{0.0, 0.0, 1.0}, Poly{}, Poly{}, 0.0, 0.0, 0.0));
    auto J = jacobi_pencil(0.5, 1.5);
    CHECK(J.q22() == cx(-1.0));
    CHECK(J.p11() == cx(-4.0));
    CHECK(J.p01() == cx(1.0));
    CHECK(J.Q0 == cx(1.0));
}

TEST_CASE("characteristic polynomial and generic type") {
    auto [a, b] = characteristic_poly(simple_pencil(1.0, 0.0, 1.0)).roots();
    CHECK(std::abs(std::abs(a) - 1.0) < 1e-14);
    CHECK(std::abs(a + b) < 1e-14);
    CHECK(std::abs(a.real()) < 1e-14);
    CHECK(generic_type_check(simple_pencil(1.0, 0.0, 1.0)).generic);

    auto dbl = simple_pencil(1.0, -2.0, 1.0);
    auto [c, d] = characteristic_poly(dbl).roots();
    CHECK(std::abs(c - 1.0) < 1e-7);
    CHECK(std::abs(d - 1.0) < 1e-7);
    CHECK_FALSE(generic_type_check(dbl).generic);

    auto r8 = generic_type_check(simple_pencil(1.0, std::sqrt(8.0), 1.0));
    CHECK_FALSE(r8.generic);
    CHECK(r8.rho_defined);
    CHECK(std::abs(r8.rho - 0.125) < 1e-14);
    CHECK_FALSE(generic_type_check(simple_pencil(1.0, std::sqrt(10.0), 1.0)).generic);

    auto q0 = generic_type_check(simple_pencil(2.0, 0.0, cx(0.5, 0.5)));
    CHECK(q0.generic);
    CHECK_FALSE(q0.rho_defined);
    CHECK(q0.arg_gap == doctest::Approx(std::numbers::pi));
}

TEST_CASE("degree-one eigenvalues solve the hand quadratic") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 10; ++t) {
        auto T = random_generic_pencil(rng);
        // c_11 = q11 lam + p11 + Q0 (lam^2 + p lam + q)
        cx A = T.Q0, B = T.q11() + T.Q0 * T.p, C = T.p11() + T.Q0 * T.q;
        cx disc = std::sqrt(B * B - 4.0 * A * C);
        cx r1 = (-B + disc) / (2.0 * A), r2 = (-B - disc) / (2.0 * A);
        auto ev = eigenvalues_for_degree(T, 1);
        double e1 = std::abs(ev.lambda[0] - r1) + std::abs(ev.lambda[1] - r2);
        double e2 = std::abs(ev.lambda[0] - r2) + std::abs(ev.lambda[1] - r1);
        CHECK(std::min(e1, e2) < 1e-12 * (1 + std::abs(r1) + std::abs(r2)));
        CHECK(std::abs(diagonal_entry(T, 1, r1)) < 1e-12 * (1 + std::norm(r1)));
    }
}

TEST_CASE("Vieta relation of the eigenvalue pair") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        auto T = random_generic_pencil(rng);
        for (int n : {1, 4, 17, 60}) {
            auto ev = eigenvalues_for_degree(T, n);
            cx constant = double(n) * (n - 1) * T.q22() + double(n) * T.p11() + T.Q0 * T.q;
            cx lhs = ev.lambda[0] * ev.lambda[1] * T.Q0;
            CHECK(std::abs(lhs - constant) <= 1e-10 * std::max(1.0, std::abs(constant)));
        }
    }
}

TEST_CASE("scaled eigenvalues approach the characteristic roots") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 3; ++t) {
        auto T = random_generic_pencil(rng);
        auto [a1, a2] = characteristic_poly(T).roots();
        double prev = 1e9;
        for (int n : {50, 100, 200}) {
            auto ev = eigenvalues_for_degree(T, n);
            double dev = std::max(std::abs(ev.scaled[0] - a1), std::abs(ev.scaled[1] - a2));
            CHECK(dev * n <= 5.0);
            CHECK(dev < prev);
            prev = dev;
        }
    }
}

TEST_CASE("eigenpolynomials") {
    auto J = jacobi_pencil(0.0, 0.0);
    auto y2 = eigenpolynomial(J, 2, 1);
    REQUIRE(y2.degree() == 2);
    CHECK(std::abs(y2[2] - 1.0) < 1e-14);
    CHECK(std::abs(y2[1]) < 1e-14);
    CHECK(std::abs(y2[0] + 1.0 / 3.0) < 1e-14);

    CHECK(eigenpolynomial(J, 0, 1).coeffs() == std::vector<cx>{1.0});

    std::mt19937_64 rng(1);
    auto T = random_generic_pencil(rng);
    std::vector<cx> probes = circle_probes(24, 1.5);
    for (int which : {1, 2}) {
        auto y = eigenpolynomial(T, 8, which);
        auto ev = eigenvalues_for_degree(T, 8);
        CHECK(pencil_residual(T, ev.lambda[which - 1], y, probes) <= 1e-8);
    }

    // Resonance: for the Jacobi pencil c_11 - c_33 = (3 - 1)(3 + 1 + alpha + beta + 1).
    CHECK_THROWS_WITH(eigenpolynomial(jacobi_pencil(-2.5, -2.5), 3, 1), doctest::Contains("resonant_index"));
}

TEST_CASE("Jacobi specialization matches jacobi_poly") {
    std::mt19937_64 rng(29);
    for (int n = 1; n <= 15; ++n) {
        cx a = rnd(rng, 2), b = rnd(rng, 2);
        auto y = eigenpolynomial(jacobi_pencil(a, b), n, 1);
        auto p = monic(jacobi_poly({n, a, b}));
        REQUIRE(y.degree() == n);
        double scale = p.max_abs_coeff();
        for (int k = 0; k <= n; ++k) CHECK(std::abs(y[k] - p[k]) <= 1e-9 * scale);
    }
}

TEST_CASE("generalized Cauchy residual") {
    auto probes = circle_probes(64, 2.0);
    auto J = jacobi_pencil(0.0, 0.0);
    auto rows = gen_cauchy_residual(J, {20, 40}, probes);
    REQUIRE(rows.size() == 2);
    for (auto& r : rows) {
        auto mu = find_roots(jacobi_poly({r.n, 0.0, 0.0}));
        auto ref = limit_equation_residual(LimitParams(0.0, 0.0), mu, probes);
        CHECK(std::abs(r.residual.median - ref.median) <= 1e-6);
        CHECK(r.max_root_modulus < 1.0);
    }
    CHECK(gen_cauchy_csv(rows).rfind("n,lambda_re,lambda_im,max_root_modulus,median_residual", 0) == 0);

    CHECK_THROWS_WITH(gen_cauchy_residual(simple_pencil(1.0, -2.0, 1.0), {10}, probes),
                      doctest::Contains("generic_type_required"));

    std::mt19937_64 rng(31);
    for (int t = 0; t < 3; ++t) {
        auto T = random_generic_pencil(rng);
        auto g = gen_cauchy_residual(T, {20, 40}, probes);
        INFO("medians " << g[0].residual.median << " " << g[1].residual.median);
        CHECK(g[1].residual.median <= 0.5 * g[0].residual.median);
    }
}
