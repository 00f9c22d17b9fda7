#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "jqd/jacobi.hpp"
#include "jqd/limitfield.hpp"
#include "jqd/tracer.hpp"
#include "topology.hpp"

using namespace jqd;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

int vertex_of(const CriticalGraph& g, cx z) {
    for (size_t i = 0; i < g.vertices.size(); ++i)
        if (std::abs(g.vertices[i].z - z) < 1e-9) return int(i);
    return -1;
}

std::vector<const GraphEdge*> edges_between(const CriticalGraph& g, int a, int b) {
    std::vector<const GraphEdge*> out;
    for (auto& e : g.edges)
        if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) out.push_back(&e);
    return out;
}

// Real-axis crossings of a polyline (linear interpolation).
std::vector<double> real_crossings(const std::vector<cx>& pts) {
    std::vector<double> xs;
    for (size_t i = 1; i < pts.size(); ++i) {
        double y0 = pts[i - 1].imag(), y1 = pts[i].imag();
        if ((y0 < 0) != (y1 < 0)) {
            double t = y0 / (y0 - y1);
            xs.push_back(pts[i - 1].real() + t * (pts[i].real() - pts[i - 1].real()));
        }
    }
    return xs;
}

}  // namespace

TEST_CASE("rational differential in factored form") {
    auto q = RationalQD::from_normalized({0.5, -0.5});
    CHECK(q.critical_points().size() == 4);
    cx z(0.3, 0.7);
    cx want = -(z - 0.5) * (z + 0.5) / ((z - 1.0) * (z - 1.0) * (z + 1.0) * (z + 1.0));
    CHECK(std::abs(q(z) - want) < 1e-14);
    auto r = q.rotated(1.0);
    CHECK(std::abs(r(z) - std::polar(1.0, -1.0) * want) < 1e-14);

    RationalQD c(ComplexPolynomial::from_roots({0.2, 3.0}), ComplexPolynomial::from_roots({0.2, -1.0, -1.0}));
    int zeros = 0, poles = 0;
    for (auto& cp : c.critical_points()) (cp.is_zero() ? zeros : poles) += 1;
    CHECK(zeros == 1);
    CHECK(poles == 1);
}

TEST_CASE("direction field") {
    auto q = RationalQD::from_normalized({0.5, -0.5});
    cx d = direction_field(q, 0.0, 1.0);
    CHECK(std::abs(std::abs(d.real()) - 1.0) < 1e-14);
    cx e = direction_field(q, 0.0, -1.0);
    CHECK(std::abs(e + 1.0) < 1e-14);

    auto angles = ray_angles(q, 0);
    CHECK(angles.size() == 3);
}

TEST_CASE("interior three-circle case has the real segment edge") {
    NormalizedQD qd{0.5, -0.5};
    auto g = trace_critical(qd);
    int a = vertex_of(g, 0.5), b = vertex_of(g, -0.5);
    auto es = edges_between(g, a, b);
    REQUIRE(es.size() == 1);
    CHECK(std::isfinite(es[0]->q_length));
    CHECK(es[0]->q_length > 0);
    for (int arc : es[0]->arcs)
        for (cx p : g.arcs[arc].points) CHECK(std::abs(p.imag()) < 1e-6);
}

TEST_CASE("conjugate zeros are joined by three edges") {
    NormalizedQD qd{cx(0, 1), cx(0, -1)};
    auto g = trace_critical(qd);
    auto es = edges_between(g, vertex_of(g, cx(0, 1)), vertex_of(g, cx(0, -1)));
    REQUIRE(es.size() == 3);
    std::vector<double> xs;
    for (auto* e : es) {
        auto c = real_crossings(g.arcs[e->arcs[0]].points);
        REQUIRE(c.size() == 1);
        xs.push_back(c[0]);
    }
    std::sort(xs.begin(), xs.end());
    CHECK(xs[0] < -1);
    CHECK(std::abs(xs[1]) < 1);
    CHECK(xs[2] > 1);
}

TEST_CASE("two-strip anchor graph matches the classifier pattern") {
    NormalizedQD qd{cx(0, 2), cx(-0.5, 0.5)};
    auto c = topo::concordance(qd);
    INFO(c.detail);
    CHECK(c.match);
}

TEST_CASE("concordance on constructed special configurations") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(-3, 3);
    int tried = 0, ok = 0;
    auto run = [&](cx p1, cx p2) {
        auto c = topo::concordance({p1, p2});
        if (c.detail == "degenerate") return;
        ++tried;
        ok += c.match;
        INFO(c.detail);
        CHECK(c.match);
    };
    run(0.5, -0.5);
    run(3.0, 2.0);
    run(-2.0, -3.5);
    run(cx(0.4, 1.3), cx(0.4, -1.3));
    for (int i = 0; i < 6; ++i) {
        cx p1(U(rng), std::abs(U(rng)) + 0.1);
        double s1 = sigma_of(p1), a = s1 / 2, b = std::sqrt(a * a - 1), th = U(rng);
        run(p1, cx(a * std::cos(th), b * std::sin(th)));
        double d1 = delta_of(p1), ha = std::abs(d1) / 2, hb = std::sqrt(1 - ha * ha), u = U(rng) / 2;
        run(p1, cx(-(d1 > 0 ? 1 : -1) * ha * std::cosh(u), hb * std::sinh(u)));
        int sg = i % 2 ? 1 : -1;
        run(p1, double(sg) + (std::abs(U(rng)) * 2 + 0.05) / (p1 - double(sg)));
    }
    CHECK(tried >= 20);
}

TEST_CASE("trajectory condition along accepted arcs") {
    NormalizedQD qd{cx(0.3, 1.1), cx(-1.4, -0.6)};
    auto g = trace_critical(qd);
    for (auto& a : g.arcs) {
        if (a.end.kind == EndKind::truncated) continue;
        CHECK(std::abs(a.im_drift) <= 1e-6 * std::max(1.0, a.q_length));
    }
}

TEST_CASE("Q-length of a closed trajectory around infinity") {
    auto q = RationalQD::from_normalized({0.5, -0.5});
    cx z0(0, 6);
    auto arc = trace_arc(q, z0, direction_field(q, z0, 1.0), -1);
    CHECK(arc.end.kind == EndKind::closed);
    CHECK(q_length(q, arc) == doctest::Approx(kTwoPi).epsilon(1e-3));

    TrajectoryArc empty;
    empty.points = {z0, z0};
    CHECK(q_length(q, empty) == 0.0);
}

TEST_CASE("closed trajectory probe") {
    auto circ = RationalQD::from_normalized({0.5, -0.5});
    auto r1 = closed_trajectory_probe(circ, {cx(0, 3)}, 50);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].closed_candidate);
    CHECK(r1[0].period == doctest::Approx(kTwoPi).epsilon(1e-3));

    auto strip = RationalQD::from_normalized({cx(0, 2), cx(-0.5, 0.5)});
    CHECK_FALSE(closed_trajectory_probe(strip, {cx(1.05, 0.05)}, 50)[0].closed_candidate);

    auto rot = circ.rotated(1.0);
    CHECK_FALSE(closed_trajectory_probe(rot, {cx(0, 3)}, 50)[0].closed_candidate);
}

TEST_CASE("support distance") {
    CriticalGraph seg;
    TrajectoryArc a;
    for (int k = 0; k <= 200; ++k) a.points.push_back(-1.0 + 0.01 * k);
    seg.arcs.push_back(a);
    auto legendre = find_roots(jacobi_poly({60, 0.0, 0.0}));
    CHECK(support_distance(legendre, seg).max <= 1e-2);

    CHECK_THROWS(support_distance(legendre, CriticalGraph{}));

    auto t2 = limit_differential(LimitParams(1.0, 1.0));
    auto g = trace_critical(t2.qd);
    auto mu = find_roots(jacobi_poly({60, 60.0, 60.0}));
    CHECK(support_distance(mu, g).p95 <= 0.05);
}

TEST_CASE("graph CSV") {
    auto g = trace_critical(NormalizedQD{0.5, -0.5});
    auto csv = graph_csv(g);
    CHECK(csv.rfind("arc,re,im", 0) == 0);
}
