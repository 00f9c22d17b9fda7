#include "jqd/motherbody.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "jqd/errors.hpp"
#include "jqd/roots.hpp"

namespace jqd {

namespace {

// Distinct values of a sorted root list with their multiplicities.
std::vector<std::pair<cx, int>> group_roots(const std::vector<cx>& roots) {
    std::vector<std::pair<cx, int>> out;
    for (cx r : roots) {
        if (!out.empty() && out.back().first == r)
            ++out.back().second;
        else
            out.emplace_back(r, 1);
    }
    return out;
}

std::vector<cx> roots_of(const ComplexPolynomial& p) {
    if (p.degree() < 1) return {};
    return find_roots(p).roots;
}

}  // namespace

QuadraticCauchyEquation::QuadraticCauchyEquation(ComplexPolynomial P_, ComplexPolynomial Q_,
                                                 ComplexPolynomial R_)
    : P(std::move(P_)), Q(std::move(Q_)), R(std::move(R_)) {
    if (P.degree() < 2) fail_input("degree", "deg P must be n + 2 with n >= 0");
    n = P.degree() - 2;
    if (Q.degree() > n + 1) fail_input("degree", "deg Q exceeds n + 1");
    if (R.degree() > n) fail_input("degree", "deg R exceeds n");
}

QuadraticCauchyEquation jacobi_limit_equation(cx A, cx B) {
    return QuadraticCauchyEquation(ComplexPolynomial({1.0, 0.0, -1.0}),
                                   ComplexPolynomial({-(A - B), -(A + B)}),
                                   ComplexPolynomial({A + B + 1.0}));
}

ComplexPolynomial discriminant(const QuadraticCauchyEquation& eq) {
    return eq.Q * eq.Q - 4.0 * (eq.P * eq.R);
}

RationalQD theta_differential(const QuadraticCauchyEquation& eq) {
    ComplexPolynomial num = 4.0 * (eq.P * eq.R) - eq.Q * eq.Q;
    if (num.is_zero()) fail_input("zero_discriminant", "Q^2 - 4PR vanishes identically");
    std::vector<std::pair<cx, int>> zeros, poles;
    for (auto [z, m] : group_roots(roots_of(num))) zeros.emplace_back(z, m);
    for (auto [z, m] : group_roots(roots_of(eq.P))) poles.emplace_back(z, 2 * m);
    cx lp = eq.P.leading();
    return RationalQD::from_factors(num.leading() / (lp * lp), std::move(zeros), std::move(poles));
}

BranchPointReport branch_points(const QuadraticCauchyEquation& eq, double tol) {
    BranchPointReport rep;
    ComplexPolynomial D = discriminant(eq);
    int full = 2 * eq.n + 2;
    if (D.is_zero()) {
        rep.discriminant_zero = true;
    } else {
        rep.points = roots_of(D);
        if (D.degree() < full) {
            rep.infinity_branch = true;
            rep.infinity_multiplicity = full - D.degree();
        }
    }
    if (eq.Q.is_zero()) {
        rep.coprimality_measure = 0;
    } else {
        double qs = eq.Q.max_abs_coeff();
        double m = INFINITY;
        for (cx r : roots_of(eq.P)) {
            double s = std::pow(std::max(1.0, std::abs(r)), eq.Q.degree());
            m = std::min(m, std::abs(evaluate(eq.Q, r)) / (qs * s));
        }
        rep.coprimality_measure = m;
    }
    rep.not_coprime_warning = rep.coprimality_measure < tol;
    return rep;
}

std::vector<PoleResidue> pole_residues(const QuadraticCauchyEquation& eq, double tol) {
    std::vector<cx> r = roots_of(eq.P);
    ComplexPolynomial dP = derivative(eq.P);
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j)
            if (std::abs(r[i] - r[j]) <= tol * std::max(1.0, std::abs(r[i])))
                fail_numeric("higher_order_pole", "P has a multiple root; residue formula invalid");
    std::vector<PoleResidue> out;
    for (cx z : r) {
        cx q = eq.Q.is_zero() ? cx{} : evaluate(eq.Q, z);
        out.push_back({z, -q / evaluate(dP, z)});
    }
    return out;
}

SufficiencyReport sufficiency_report(const QuadraticCauchyEquation& eq, double tol) {
    SufficiencyReport rep;
    rep.branching = branch_points(eq);
    try {
        auto res = pole_residues(eq);
        rep.simple_poles = true;
        for (auto& pr : res) rep.max_residue_imag = std::max(rep.max_residue_imag, std::abs(pr.residue.imag()));
        rep.residues_real = rep.max_residue_imag <= tol;
    } catch (const Error&) {
        rep.simple_poles = false;
        rep.residues_real = false;
        rep.max_residue_imag = INFINITY;
    }
    // C ~ alpha / z: the z^n coefficient gives p a^2 + q a + r = 0.
    cx p = eq.P.leading(), q = eq.Q[eq.n + 1], r = eq.R[eq.n];
    cx disc = std::sqrt(q * q - 4.0 * p * r);
    cx a1 = (-q + disc) / (2.0 * p), a2 = (-q - disc) / (2.0 * p);
    // Stable pair: recover the small root from the product when cancellation bites.
    if (std::abs(a1) < std::abs(a2) && std::abs(a2) > 0) a1 = r / (p * a2);
    else if (std::abs(a1) > 0) a2 = r / (p * a1);
    rep.alpha[0] = a1;
    rep.alpha[1] = a2;
    rep.min_alpha_imag = std::min(std::abs(a1.imag()), std::abs(a2.imag()));
    rep.asymptotic_real_branch = rep.min_alpha_imag <= tol;
    return rep;
}

Dk0Report dk0_connectivity(const QuadraticCauchyEquation& eq, const TraceOptions& opt) {
    Dk0Report rep;
    RationalQD theta = theta_differential(eq);
    const auto& cps = theta.critical_points();
    std::map<int, int> vindex;
    for (std::size_t i = 0; i < cps.size(); ++i) {
        if (!cps[i].is_zero()) continue;
        vindex[int(i)] = int(rep.vertices.size());
        rep.vertices.push_back(cps[i].z);
        rep.multiplicity.push_back(cps[i].order);
    }
    std::size_t nv = rep.vertices.size();
    rep.touched.assign(nv, false);
    std::vector<bool> linked(nv, false);
    if (nv > 0) {
        CriticalGraph g = trace_critical(theta, opt);
        rep.n_arcs = int(g.arcs.size());
        for (auto& a : g.arcs)
            if (a.end.kind == EndKind::truncated) ++rep.truncated_arcs;
        for (auto& e : g.edges) {
            auto ia = vindex.find(e.a), ib = vindex.find(e.b);
            if (ia == vindex.end() || ib == vindex.end()) continue;
            rep.edges.push_back({ia->second, ib->second, e.q_length});
            rep.touched[ia->second] = rep.touched[ib->second] = true;
            if (ia->second != ib->second) linked[ia->second] = linked[ib->second] = true;
        }
    }
    rep.all_touched = std::all_of(rep.touched.begin(), rep.touched.end(), [](bool b) { return b; });
    rep.spanning = nv <= 1 || std::all_of(linked.begin(), linked.end(), [](bool b) { return b; });
    return rep;
}

std::string dk0_json(const Dk0Report& r) {
    char buf[128];
    std::string s = "{\"vertices\":[";
    for (std::size_t i = 0; i < r.vertices.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%s{\"re\":%.17g,\"im\":%.17g,\"multiplicity\":%d,\"adjacent\":[",
                      i ? "," : "", r.vertices[i].real(), r.vertices[i].imag(), r.multiplicity[i]);
        s += buf;
        bool first = true;
        for (auto& e : r.edges) {
            int other = e.a == int(i) ? e.b : (e.b == int(i) ? e.a : -1);
            if (other < 0) continue;
            std::snprintf(buf, sizeof buf, "%s{\"to\":%d,\"q_length\":%.17g}", first ? "" : ",", other,
                          e.q_length);
            s += buf;
            first = false;
        }
        s += "]}";
    }
    std::snprintf(buf, sizeof buf, "],\"all_touched\":%s,\"spanning\":%s,\"truncated_arcs\":%d,\"n_arcs\":%d}",
                  r.all_touched ? "true" : "false", r.spanning ? "true" : "false", r.truncated_arcs, r.n_arcs);
    s += buf;
    return s;
}

}  // namespace jqd
