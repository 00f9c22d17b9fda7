#include <cmath>
#include <cstdio>
#include <random>

#include <jqd/exsolve.hpp>
#include <jqd/jacobi.hpp>
#include <jqd/limitfield.hpp>
#include <jqd/motherbody.hpp>
#include <jqd/roots.hpp>

#include "cli_common.hpp"

namespace jqdcli {

namespace {

Json roots_array(const std::vector<cx>& roots) {
    Json a = Json::array();
    for (cx r : roots) a.push_back(cx_json(r));
    return a;
}

Json stats_json(const jqd::ResidualStats& s) {
    return Json{{"min", s.min}, {"median", s.median}, {"max", s.max}, {"n_probes", s.n_probes}};
}

Json header(const char* command) { return Json{{"schema", 1}, {"command", command}}; }

void cmd_jacobi_roots(const Options& o) {
    require(o.degrees.empty() ? o.n >= 0 : true, "--n must be >= 0 (or give --degrees)");
    bool sequence = !o.degrees.empty() || !o.A.empty() || !o.B.empty();
    std::vector<int> degrees = o.degrees.empty() ? std::vector<int>{o.n} : parse_int_list(o.degrees);
    for (int d : degrees) require(d >= 0, "degrees must be >= 0");
    jqd::ParamSequence seq;
    seq.alpha0 = parse_complex(o.alpha);
    seq.beta0 = parse_complex(o.beta);
    if (sequence) {
        seq.A = o.A.empty() ? cx{} : parse_complex(o.A);
        seq.B = o.B.empty() ? cx{} : parse_complex(o.B);
    }
    Json out = header("jacobi-roots");
    out["A"] = cx_json(seq.A);
    out["B"] = cx_json(seq.B);
    Json clouds = Json::array();
    std::string csv = "n,re,im\n";
    char buf[96];
    for (int n : degrees) {
        jqd::JacobiParams jp = seq.at(n);
        jqd::ComplexPolynomial p = jqd::jacobi_poly(jp);
        jqd::RootDiagnostics diag;
        jqd::RootCountingMeasure mu = p.degree() >= 1 ? jqd::find_roots(p, o.tol, &diag) : jqd::RootCountingMeasure{};
        Json c{{"n", n}, {"alpha", cx_json(jp.alpha)}, {"beta", cx_json(jp.beta)}, {"degree", p.degree()},
               {"degree_drop", p.degree_drop()}, {"digits", diag.digits}, {"max_residual", diag.max_residual},
               {"roots", roots_array(mu.roots)}};
        clouds.push_back(c);
        for (cx r : mu.roots) {
            std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", n, r.real(), r.imag());
            csv += buf;
        }
    }
    out["clouds"] = clouds;
    if (!o.csv.empty()) write_file(o.csv, csv);
    emit(o, out);
}

void cmd_limit_check(const Options& o) {
    require(!o.A.empty() && !o.B.empty(), "--A and --B are required");
    cx A = parse_complex(o.A), B = parse_complex(o.B);
    jqd::LimitParams lp(A, B);
    std::vector<int> degrees = o.degrees.empty() ? std::vector<int>{20, 40, 60} : parse_int_list(o.degrees);
    auto probes = jqd::circle_probes(o.probes, o.radius);
    Json out = header("limit-check");
    out["A"] = cx_json(A);
    out["B"] = cx_json(B);
    Json dc = Json::array();
    for (cx c : jqd::limit_discriminant_coeffs(lp)) dc.push_back(cx_json(c));
    out["discriminant"] = dc;
    jqd::LimitDifferential t2 = jqd::limit_differential(lp);
    out["differential"] = t2.degenerate ? Json{{"degenerate", true}}
                                        : Json{{"degenerate", false}, {"p1", cx_json(t2.qd.p1)},
                                               {"p2", cx_json(t2.qd.p2)}, {"scale", cx_json(t2.scale)}};
    Json rows = Json::array();
    std::string csv = "n,min,median,max\n";
    char buf[128];
    bool monotone = true;
    double prev = INFINITY;
    jqd::ParamSequence seq{A, B, 0.0, 0.0};
    for (int n : degrees) {
        require(n >= 1, "degrees must be >= 1");
        auto mu = jqd::find_roots(jqd::jacobi_poly(seq.at(n)), o.tol);
        auto st = jqd::limit_equation_residual(lp, mu, probes);
        monotone = monotone && st.median < prev;
        prev = st.median;
        rows.push_back(Json{{"n", n}, {"residual", stats_json(st)}});
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g\n", n, st.min, st.median, st.max);
        csv += buf;
    }
    out["probes"] = Json{{"count", o.probes}, {"radius", o.radius}};
    out["rows"] = rows;
    out["median_decreasing"] = monotone;
    if (!o.csv.empty()) write_file(o.csv, csv);
    emit(o, out);
}

void cmd_motherbody(const Options& o) {
    bool triple = !o.P.empty();
    require(triple || (!o.A.empty() && !o.B.empty()), "give --A/--B or --P/--Q/--R");
    jqd::QuadraticCauchyEquation eq =
        triple ? jqd::QuadraticCauchyEquation(jqd::ComplexPolynomial(parse_complex_list(o.P)),
                                              jqd::ComplexPolynomial(o.Q.empty() ? std::vector<cx>{}
                                                                                 : parse_complex_list(o.Q)),
                                              jqd::ComplexPolynomial(o.R.empty() ? std::vector<cx>{}
                                                                                 : parse_complex_list(o.R)))
               : jqd::jacobi_limit_equation(parse_complex(o.A), parse_complex(o.B));
    Json out = header("motherbody");
    out["n"] = eq.n;
    Json d = Json::array();
    const jqd::ComplexPolynomial disc = jqd::discriminant(eq);
    for (cx c : disc.coeffs()) d.push_back(cx_json(c));
    out["discriminant"] = d;
    auto bp = jqd::branch_points(eq);
    out["branch_points"] = Json{{"points", roots_array(bp.points)},
                                {"infinity_branch", bp.infinity_branch},
                                {"infinity_multiplicity", bp.infinity_multiplicity},
                                {"discriminant_zero", bp.discriminant_zero},
                                {"coprimality_measure", bp.coprimality_measure},
                                {"not_coprime_warning", bp.not_coprime_warning}};
    auto sr = jqd::sufficiency_report(eq);
    Json residues = Json::array();
    if (sr.simple_poles)
        for (auto& r : jqd::pole_residues(eq))
            residues.push_back(Json{{"pole", cx_json(r.pole)}, {"residue", cx_json(r.residue)}});
    out["residues"] = residues;
    out["sufficiency"] = Json{{"simple_poles", sr.simple_poles},
                              {"residues_real", sr.residues_real},
                              {"asymptotic_real_branch", sr.asymptotic_real_branch},
                              {"max_residue_imag", sr.max_residue_imag},
                              {"alpha", Json::array({cx_json(sr.alpha[0]), cx_json(sr.alpha[1])})}};
    jqd::TraceOptions topt;
    topt.budget = o.budget;
    topt.workers = o.workers;
    if (!bp.discriminant_zero) out["dk0"] = Json::parse(jqd::dk0_json(jqd::dk0_connectivity(eq, topt)));
    emit(o, out);
}

jqd::OperatorPencil pencil_from(const Options& o, std::string& source) {
    if (o.jacobi) {
        source = "jacobi";
        return jqd::jacobi_pencil(parse_complex(o.alpha), parse_complex(o.beta));
    }
    if (!o.Q2.empty()) {
        source = "explicit";
        auto list = [](const std::string& s) {
            return jqd::ComplexPolynomial(s.empty() ? std::vector<cx>{} : parse_complex_list(s));
        };
        return jqd::OperatorPencil(list(o.Q2), list(o.Q1), list(o.P1), parse_complex(o.Q0), parse_complex(o.pp),
                                   parse_complex(o.qq));
    }
    // Random generic pencil from the seed.
    source = "random";
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    auto r = [&] { return cx(U(rng), U(rng)); };
    for (;;) {
        jqd::OperatorPencil T(jqd::ComplexPolynomial({r(), r(), r()}), jqd::ComplexPolynomial({r(), r()}),
                              jqd::ComplexPolynomial({r(), r()}), r(), r(), r());
        if (std::abs(T.Q0) < 0.5 || std::abs(T.q22()) < 0.5) continue;
        auto [a1, a2] = jqd::characteristic_poly(T).roots();
        if (std::abs(a1 - a2) < 0.5 || !jqd::generic_type_check(T).generic) continue;
        return T;
    }
}

void cmd_exsolve(const Options& o) {
    std::string source;
    jqd::OperatorPencil T = pencil_from(o, source);
    Json out = header("exsolve");
    out["pencil"] = Json{{"source", source},
                         {"Q2", Json::array({cx_json(T.Q2[0]), cx_json(T.Q2[1]), cx_json(T.Q2[2])})},
                         {"Q1", Json::array({cx_json(T.Q1[0]), cx_json(T.Q1[1])})},
                         {"P1", Json::array({cx_json(T.P1[0]), cx_json(T.P1[1])})},
                         {"Q0", cx_json(T.Q0)}, {"p", cx_json(T.p)}, {"q", cx_json(T.q)}};
    auto cp = jqd::characteristic_poly(T);
    auto [a1, a2] = cp.roots();
    auto g = jqd::generic_type_check(T);
    out["characteristic_roots"] = Json::array({cx_json(a1), cx_json(a2)});
    out["generic"] = g.generic;
    out["rho"] = g.rho_defined ? cx_json(g.rho) : Json(nullptr);
    int n = o.n < 0 ? 10 : o.n;
    if (n >= 1) {
        auto ev = jqd::eigenvalues_for_degree(T, n);
        Json fam = Json::array();
        for (int w = 1; w <= 2; ++w) {
            auto y = jqd::eigenpolynomial(T, n, w);
            auto mu = jqd::find_roots(y, o.tol);
            fam.push_back(Json{{"which", w},
                               {"lambda", cx_json(ev.lambda[w - 1])},
                               {"lambda_over_n", cx_json(ev.scaled[w - 1])},
                               {"roots", roots_array(mu.roots)}});
        }
        out["n"] = n;
        out["coincident"] = ev.coincident;
        out["families"] = fam;
    }
    if (!o.degrees.empty()) {
        require(g.generic, "generic type required for the Cauchy-transform check");
        auto rows = jqd::gen_cauchy_residual(T, parse_int_list(o.degrees), jqd::circle_probes(o.probes, o.radius),
                                             o.which);
        Json jr = Json::array();
        for (auto& r : rows)
            jr.push_back(Json{{"n", r.n}, {"lambda", cx_json(r.lambda)}, {"max_root_modulus", r.max_root_modulus},
                              {"residual", stats_json(r.residual)}});
        out["gen_cauchy"] = jr;
        if (!o.csv.empty()) write_file(o.csv, jqd::gen_cauchy_csv(rows));
    }
    emit(o, out);
}

}  // namespace

void add_poly_commands(CLI::App& app, Options& o) {
    auto* jr = app.add_subcommand("jacobi-roots", "Roots of P_n^(alpha,beta), single degree or a degree sequence");
    jr->add_option("--n", o.n, "degree");
    jr->add_option("--alpha", o.alpha, "alpha (or alpha0 in sequence mode)");
    jr->add_option("--beta", o.beta, "beta (or beta0 in sequence mode)");
    jr->add_option("--A", o.A, "alpha_n = A n + alpha0");
    jr->add_option("--B", o.B, "beta_n = B n + beta0");
    jr->add_option("--degrees", o.degrees, "comma-separated degrees");
    jr->add_option("--tol", o.tol, "root residual tolerance");
    jr->add_option("--json", o.json, "write JSON here instead of stdout");
    jr->add_option("--csv", o.csv, "write n,re,im rows");
    jr->callback([&o] { cmd_jacobi_roots(o); });

    auto* lc = app.add_subcommand("limit-check", "Residual of the limiting Cauchy-transform equation");
    lc->add_option("--A", o.A)->required();
    lc->add_option("--B", o.B)->required();
    lc->add_option("--degrees", o.degrees, "default 20,40,60");
    lc->add_option("--probes", o.probes, "probe count on the circle");
    lc->add_option("--radius", o.radius, "probe circle radius");
    lc->add_option("--tol", o.tol);
    lc->add_option("--json", o.json);
    lc->add_option("--csv", o.csv);
    lc->callback([&o] { cmd_limit_check(o); });

    auto* mb = app.add_subcommand("motherbody", "Discriminant, branch points, residues and DK0 connectivity");
    mb->add_option("--A", o.A);
    mb->add_option("--B", o.B);
    mb->add_option("--P", o.P, "coefficients c0;c1;... of P");
    mb->add_option("--Q", o.Q);
    mb->add_option("--R", o.R);
    mb->add_option("--budget", o.budget, "Q-length budget per traced arc");
    mb->add_option("--workers", o.workers);
    mb->add_option("--json", o.json);
    mb->callback([&o] { cmd_motherbody(o); });

    auto* ex = app.add_subcommand("exsolve", "Exactly solvable operator pencils");
    ex->add_flag("--jacobi", o.jacobi, "use the Jacobi pencil with --alpha/--beta");
    ex->add_option("--alpha", o.alpha);
    ex->add_option("--beta", o.beta);
    ex->add_option("--Q2", o.Q2, "c0;c1;c2");
    ex->add_option("--Q1", o.Q1, "c0;c1");
    ex->add_option("--P1", o.P1, "c0;c1");
    ex->add_option("--Q0", o.Q0);
    ex->add_option("--p", o.pp);
    ex->add_option("--q", o.qq);
    ex->add_option("--seed", o.seed, "seed for a random generic pencil");
    ex->add_option("--n", o.n, "degree for eigenvalues/eigenpolynomials (default 10)");
    ex->add_option("--degrees", o.degrees, "degrees for the Cauchy-transform residual table");
    ex->add_option("--which", o.which, "eigenvalue family 1 or 2")->check(CLI::Range(1, 2));
    ex->add_option("--probes", o.probes);
    ex->add_option("--radius", o.radius);
    ex->add_option("--tol", o.tol);
    ex->add_option("--json", o.json);
    ex->add_option("--csv", o.csv);
    ex->callback([&o] { cmd_exsolve(o); });
}

}  // namespace jqdcli
