#include "jqd/tracer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <thread>

#include "jqd/errors.hpp"

namespace jqd {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;

// 1 / sqrt(Q) with the sign that keeps it within 90 degrees of dir.
cx aligned_inverse_sqrt(cx Q, cx dir) {
    cx w = 1.0 / std::sqrt(Q);
    if (std::real(w * std::conj(dir)) < 0) w = -w;
    return w;
}

struct DpResult {
    cx y;
    double err;
};

// One Dormand-Prince 5(4) step for y' = f(y).
template <class F>
DpResult dp_step(const F& f, cx y, double h) {
    cx k1 = f(y);
    cx k2 = f(y + h * (k1 / 5.0));
    cx k3 = f(y + h * (3.0 / 40 * k1 + 9.0 / 40 * k2));
    cx k4 = f(y + h * (44.0 / 45 * k1 - 56.0 / 15 * k2 + 32.0 / 9 * k3));
    cx k5 = f(y + h * (19372.0 / 6561 * k1 - 25360.0 / 2187 * k2 + 64448.0 / 6561 * k3 -
                       212.0 / 729 * k4));
    cx k6 = f(y + h * (9017.0 / 3168 * k1 - 355.0 / 33 * k2 + 46732.0 / 5247 * k3 +
                       49.0 / 176 * k4 - 5103.0 / 18656 * k5));
    cx y5 = y + h * (35.0 / 384 * k1 + 500.0 / 1113 * k3 + 125.0 / 192 * k4 -
                     2187.0 / 6784 * k5 + 11.0 / 84 * k6);
    cx k7 = f(y5);
    cx e = h * ((35.0 / 384 - 5179.0 / 57600) * k1 + (500.0 / 1113 - 7571.0 / 16695) * k3 +
                (125.0 / 192 - 393.0 / 640) * k4 + (-2187.0 / 6784 + 92097.0 / 339200) * k5 +
                (11.0 / 84 - 187.0 / 2100) * k6 - 1.0 / 40 * k7);
    return {y5, std::abs(e)};
}

constexpr double kGLx[5] = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                            0.9061798459386640};
constexpr double kGLw[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                            0.4786286704993665, 0.2369268850561891};

// Integral of sqrt(Q) dz over the chord a->b, branch aligned with travel.
cx chord_integral(const RationalQD& q, cx a, cx b) {
    cx d = b - a;
    if (d == cx{}) return 0.0;
    cx dir = d / std::abs(d);
    cx acc = 0;
    for (int k = 0; k < 5; ++k) {
        cx z = a + 0.5 * (1 + kGLx[k]) * d;
        cx Q = q(z);
        if (Q == cx{}) continue;
        acc += kGLw[k] / aligned_inverse_sqrt(Q, dir);
    }
    return 0.5 * d * acc;
}

double nearest_ray(const RationalQD& q, int i, cx z) {
    auto angles = ray_angles(q, i);
    if (angles.empty()) return -1;
    double phi = std::arg(z - q.critical_points()[i].z);
    int best = 0;
    double bd = 1e9;
    for (int k = 0; k < (int)angles.size(); ++k) {
        double d = std::remainder(phi - angles[k], kTwoPi);
        if (std::abs(d) < bd) { bd = std::abs(d); best = k; }
    }
    return best;
}

struct ReturnWatch {
    cx seed;
    bool left = false;
    double best = std::numeric_limits<double>::infinity();
    double period = 0;
    double far = 0;
    bool closed = false;
};

double seg_dist(cx p, cx a, cx b) {
    cx d = b - a;
    double L2 = std::norm(d);
    if (L2 == 0) return std::abs(p - a);
    double t = std::clamp(std::real((p - a) * std::conj(d)) / L2, 0.0, 1.0);
    return std::abs(p - (a + t * d));
}

enum class LocalOutcome { exit, ended };

// Logarithmic coordinate u = log(z - w) at a double pole w: du/ds = 1/sqrt(g),
// g = (z - w)^2 Q analytic and nonzero at w.
LocalOutcome local_phase(const RationalQD& q, int i, cx& z, cx& d, ArcEnd& end,
                         const TraceOptions& opt, std::vector<cx>& pts, int& steps) {
    const cx w = q.critical_points()[i].z;
    const double capture = opt.capture * q.scale();
    cx u = std::log(z - w);
    const double re0 = u.real(), im0 = u.imag();
    cx du_dir = d / (z - w);
    du_dir /= std::abs(du_dir);
    auto zof = [&](cx uu) { return uu.real() < -745 ? w : w + std::exp(uu); };
    auto F = [&](cx uu, cx dir) { return aligned_inverse_sqrt(q.reduced(i, zof(uu)), dir); };
    double h = 0.05 / std::abs(F(u, du_dir));
    const double exit_re = std::log(2 * capture);
    for (int it = 0; it < 200000; ++it) {
        ++steps;
        double speed = std::abs(F(u, du_dir));
        double depth = re0 - u.real();
        double hmax = (0.25 + 0.25 * std::max(depth, 0.0)) / speed;
        h = std::min(h, hmax);
        DpResult r{};
        for (int tries = 0; tries < 60; ++tries) {
            cx dd = du_dir;
            r = dp_step([&](cx uu) { return F(uu, dd); }, u, h);
            double tol = 1e-10 * std::abs(r.y - u) + 1e-14;
            if (r.err <= tol) break;
            h *= std::max(0.1, 0.9 * std::pow(tol / r.err, 0.2));
        }
        cx step = r.y - u;
        if (step != cx{}) du_dir = step / std::abs(step);
        u = r.y;
        h *= 2;
        if (u.real() > -700) pts.push_back(zof(u));
        if (u.real() > exit_re) {
            z = zof(u);
            cx dz = du_dir * (z - w);
            d = dz / std::abs(dz);
            return LocalOutcome::exit;
        }
        double wind = u.imag() - im0;
        if (std::abs(wind) > 4 * kPi) {
            double per_turn = (re0 - u.real()) / (std::abs(wind) / kTwoPi);
            end.cp = i;
            if (per_turn > 1e-9) {
                end.kind = EndKind::pole_spiral;
                end.spiral = wind > 0 ? Spiral::ccw : Spiral::cw;
            } else {
                end.kind = EndKind::closed;
            }
            return LocalOutcome::ended;
        }
        if (re0 - u.real() > 1e6) {
            end.kind = EndKind::pole_radial;
            end.cp = i;
            return LocalOutcome::ended;
        }
    }
    end.kind = EndKind::truncated;
    return LocalOutcome::ended;
}

TrajectoryArc integrate(const RationalQD& q, cx z0, cx dir0, int start_cp, const TraceOptions& opt,
                        ReturnWatch* watch) {
    TrajectoryArc arc;
    arc.start_cp = start_cp;
    const auto& cps = q.critical_points();
    const double scale = q.scale();
    const double capture = opt.capture * scale;
    bool armed = start_cp < 0;
    cx z = z0;
    cx d = dir0 / std::abs(dir0);
    double s = 0, drift = 0;
    if (start_cp >= 0) {
        arc.points.push_back(cps[start_cp].z);
        cx I = chord_integral(q, cps[start_cp].z, z0);
        s += I.real();
        drift += I.imag();
    }
    arc.points.push_back(z0);

    struct Wind {
        int cp;
        double theta = 0;
        int next = 1;
        std::vector<double> rad;
    };
    std::vector<Wind> winds;
    for (int i = 0; i < (int)cps.size(); ++i)
        if (cps[i].order == -2) winds.push_back({i, 0.0, 1, {std::abs(z - cps[i].z)}});

    auto field = [&](cx zz, cx dir) { return aligned_inverse_sqrt(q(zz), dir); };
    double h = -1;
    int steps = 0;
    auto finish = [&](EndKind k) {
        arc.end.kind = k;
        arc.q_length = s;
        arc.im_drift = drift;
        arc.steps = steps;
        return arc;
    };
    for (;;) {
        if (steps >= opt.max_steps || s > opt.budget) return finish(EndKind::truncated);
        if (std::abs(z) > opt.infinity_radius * scale) return finish(EndKind::infinity);
        double dist = std::numeric_limits<double>::infinity();
        for (const auto& c : cps) dist = std::min(dist, std::abs(z - c.z));
        cx fz = field(z, d);
        double speed = std::abs(fz);
        double hmax = std::min(0.05 * dist, 0.2 * std::max(1.0, std::abs(z))) / speed;
        if (watch && watch->left) {
            // Short chords near the seed so the return distance is not swamped by chord sag.
            double rd = std::abs(z - watch->seed);
            if (rd < 0.25 * watch->far) hmax = std::min(hmax, 0.1 * (rd + capture) / speed);
        }
        if (h < 0 || h > hmax) h = hmax;
        DpResult r{};
        double tol = 0;
        for (int tries = 0; tries < 60; ++tries) {
            cx dd = d;
            r = dp_step([&](cx zz) { return field(zz, dd); }, z, h);
            tol = opt.rtol * std::abs(r.y - z) + 1e-15 * scale;
            if (r.err <= tol) break;
            h *= std::max(0.1, 0.9 * std::pow(tol / r.err, 0.2));
        }
        ++steps;
        cx zn = r.y;
        // Project back onto the level set Im Phi = Im Phi(start).
        cx I = chord_integral(q, z, zn);
        double D = drift + I.imag();
        cx dir_n = (zn - z) / std::abs(zn - z);
        zn += cx(0, -D) * field(zn, dir_n);
        I = chord_integral(q, z, zn);
        s += I.real();
        drift += I.imag();
        cx chord = zn - z;
        cx zprev = z;
        z = zn;
        d = field(z, chord / std::abs(chord));
        d /= std::abs(d);
        arc.points.push_back(z);
        h *= std::min(5.0, 0.9 * std::pow(tol / std::max(r.err, 1e-300), 0.2));

        if (watch) {
            double rd = std::abs(z - watch->seed);
            bool was_left = watch->left;
            if (!watch->left && rd > 10 * capture) watch->left = true;
            watch->far = std::max(watch->far, rd);
            if (was_left) {
                double sd = seg_dist(watch->seed, zprev, z);
                if (sd < 0.25 * watch->far && sd < watch->best) {
                    cx seg = z - zprev;
                    double t = std::clamp(std::real((watch->seed - zprev) * std::conj(seg)) / std::norm(seg), 0.0, 1.0);
                    watch->best = sd;
                    watch->period = s - (1 - t) * I.real();
                }
                if (sd < capture && sd < 0.25 * watch->far) {
                    watch->closed = true;
                    arc.end.kind = EndKind::closed;
                    return finish(EndKind::closed);
                }
            }
        }

        if (!armed && std::abs(z - cps[start_cp].z) > 10 * capture) armed = true;
        for (int i = 0; i < (int)cps.size(); ++i) {
            if (i == start_cp && !armed) continue;
            double rr = std::abs(z - cps[i].z);
            if (rr >= capture) continue;
            if (cps[i].order == -2) {
                ArcEnd e;
                if (local_phase(q, i, z, d, e, opt, arc.points, steps) == LocalOutcome::ended) {
                    arc.end = e;
                    arc.q_length = s;
                    arc.im_drift = drift;
                    arc.steps = steps;
                    return arc;
                }
                break;
            }
            arc.end.cp = i;
            arc.end.ray = cps[i].is_zero() || cps[i].order == -1 ? (int)nearest_ray(q, i, z) : -1;
            arc.points.push_back(cps[i].z);
            cx Ie = chord_integral(q, z, cps[i].z);
            s += Ie.real();
            drift += Ie.imag();
            return finish(EndKind::critical_point);
        }

        for (auto& wd : winds) {
            cx w = cps[wd.cp].z;
            wd.theta += std::arg((z - w) / (zprev - w));
            if (std::abs(wd.theta) >= kTwoPi * wd.next) {
                wd.rad.push_back(std::abs(z - w));
                ++wd.next;
                std::size_t n = wd.rad.size();
                const double shrink = 1 - 1e-6;
                if (n >= 3 && wd.rad[n - 1] < shrink * wd.rad[n - 2] && wd.rad[n - 2] < shrink * wd.rad[n - 3]) {
                    arc.end.kind = EndKind::pole_spiral;
                    arc.end.cp = wd.cp;
                    arc.end.spiral = wd.theta > 0 ? Spiral::ccw : Spiral::cw;
                    arc.q_length = s;
                    arc.im_drift = drift;
                    arc.steps = steps;
                    return arc;
                }
            }
        }
    }
}

}  // namespace

const char* to_string(EndKind k) {
    switch (k) {
        case EndKind::critical_point: return "critical_point";
        case EndKind::pole_spiral: return "pole_spiral";
        case EndKind::pole_radial: return "pole_radial";
        case EndKind::closed: return "closed";
        case EndKind::infinity: return "infinity";
        case EndKind::truncated: return "truncated";
    }
    return "?";
}

cx direction_field(const RationalQD& qd, cx z, cx prev_dir) {
    cx Q = qd(z);
    if (!(std::abs(Q) > 1e-300) || !std::isfinite(std::abs(Q)))
        fail_numeric("critical_point", "direction undefined at a critical point");
    cx w = std::polar(1.0, -0.5 * std::arg(Q));
    if (std::real(w * std::conj(prev_dir)) < 0) w = -w;
    return w;
}

std::vector<double> ray_angles(const RationalQD& qd, int i) {
    const auto& c = qd.critical_points()[i];
    int m = c.order;
    int k = m + 2;
    std::vector<double> out;
    if (k == 0) return out;
    int n = std::abs(k);
    for (int j = 0; j < n; ++j) out.push_back((kTwoPi * j - std::arg(c.lead)) / k);
    return out;
}

TrajectoryArc trace_arc(const RationalQD& qd, cx z0, cx dir0, int start_cp, const TraceOptions& opt) {
    if (start_cp >= 0) return integrate(qd, z0, dir0, start_cp, opt, nullptr);
    ReturnWatch w;
    w.seed = z0;
    return integrate(qd, z0, dir0, start_cp, opt, &w);
}

CriticalGraph trace_critical(const RationalQD& qd, const TraceOptions& opt) {
    CriticalGraph g;
    g.vertices = qd.critical_points();
    struct Task {
        int cp, ray;
        double angle;
    };
    std::vector<Task> tasks;
    for (int i = 0; i < (int)g.vertices.size(); ++i) {
        const auto& c = g.vertices[i];
        if (!(c.order >= 1 || c.order == -1)) continue;
        auto ang = ray_angles(qd, i);
        for (int k = 0; k < (int)ang.size(); ++k) tasks.push_back({i, k, ang[k]});
    }
    g.arcs.resize(tasks.size());
    const double eps = opt.seed_eps * qd.scale();
    auto run = [&](std::size_t t) {
        const Task& tk = tasks[t];
        cx dir = std::polar(1.0, tk.angle);
        TrajectoryArc a = integrate(qd, g.vertices[tk.cp].z + eps * dir, dir, tk.cp, opt, nullptr);
        a.start_ray = tk.ray;
        g.arcs[t] = std::move(a);
    };
    int workers = std::max(1, opt.workers);
    if (workers == 1 || tasks.size() < 2) {
        for (std::size_t t = 0; t < tasks.size(); ++t) run(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) run(t);
            });
        for (auto& th : pool) th.join();
    }

    // Pair arcs that are the two traversals of one finite critical trajectory.
    std::map<std::pair<int, int>, int> by_start;
    for (int a = 0; a < (int)g.arcs.size(); ++a) by_start[{g.arcs[a].start_cp, g.arcs[a].start_ray}] = a;
    std::vector<char> used(g.arcs.size(), 0);
    for (int a = 0; a < (int)g.arcs.size(); ++a) {
        const auto& arc = g.arcs[a];
        if (used[a] || arc.end.kind != EndKind::critical_point) continue;
        GraphEdge e;
        e.a = arc.start_cp;
        e.b = arc.end.cp;
        e.arcs = {a};
        e.q_length = arc.q_length;
        used[a] = 1;
        auto it = by_start.find({arc.end.cp, arc.end.ray});
        if (it != by_start.end() && !used[it->second]) {
            const auto& back = g.arcs[it->second];
            if (back.end.kind == EndKind::critical_point && back.end.cp == arc.start_cp &&
                back.end.ray == arc.start_ray) {
                used[it->second] = 1;
                e.arcs.push_back(it->second);
                e.q_length = 0.5 * (arc.q_length + back.q_length);
            }
        }
        g.edges.push_back(std::move(e));
    }
    return g;
}

double q_length(const RationalQD& qd, const TrajectoryArc& arc) {
    double L = 0;
    for (std::size_t k = 1; k < arc.points.size(); ++k) {
        cx a = arc.points[k - 1], d = arc.points[k] - a;
        double acc = 0;
        for (int j = 0; j < 5; ++j) acc += kGLw[j] * std::sqrt(std::abs(qd(a + 0.5 * (1 + kGLx[j]) * d)));
        L += 0.5 * std::abs(d) * acc;
    }
    return L;
}

std::vector<ClosedProbe> closed_trajectory_probe(const RationalQD& qd, const std::vector<cx>& seeds,
                                                 double budget, const TraceOptions& opt) {
    std::vector<ClosedProbe> out;
    TraceOptions o = opt;
    o.budget = budget;
    for (cx s : seeds) {
        ClosedProbe p;
        p.seed = s;
        ReturnWatch w;
        w.seed = s;
        integrate(qd, s, direction_field(qd, s, 1.0), -1, o, &w);
        p.closed_candidate = w.closed;
        p.return_distance = w.best;
        p.period = w.period;
        out.push_back(p);
    }
    return out;
}

DistanceStats support_distance(const RootCountingMeasure& mu, const CriticalGraph& graph) {
    bool any = false;
    for (const auto& a : graph.arcs) any = any || a.points.size() >= 2;
    if (!any) fail_input("empty_graph", "critical graph has no arcs");
    std::vector<double> d;
    for (cx r : mu.roots) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& a : graph.arcs)
            for (std::size_t k = 1; k < a.points.size(); ++k)
                best = std::min(best, seg_dist(r, a.points[k - 1], a.points[k]));
        d.push_back(best);
    }
    std::sort(d.begin(), d.end());
    DistanceStats st;
    st.n = static_cast<int>(d.size());
    if (d.empty()) return st;
    auto q = [&](double p) {
        double idx = p * (d.size() - 1);
        std::size_t lo = static_cast<std::size_t>(std::floor(idx));
        std::size_t hi = std::min(lo + 1, d.size() - 1);
        return d[lo] + (idx - lo) * (d[hi] - d[lo]);
    };
    st.min = d.front();
    st.max = d.back();
    st.median = q(0.5);
    st.p95 = q(0.95);
    return st;
}

std::string graph_csv(const CriticalGraph& g) {
    std::string s = "arc,re,im\n";
    char buf[96];
    for (std::size_t a = 0; a < g.arcs.size(); ++a)
        for (cx z : g.arcs[a].points) {
            std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", a, z.real(), z.imag());
            s += buf;
        }
    return s;
}

}  // namespace jqd
