#include "jqd/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "mp.hpp"

namespace jqd {
namespace {

using mp::Cx;

template <class T>
struct Eval {
    Cx<T> ratio;    // p / p'
    T rel;          // |p| / sum |a_k||z|^k
    T fe_scale;     // sum |a_k||z|^k / |p'|
};

template <class T>
Eval<T> eval_at(const std::vector<Cx<T>>& a, const Cx<T>& z) {
    using std::abs;
    const int n = static_cast<int>(a.size()) - 1;
    T az = mp::absc(z);
    Eval<T> e;
    if (az <= 1) {
        Cx<T> p = a[n], dp = Cx<T>(T(0));
        T s = mp::absc(a[n]);
        for (int k = n - 1; k >= 0; --k) {
            dp = dp * z + p;
            p = p * z + a[k];
            s = s * az + mp::absc(a[k]);
        }
        T ap = mp::absc(p), adp = mp::absc(dp);
        e.ratio = (adp == 0) ? Cx<T>(T(0)) : p / dp;
        e.rel = s == 0 ? T(0) : ap / s;
        e.fe_scale = adp == 0 ? T(std::numeric_limits<double>::infinity()) : s / adp;
        return e;
    }
    // |z| > 1: work with q(y) = y^n p(1/y).
    Cx<T> y = Cx<T>(T(1)) / z;
    T ay = T(1) / az;
    Cx<T> q = a[0], dq = Cx<T>(T(0));
    T s = mp::absc(a[0]);
    for (int k = 1; k <= n; ++k) {
        dq = dq * y + q;
        q = q * y + a[k];
        s = s * ay + mp::absc(a[k]);
    }
    Cx<T> den = T(n) * q - y * dq;
    T aq = mp::absc(q), aden = mp::absc(den);
    e.ratio = aden == 0 ? Cx<T>(T(0)) : z * q / den;
    e.rel = s == 0 ? T(0) : aq / s;
    e.fe_scale = aden == 0 ? T(std::numeric_limits<double>::infinity()) : az * s / aden;
    return e;
}

template <class T>
std::vector<Cx<T>> coeffs_at(const ComplexPolynomial& p) {
    std::vector<Cx<T>> a;
    a.reserve(p.coeffs().size());
    if (p.has_hi()) {
        for (const auto& h : p.hi()->c) a.push_back(Cx<T>::from(h));
    } else {
        for (cx c : p.coeffs()) a.push_back(Cx<T>::from(c));
    }
    return a;
}

double fujiwara(const std::vector<cx>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    double an = std::abs(c[n]);
    double r = 0;
    for (int k = 1; k <= n; ++k) {
        double v = std::abs(c[n - k]) / an;
        if (k == n) v /= 2;
        if (v > 0) r = std::max(r, std::pow(v, 1.0 / k));
    }
    return 2 * r;
}

struct TierOutcome {
    std::vector<cx> z;
    std::vector<double> fe;   // forward error bound per root
    bool converged = false;
    int iterations = 0;
};

template <class T>
TierOutcome aberth(const ComplexPolynomial& poly, std::vector<cx> start, int max_iter) {
    using std::abs;
    auto a = coeffs_at<T>(poly);
    const int n = poly.degree();
    const T eps = mp::eps_of<T>();
    std::vector<Cx<T>> z(n);
    for (int i = 0; i < n; ++i) z[i] = Cx<T>::from(start[i]);
    // Separate exact duplicates so the Aberth sum stays finite.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (z[i].re == z[j].re && z[i].im == z[j].im) {
                double bump = 1e-9 * (1 + std::abs(start[i]));
                z[i] += Cx<T>::from(std::polar(bump, 0.7 + i));
            }

    std::vector<char> done(n, 0);
    TierOutcome out;
    int it = 0;
    for (; it < max_iter; ++it) {
        int active = 0;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            Eval<T> e = eval_at(a, z[i]);
            if (e.rel <= T(4 * n) * eps) { done[i] = 1; continue; }
            ++active;
            Cx<T> sum(T(0));
            for (int j = 0; j < n; ++j)
                if (j != i) sum += Cx<T>(T(1)) / (z[i] - z[j]);
            Cx<T> denom = Cx<T>(T(1)) - e.ratio * sum;
            Cx<T> delta = mp::norm2(denom) == 0 ? e.ratio : e.ratio / denom;
            z[i] -= delta;
            if (mp::absc(delta) <= T(4) * eps * mp::absc(z[i])) done[i] = 1;
        }
        if (active == 0) break;
    }
    out.iterations = it;
    out.converged = std::all_of(done.begin(), done.end(), [](char c) { return c != 0; });

    // Newton polish, kept only when it does not increase the residual.
    for (int i = 0; i < n; ++i) {
        Eval<T> e = eval_at(a, z[i]);
        Cx<T> cand = z[i] - e.ratio;
        Eval<T> e2 = eval_at(a, cand);
        if (e2.rel < e.rel) z[i] = cand;
    }
    out.z.resize(n);
    out.fe.resize(n);
    for (int i = 0; i < n; ++i) {
        out.z[i] = z[i].to_cx();
        Eval<T> e = eval_at(a, z[i]);
        out.fe[i] = static_cast<double>(eps * e.fe_scale);
    }
    return out;
}

double rel_dist(cx a, cx b) { return std::abs(a - b) / std::max(1.0, std::abs(a)); }

// Single-linkage groups at 1e-8 relative.
std::vector<int> cluster_labels(const std::vector<cx>& z, double rad) {
    const int n = static_cast<int>(z.size());
    std::vector<int> lab(n);
    for (int i = 0; i < n; ++i) lab[i] = i;
    std::function<int(int)> find = [&](int i) { return lab[i] == i ? i : lab[i] = find(lab[i]); };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rel_dist(z[i], z[j]) <= rad) lab[find(i)] = find(j);
    for (int i = 0; i < n; ++i) lab[i] = find(i);
    return lab;
}

constexpr double kClusterRadius = 1e-8;

bool needs_more_precision(const TierOutcome& t, bool double_tier) {
    const int n = static_cast<int>(t.z.size());
    auto lab = cluster_labels(t.z, kClusterRadius);
    std::vector<int> count(n, 0);
    for (int l : lab) ++count[l];
    for (int i = 0; i < n; ++i) {
        if (count[lab[i]] > 1) continue;
        if (!(t.fe[i] <= 1e-14 * std::max(1.0, std::abs(t.z[i])))) return true;
    }
    if (double_tier) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double d = rel_dist(t.z[i], t.z[j]);
                if (d > 1e-12 && d < 1e-6) return true;
            }
    }
    return !t.converged;
}

double residual_of(const ComplexPolynomial& p, cx r) {
    const int n = p.degree();
    double scale = p.max_abs_coeff() * std::pow(std::max(1.0, std::abs(r)), n);
    if (p.has_hi()) {
        using T = mp::hp;
        const auto& a = p.hi()->c;
        Cx<T> z = Cx<T>::from(r), acc = a[n];
        for (int k = n - 1; k >= 0; --k) acc = acc * z + a[k];
        return static_cast<double>(mp::absc(acc)) / scale;
    }
    return std::abs(evaluate(p, r)) / scale;
}

}  // namespace

RootCountingMeasure find_roots(const ComplexPolynomial& poly, double tol, RootDiagnostics* diag) {
    if (poly.is_zero()) fail_input("zero_polynomial", "find_roots on the zero polynomial");
    if (poly.degree() < 1) fail_input("degree", "find_roots needs degree >= 1");
    if (!(tol > 0)) fail_input("tolerance", "tol must be positive");
    const int n = poly.degree();
    const auto& c = poly.coeffs();

    std::vector<cx> z(n);
    if (n == 1) {
        z[0] = -c[0] / c[1];
    } else {
        double R = fujiwara(c);
        if (!(R > 0) || !std::isfinite(R)) R = 1;
        for (int k = 0; k < n; ++k)
            z[k] = std::polar(R, 2 * std::numbers::pi * k / n + 0.4);
    }

    TierOutcome t;
    int digits = 0, iters = 0;
    if (n == 1 && !poly.has_hi()) {
        t.z = z;
        t.converged = true;
    } else {
        t = aberth<double>(poly, z, 800);
        iters += t.iterations;
        if (needs_more_precision(t, true)) {
            t = aberth<mp::mpf<30>>(poly, t.z, 300); digits = 30; iters += t.iterations;
        }
        if (needs_more_precision(t, false)) {
            t = aberth<mp::mpf<60>>(poly, t.z, 300); digits = 60; iters += t.iterations;
        }
        if (needs_more_precision(t, false)) {
            t = aberth<mp::mpf<120>>(poly, t.z, 300); digits = 120; iters += t.iterations;
        }
        if (needs_more_precision(t, false)) {
            t = aberth<mp::mpf<240>>(poly, t.z, 400); digits = 240; iters += t.iterations;
        }
    }

    // Merge clusters to their mean.
    auto lab = cluster_labels(t.z, kClusterRadius);
    std::vector<cx> sum(n, cx{});
    std::vector<int> cnt(n, 0);
    for (int i = 0; i < n; ++i) { sum[lab[i]] += t.z[i]; ++cnt[lab[i]]; }
    RootCountingMeasure mu;
    mu.roots.resize(n);
    for (int i = 0; i < n; ++i) mu.roots[i] = sum[lab[i]] / double(cnt[lab[i]]);

    double worst = 0;
    for (cx r : mu.roots) worst = std::max(worst, residual_of(poly, r));
    std::sort(mu.roots.begin(), mu.roots.end(), [](cx a, cx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    if (diag) { diag->digits = digits; diag->iterations = iters; diag->max_residual = worst; }
    if (!(worst <= tol)) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "root residual %.3e exceeds tol %.3e (degree %d)", worst, tol, n);
        throw RootFindingError(buf, mu.roots, worst);
    }
    return mu;
}

cx empirical_cauchy(const RootCountingMeasure& mu, cx z) {
    if (mu.n() == 0) fail_input("empty_measure", "measure has no atoms");
    cx acc = 0;
    for (cx r : mu.roots) {
        if (std::abs(z - r) <= kSupportGuard * (1 + std::abs(z)))
            fail_input("on_support", "evaluation point coincides with an atom");
        acc += 1.0 / (z - r);
    }
    return acc / double(mu.n());
}

double empirical_potential(const RootCountingMeasure& mu, cx z) {
    if (mu.n() == 0) fail_input("empty_measure", "measure has no atoms");
    double acc = 0;
    for (cx r : mu.roots) {
        double d = std::abs(z - r);
        if (d <= kSupportGuard * (1 + std::abs(z)))
            fail_input("on_support", "potential is -infinity at an atom");
        acc += std::log(d);
    }
    return acc / double(mu.n());
}

std::string roots_csv(const RootCountingMeasure& mu) {
    std::string s = "re,im\n";
    char buf[80];
    for (cx r : mu.roots) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", r.real(), r.imag());
        s += buf;
    }
    return s;
}

std::string roots_json(const RootCountingMeasure& mu) {
    std::string s = "[";
    char buf[80];
    for (std::size_t i = 0; i < mu.roots.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%s[%.17g,%.17g]", i ? "," : "", mu.roots[i].real(),
                      mu.roots[i].imag());
        s += buf;
    }
    return s + "]";
}

}  // namespace jqd
