#include "jqd/rational_qd.hpp"

#include <algorithm>
#include <cmath>

#include "jqd/errors.hpp"
#include "jqd/roots.hpp"

namespace jqd {

namespace {

cx ipow(cx z, int k) {
    bool inv = k < 0;
    unsigned e = static_cast<unsigned>(inv ? -k : k);
    cx r = 1.0, b = z;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1;
    }
    return inv ? 1.0 / r : r;
}

std::vector<std::pair<cx, int>> grouped_roots(const ComplexPolynomial& p) {
    std::vector<std::pair<cx, int>> out;
    if (p.degree() < 1) return out;
    for (cx r : find_roots(p, 1e-8).roots) {
        bool merged = false;
        for (auto& [z, m] : out)
            if (std::abs(z - r) <= 1e-6 * std::max(1.0, std::abs(z))) {
                z = (z * double(m) + r) / double(m + 1);
                ++m;
                merged = true;
                break;
            }
        if (!merged) out.push_back({r, 1});
    }
    return out;
}

}  // namespace

RationalQD::RationalQD(const ComplexPolynomial& numerator, const ComplexPolynomial& denominator) {
    if (denominator.is_zero()) fail_input("zero_denominator", "denominator must be nonzero");
    if (numerator.is_zero()) fail_input("zero_numerator", "quadratic differential is identically zero");
    K_ = numerator.leading() / denominator.leading();
    auto zs = grouped_roots(numerator);
    auto ps = grouped_roots(denominator);
    for (auto& [z, m] : zs) cps_.push_back({z, m, 0.0});
    for (auto& [w, n] : ps) cps_.push_back({w, -n, 0.0});
    finalize();
}

RationalQD RationalQD::from_factors(cx K, std::vector<std::pair<cx, int>> zeros,
                                    std::vector<std::pair<cx, int>> poles) {
    RationalQD q;
    q.K_ = K;
    for (auto& [z, m] : zeros) {
        bool merged = false;
        for (auto& c : q.cps_)
            if (std::abs(c.z - z) <= 1e-12 * (1 + std::abs(z))) { c.order += m; merged = true; break; }
        if (!merged) q.cps_.push_back({z, m, 0.0});
    }
    for (auto& [w, n] : poles) {
        bool merged = false;
        for (auto& c : q.cps_)
            if (std::abs(c.z - w) <= 1e-12 * (1 + std::abs(w))) { c.order -= n; merged = true; break; }
        if (!merged) q.cps_.push_back({w, -n, 0.0});
    }
    q.finalize();
    return q;
}

RationalQD RationalQD::from_normalized(const NormalizedQD& qd) {
    return from_factors(-1.0, {{qd.p1, 1}, {qd.p2, 1}}, {{1.0, 2}, {-1.0, 2}});
}

void RationalQD::finalize() {
    // Cancel coincident zero/pole pairs.
    for (std::size_t i = 0; i < cps_.size(); ++i)
        for (std::size_t j = i + 1; j < cps_.size(); ++j) {
            auto& a = cps_[i];
            auto& b = cps_[j];
            if (a.order == 0 || b.order == 0) continue;
            if ((a.order > 0) == (b.order > 0)) continue;
            if (std::abs(a.z - b.z) <= 1e-8 * std::max(1.0, std::abs(a.z))) {
                a.order += b.order;
                b.order = 0;
            }
        }
    cps_.erase(std::remove_if(cps_.begin(), cps_.end(), [](const CriticalPoint& c) { return c.order == 0; }),
               cps_.end());
    std::vector<cx> zr, pr;
    scale_ = 1.0;
    for (auto& c : cps_) {
        scale_ = std::max(scale_, std::abs(c.z));
        for (int k = 0; k < std::abs(c.order); ++k) (c.order > 0 ? zr : pr).push_back(c.z);
    }
    num_ = ComplexPolynomial::from_roots(zr, K_);
    den_ = ComplexPolynomial::from_roots(pr, 1.0);
    for (std::size_t i = 0; i < cps_.size(); ++i) cps_[i].lead = reduced(static_cast<int>(i), cps_[i].z);
}

cx RationalQD::operator()(cx z) const {
    cx acc = K_;
    for (const auto& c : cps_) acc *= ipow(z - c.z, c.order);
    return acc;
}

cx RationalQD::reduced(int i, cx z) const {
    cx acc = K_;
    for (int j = 0; j < static_cast<int>(cps_.size()); ++j)
        if (j != i) acc *= ipow(z - cps_[j].z, cps_[j].order);
    return acc;
}

RationalQD RationalQD::rotated(double s) const {
    RationalQD q = *this;
    q.K_ = K_ * std::polar(1.0, -s);
    q.num_ = std::polar(1.0, -s) * num_;
    for (auto& c : q.cps_) c.lead *= std::polar(1.0, -s);
    return q;
}

}  // namespace jqd
