#include "jqd/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "jqd/errors.hpp"
#include "mp.hpp"

namespace jqd {

ComplexPolynomial::ComplexPolynomial(std::vector<cx> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == cx{}) c_.pop_back();
}

ComplexPolynomial ComplexPolynomial::from_roots(const std::vector<cx>& roots, cx lead) {
    std::vector<cx> c{lead};
    for (cx r : roots) {
        std::vector<cx> next(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::monomial(int k, cx c) {
    std::vector<cx> v(k + 1);
    v[k] = c;
    return ComplexPolynomial(std::move(v));
}

double ComplexPolynomial::max_abs_coeff() const {
    double m = 0;
    for (cx a : c_) m = std::max(m, std::abs(a));
    return m;
}

cx ComplexPolynomial::operator()(cx z) const { return evaluate(*this, z); }

ComplexPolynomial operator+(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    std::vector<cx> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator-(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    return a + cx(-1.0) * b;
}

ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<cx> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator*(cx s, const ComplexPolynomial& a) {
    std::vector<cx> c(a.c_);
    for (auto& v : c) v *= s;
    return ComplexPolynomial(std::move(c));
}

namespace {

// Double-double scalar: value hi + lo with |lo| <= ulp(hi) / 2.
struct DD {
    double hi = 0, lo = 0;
};

DD two_sum(double a, double b) {
    double s = a + b, bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

DD add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return two_sum(s.hi, lo);
}

DD mul(DD a, double b) {
    double p = a.hi * b;
    double e = std::fma(a.hi, b, -p);
    return two_sum(p, e + a.lo * b);
}

DD neg(DD a) { return {-a.hi, -a.lo}; }

// Horner in double-double on the coefficients plus their rounding tails.
cx evaluate_dd(const std::vector<cx>& c, const std::vector<cx>& tail, cx z) {
    DD re{c.back().real(), tail.back().real()}, im{c.back().imag(), tail.back().imag()};
    for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
        DD nr = add(mul(re, z.real()), neg(mul(im, z.imag())));
        DD ni = add(mul(re, z.imag()), mul(im, z.real()));
        re = add(nr, DD{c[k].real(), tail[k].real()});
        im = add(ni, DD{c[k].imag(), tail[k].imag()});
    }
    return {re.hi + re.lo, im.hi + im.lo};
}

}  // namespace

cx evaluate(const ComplexPolynomial& poly, cx z) {
    if (poly.is_zero()) fail_input("zero_polynomial", "evaluate on the zero polynomial");
    const auto& c = poly.coeffs();
    if (poly.has_hi() && poly.hi()->tail.size() == c.size()) return evaluate_dd(c, poly.hi()->tail, z);
    cx acc = c.back();
    for (int k = poly.degree() - 1; k >= 0; --k) acc = acc * z + c[k];
    return acc;
}

std::pair<cx, cx> evaluate_with_derivative(const ComplexPolynomial& poly, cx z) {
    if (poly.is_zero()) fail_input("zero_polynomial", "evaluate on the zero polynomial");
    const auto& c = poly.coeffs();
    cx p = c.back(), dp = 0.0;
    for (int k = poly.degree() - 1; k >= 0; --k) {
        dp = dp * z + p;
        p = p * z + c[k];
    }
    return {p, dp};
}

ComplexPolynomial derivative(const ComplexPolynomial& poly) {
    if (poly.degree() < 1) return {};
    if (poly.has_hi()) {
        const auto& h = poly.hi()->c;
        std::vector<mp::Cx<mp::hp>> d(h.size() - 1);
        for (std::size_t k = 1; k < h.size(); ++k) d[k - 1] = mp::hp(k) * h[k];
        return make_hi_polynomial(std::move(d));
    }
    std::vector<cx> d(poly.degree());
    for (int k = 1; k <= poly.degree(); ++k) d[k - 1] = double(k) * poly.coeffs()[k];
    return ComplexPolynomial(std::move(d));
}

ComplexPolynomial make_hi_polynomial(std::vector<mp::Cx<mp::hp>> coeffs) {
    while (!coeffs.empty() && coeffs.back().re == 0 && coeffs.back().im == 0) coeffs.pop_back();
    std::vector<cx> lo(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) lo[k] = coeffs[k].to_cx();
    ComplexPolynomial p(std::move(lo));
    // A coefficient can underflow double while being nonzero in hp; keep the
    // two representations the same length.
    coeffs.resize(p.coeffs().size());
    auto store = std::make_shared<HiCoeffs>();
    store->tail.resize(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        mp::Cx<mp::hp> r = coeffs[k];
        r.re -= mp::hp(p.coeffs()[k].real());
        r.im -= mp::hp(p.coeffs()[k].imag());
        store->tail[k] = r.to_cx();
    }
    store->c = std::move(coeffs);
    p.attach_hi(std::move(store));
    return p;
}

}  // namespace jqd
