#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "jqd/polynomial.hpp"

namespace jqd::mp {

template <unsigned Digits>
using mpf = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<Digits>,
                                          boost::multiprecision::et_off>;

using hp = mpf<400>;

template <class T>
struct Cx {
    T re{0}, im{0};

    Cx() = default;
    Cx(T r) : re(std::move(r)), im(0) {}
    Cx(T r, T i) : re(std::move(r)), im(std::move(i)) {}
    Cx(int r) : re(r), im(0) {}

    template <class U>
    static Cx from(const Cx<U>& o) {
        return Cx(static_cast<T>(o.re), static_cast<T>(o.im));
    }
    static Cx from(cx z) { return Cx(T(z.real()), T(z.imag())); }
    cx to_cx() const { return {static_cast<double>(re), static_cast<double>(im)}; }

    Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
    Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
    Cx& operator*=(const Cx& o) { *this = *this * o; return *this; }
    Cx& operator/=(const Cx& o) { *this = *this / o; return *this; }

    friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator-(const Cx& a) { return {-a.re, -a.im}; }
    friend Cx operator*(const Cx& a, const Cx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cx operator*(const T& s, const Cx& a) { return {s * a.re, s * a.im}; }
    friend Cx operator/(const Cx& a, const Cx& b) {
        // Smith's algorithm keeps double tier safe from overflow.
        using std::abs;
        if (abs(b.re) >= abs(b.im)) {
            T r = b.im / b.re;
            T d = b.re + b.im * r;
            return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
        }
        T r = b.re / b.im;
        T d = b.re * r + b.im;
        return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
    }
};

template <class T>
T norm2(const Cx<T>& z) { return z.re * z.re + z.im * z.im; }

template <class T>
T absc(const Cx<T>& z) {
    using std::sqrt;
    return sqrt(norm2(z));
}

inline double absc(const Cx<double>& z) { return std::hypot(z.re, z.im); }

template <class T>
T eps_of() { return std::numeric_limits<T>::epsilon(); }

struct HiStore {
    std::vector<Cx<hp>> c;
    std::vector<std::complex<double>> tail;  // c - double(c), rounded to double
};

}  // namespace jqd::mp

namespace jqd {
struct HiCoeffs : mp::HiStore {};

// Builds a double polynomial from extended coefficients, trimming exact zeros,
// and attaches the shadow.
ComplexPolynomial make_hi_polynomial(std::vector<mp::Cx<mp::hp>> coeffs);
}  // namespace jqd
