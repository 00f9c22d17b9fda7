#pragma once

#include <vector>

#include "jqd/polynomial.hpp"
#include "jqd/qdclass.hpp"

namespace jqd {

struct CriticalPoint {
    cx z;
    int order = 0;  // > 0 zero multiplicity, < 0 pole order
    cx lead;        // Q(z) ~ lead * (z - z0)^order near z0

    bool is_zero() const { return order > 0; }
    bool is_pole() const { return order < 0; }
};

// Q(z) dz^2 = K prod (z - z_i)^{m_i} / prod (z - w_j)^{n_j} dz^2, kept in
// factored form so evaluation stays accurate next to critical points.
class RationalQD {
public:
    // Roots found numerically; common factors within 1e-8 relative cancel.
    RationalQD(const ComplexPolynomial& numerator, const ComplexPolynomial& denominator);
    static RationalQD from_normalized(const NormalizedQD& qd);
    static RationalQD from_factors(cx K, std::vector<std::pair<cx, int>> zeros,
                                   std::vector<std::pair<cx, int>> poles);

    cx operator()(cx z) const;
    // (z - z0)^{-order} Q(z) for critical point index i (analytic, nonzero at z0).
    cx reduced(int i, cx z) const;

    const ComplexPolynomial& numerator() const { return num_; }
    const ComplexPolynomial& denominator() const { return den_; }
    const std::vector<CriticalPoint>& critical_points() const { return cps_; }
    cx K() const { return K_; }
    double scale() const { return scale_; }

    // e^{-is} Q
    RationalQD rotated(double s) const;

private:
    RationalQD() = default;
    void finalize();

    cx K_ = 1.0;
    std::vector<CriticalPoint> cps_;
    ComplexPolynomial num_, den_;
    double scale_ = 1.0;
};

}  // namespace jqd
