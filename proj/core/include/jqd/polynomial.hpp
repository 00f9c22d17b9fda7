#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace jqd {

using cx = std::complex<double>;

// Extended-precision shadow of the coefficients (defined privately in the library).
struct HiCoeffs;

// Dense polynomial, coefficients ascending by degree. Trailing zeros are
// trimmed on construction; the zero polynomial has no coefficients and
// degree -1.
class ComplexPolynomial {
public:
    ComplexPolynomial() = default;
    explicit ComplexPolynomial(std::vector<cx> coeffs);
    ComplexPolynomial(std::initializer_list<cx> coeffs)
        : ComplexPolynomial(std::vector<cx>(coeffs)) {}

    static ComplexPolynomial from_roots(const std::vector<cx>& roots, cx lead = 1.0);
    static ComplexPolynomial constant(cx c) { return ComplexPolynomial({c}); }
    static ComplexPolynomial monomial(int k, cx c = 1.0);

    const std::vector<cx>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    cx leading() const { return c_.empty() ? cx{} : c_.back(); }
    cx operator[](int k) const { return (k >= 0 && k < (int)c_.size()) ? c_[k] : cx{}; }
    double max_abs_coeff() const;

    // Set by constructors (jacobi_poly) that expected a higher nominal degree.
    bool degree_drop() const { return degree_drop_; }
    int nominal_degree() const { return nominal_degree_ < 0 ? degree() : nominal_degree_; }
    void mark_degree_drop(int nominal) { degree_drop_ = true; nominal_degree_ = nominal; }

    bool has_hi() const { return static_cast<bool>(hi_); }
    const std::shared_ptr<const HiCoeffs>& hi() const { return hi_; }
    void attach_hi(std::shared_ptr<const HiCoeffs> hi) { hi_ = std::move(hi); }

    cx operator()(cx z) const;

    friend ComplexPolynomial operator+(const ComplexPolynomial& a, const ComplexPolynomial& b);
    friend ComplexPolynomial operator-(const ComplexPolynomial& a, const ComplexPolynomial& b);
    friend ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b);
    friend ComplexPolynomial operator*(cx s, const ComplexPolynomial& a);

private:
    std::vector<cx> c_;
    std::shared_ptr<const HiCoeffs> hi_;
    bool degree_drop_ = false;
    int nominal_degree_ = -1;
};

// Horner evaluation; poly must be nonzero.
cx evaluate(const ComplexPolynomial& poly, cx z);

// Returns p and p' at z together.
std::pair<cx, cx> evaluate_with_derivative(const ComplexPolynomial& poly, cx z);

// Degree-0 input yields the zero polynomial (is_zero() == true).
ComplexPolynomial derivative(const ComplexPolynomial& poly);

}  // namespace jqd
