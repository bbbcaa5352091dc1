#pragma once

#include <vector>

#include "wlab/linalg.hpp"

namespace wlab::algebra {

// Dense complex polynomial, coefficients lowest degree first. The zero
// polynomial has an empty coefficient list; otherwise the leading
// coefficient is nonzero.
class ComplexPolynomial {
  public:
    ComplexPolynomial() = default;
    explicit ComplexPolynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs)) { trim(); }
    static ComplexPolynomial constant(Complex a) { return ComplexPolynomial({a}); }
    static ComplexPolynomial monomial(int degree, Complex a = 1.0);
    static ComplexPolynomial from_roots(const std::vector<Complex>& roots, Complex leading = 1.0);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero poly
    const std::vector<Complex>& coeffs() const { return c_; }
    Complex coeff(int k) const { return k >= 0 && k < (int)c_.size() ? c_[k] : Complex(0); }
    Complex leading() const { return c_.empty() ? Complex(0) : c_.back(); }

    Complex eval(Complex z) const;
    ComplexPolynomial derivative() const;
    ComplexPolynomial antiderivative() const; // constant of integration 0

    ComplexPolynomial operator+(const ComplexPolynomial& o) const;
    ComplexPolynomial operator-(const ComplexPolynomial& o) const;
    ComplexPolynomial operator*(const ComplexPolynomial& o) const;
    ComplexPolynomial operator*(Complex a) const;
    ComplexPolynomial operator-() const { return (*this) * Complex(-1.0); }

    // Euclidean division: *this = q * d + r with deg r < deg d, returned
    // as (quotient, remainder).
    std::pair<ComplexPolynomial, ComplexPolynomial> divmod(const ComplexPolynomial& d) const;

    double max_coeff_norm() const;

  private:
    void trim();
    std::vector<Complex> c_;
};

} // namespace wlab::algebra
