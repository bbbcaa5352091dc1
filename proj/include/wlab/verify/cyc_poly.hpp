#pragma once

#include <map>
#include <string>
#include <vector>

#include "wlab/algebra/cyclotomic.hpp"

namespace wlab::verify {

using algebra::CycScalar;
using algebra::Rational;

// Dense univariate polynomial over Q(zeta_12), lowest degree first.
class CycPoly1 {
  public:
    CycPoly1() = default;
    explicit CycPoly1(std::vector<CycScalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    static CycPoly1 constant(CycScalar a) { return CycPoly1({std::move(a)}); }
    static CycPoly1 variable() { return CycPoly1({CycScalar(0L), CycScalar(1L)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    CycScalar coeff(int k) const { return k >= 0 && k < (int)c_.size() ? c_[k] : CycScalar(); }
    const std::vector<CycScalar>& coeffs() const { return c_; }

    CycPoly1 operator+(const CycPoly1& o) const;
    CycPoly1 operator-(const CycPoly1& o) const;
    CycPoly1 operator*(const CycPoly1& o) const;
    CycPoly1 operator*(const CycScalar& a) const;
    CycPoly1 derivative() const;
    CycScalar eval(const CycScalar& x) const;

  private:
    void trim();
    std::vector<CycScalar> c_;
};

// Exact monic gcd over the field.
CycPoly1 poly_gcd(CycPoly1 a, CycPoly1 b);

// Sparse polynomial in two formal variables over Q(zeta_12). The pair of
// exponents reads (z, zbar) in conjugation-aware contexts and (z, mu) in
// the family-parameter context; only the former uses conj_swap.
class CycPoly2 {
  public:
    using Key = std::pair<int, int>;

    CycPoly2() = default;
    static CycPoly2 constant(CycScalar a);
    static CycPoly2 term(int i, int j, CycScalar a);
    static CycPoly2 from_poly_first(const CycPoly1& p);  // p(z)
    static CycPoly2 from_poly_second(const CycPoly1& p); // p(second variable)

    bool is_zero() const { return t_.empty(); }
    const std::map<Key, CycScalar>& terms() const { return t_; }
    CycScalar coeff(int i, int j) const;
    CycScalar constant_term() const { return coeff(0, 0); }
    CycPoly2 nonconstant_part() const;

    CycPoly2 operator+(const CycPoly2& o) const;
    CycPoly2 operator-(const CycPoly2& o) const;
    CycPoly2 operator-() const;
    CycPoly2 operator*(const CycPoly2& o) const;
    CycPoly2 operator*(const CycScalar& a) const;
    bool operator==(const CycPoly2& o) const { return t_ == o.t_; }

    // Formal conjugation for the (z, zbar) reading: swap exponents and
    // conjugate coefficients. An involutive ring map.
    CycPoly2 conj_swap() const;
    // d/dz (first variable)
    CycPoly2 derivative_first() const;

    Complex eval(Complex first, Complex second) const;
    std::string to_string() const;

  private:
    void insert(const Key& k, const CycScalar& v);
    std::map<Key, CycScalar> t_;
};

} // namespace wlab::verify
