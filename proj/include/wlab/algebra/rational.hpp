#pragma once

#include <vector>

#include "wlab/algebra/polynomial.hpp"
#include "wlab/algebra/roots.hpp"

namespace wlab::algebra {

// Ratio of complex polynomials, stored reduced (no common roots) with a
// monic denominator. Poles are cached with multiplicities.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(ComplexPolynomial::constant(1.0)) {}
    RationalFunction(ComplexPolynomial num, ComplexPolynomial den);
    static RationalFunction constant(Complex a) {
        return RationalFunction(ComplexPolynomial::constant(a), ComplexPolynomial::constant(1.0));
    }
    static RationalFunction variable() {
        return RationalFunction(ComplexPolynomial::monomial(1), ComplexPolynomial::constant(1.0));
    }

    const ComplexPolynomial& numerator() const { return num_; }
    const ComplexPolynomial& denominator() const { return den_; }
    const std::vector<RootCluster>& poles() const { return poles_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    Complex eval(Complex z) const; // PoleError at (numerical) poles
    RationalFunction derivative() const;

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator*(Complex a) const;

  private:
    void reduce();
    ComplexPolynomial num_, den_;
    std::vector<RootCluster> poles_;
};

// Partial-fraction decomposition: polynomial part plus principal parts
// coeff/(z - pole)^order. Closed under differentiation; antidifferentiation
// is exact when no order-1 terms survive (log-free).
struct PartialFractions {
    struct Term {
        Complex pole;
        int order; // >= 1
        Complex coeff;
    };
    ComplexPolynomial poly;
    std::vector<Term> terms;

    Complex eval(Complex z) const;
    PartialFractions derivative() const;
    // Termwise antiderivative with integration constant 0. Throws
    // PeriodError if any order-1 coefficient is nonzero: the primitive
    // would pick up a logarithm and 2 Re of it a period.
    PartialFractions antiderivative() const;
    RationalFunction to_rational() const;
    double coefficient_scale() const;
};

// Decompose R into polynomial part + principal parts. Residue coefficients
// are read off by small contour integrals around each pole cluster, which
// handles multiple poles without derivative chains. The reassembly is
// verified at sample points; failure signals unresolvably clustered roots.
PartialFractions partial_fractions(const RationalFunction& R);

} // namespace wlab::algebra
