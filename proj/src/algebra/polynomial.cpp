#include "wlab/algebra/polynomial.hpp"

#include <cmath>

#include "wlab/errors.hpp"

namespace wlab::algebra {

namespace {
// Coefficients this far below the polynomial's own scale are arithmetic
// debris, not data.
constexpr double kTrimRel = 1e-13;
} // namespace

void ComplexPolynomial::trim() {
    double scale = 0.0;
    for (const auto& a : c_) scale = std::max(scale, std::abs(a));
    if (scale == 0.0) {
        c_.clear();
        return;
    }
    while (!c_.empty() && std::abs(c_.back()) <= kTrimRel * scale) c_.pop_back();
}

ComplexPolynomial ComplexPolynomial::monomial(int degree, Complex a) {
    std::vector<Complex> c(degree + 1, Complex(0));
    c[degree] = a;
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::from_roots(const std::vector<Complex>& roots, Complex leading) {
    ComplexPolynomial p = constant(leading);
    for (Complex r : roots) p = p * ComplexPolynomial({-r, Complex(1)});
    return p;
}

Complex ComplexPolynomial::eval(Complex z) const {
    Complex acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

ComplexPolynomial ComplexPolynomial::derivative() const {
    if (c_.size() <= 1) return ComplexPolynomial();
    std::vector<Complex> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Complex(double(k));
    return ComplexPolynomial(std::move(d));
}

ComplexPolynomial ComplexPolynomial::antiderivative() const {
    if (c_.empty()) return ComplexPolynomial();
    std::vector<Complex> d(c_.size() + 1, Complex(0));
    for (size_t k = 0; k < c_.size(); ++k) d[k + 1] = c_[k] / Complex(double(k + 1));
    return ComplexPolynomial(std::move(d));
}

ComplexPolynomial ComplexPolynomial::operator+(const ComplexPolynomial& o) const {
    std::vector<Complex> d(std::max(c_.size(), o.c_.size()), Complex(0));
    for (size_t k = 0; k < c_.size(); ++k) d[k] += c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) d[k] += o.c_[k];
    return ComplexPolynomial(std::move(d));
}

ComplexPolynomial ComplexPolynomial::operator-(const ComplexPolynomial& o) const {
    return *this + (o * Complex(-1.0));
}

ComplexPolynomial ComplexPolynomial::operator*(const ComplexPolynomial& o) const {
    if (is_zero() || o.is_zero()) return ComplexPolynomial();
    std::vector<Complex> d(c_.size() + o.c_.size() - 1, Complex(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) d[i + j] += c_[i] * o.c_[j];
    return ComplexPolynomial(std::move(d));
}

ComplexPolynomial ComplexPolynomial::operator*(Complex a) const {
    std::vector<Complex> d = c_;
    for (auto& x : d) x *= a;
    return ComplexPolynomial(std::move(d));
}

std::pair<ComplexPolynomial, ComplexPolynomial> ComplexPolynomial::divmod(
    const ComplexPolynomial& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (degree() < d.degree()) return {ComplexPolynomial(), *this};
    std::vector<Complex> rem = c_;
    std::vector<Complex> quo(degree() - d.degree() + 1, Complex(0));
    for (int k = degree() - d.degree(); k >= 0; --k) {
        Complex f = rem[k + d.degree()] / d.leading();
        quo[k] = f;
        for (int j = 0; j <= d.degree(); ++j) rem[k + j] -= f * d.c_[j];
    }
    return {ComplexPolynomial(std::move(quo)), ComplexPolynomial(std::move(rem))};
}

double ComplexPolynomial::max_coeff_norm() const {
    double m = 0.0;
    for (const auto& a : c_) m = std::max(m, std::abs(a));
    return m;
}

} // namespace wlab::algebra
