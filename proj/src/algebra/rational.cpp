#include "wlab/algebra/rational.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "wlab/errors.hpp"

namespace wlab::algebra {

namespace {
constexpr double kCommonRootTol = 1e-8;
constexpr double kPoleEvalTol = 1e-13;
} // namespace

RationalFunction::RationalFunction(ComplexPolynomial num, ComplexPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = ComplexPolynomial::constant(1.0);
        poles_.clear();
        return;
    }
    if (den_.degree() > 0 && num_.degree() > 0) {
        auto nroots = clustered_roots(num_);
        auto droots = clustered_roots(den_);
        double scale = 1.0;
        for (auto& r : nroots) scale = std::max(scale, std::abs(r.location));
        for (auto& r : droots) scale = std::max(scale, std::abs(r.location));

        bool cancelled = false;
        for (auto& dr : droots) {
            for (auto& nr : nroots) {
                if (nr.multiplicity == 0 || dr.multiplicity == 0) continue;
                if (std::abs(nr.location - dr.location) < kCommonRootTol * scale) {
                    int m = std::min(nr.multiplicity, dr.multiplicity);
                    nr.multiplicity -= m;
                    dr.multiplicity -= m;
                    cancelled = true;
                }
            }
        }
        if (cancelled) {
            std::vector<Complex> nrem, drem;
            for (auto& r : nroots)
                for (int k = 0; k < r.multiplicity; ++k) nrem.push_back(r.location);
            for (auto& r : droots)
                for (int k = 0; k < r.multiplicity; ++k) drem.push_back(r.location);
            num_ = ComplexPolynomial::from_roots(nrem, num_.leading());
            den_ = ComplexPolynomial::from_roots(drem, den_.leading());
        }
    }
    // monic denominator
    Complex lead = den_.leading();
    num_ = num_ * (Complex(1.0) / lead);
    den_ = den_ * (Complex(1.0) / lead);
    poles_ = den_.degree() > 0 ? clustered_roots(den_) : std::vector<RootCluster>{};
}

Complex RationalFunction::eval(Complex z) const {
    for (const auto& p : poles_) {
        if (std::abs(z - p.location) < kPoleEvalTol * std::max(1.0, std::abs(p.location)))
            throw PoleError("rational function evaluated at a pole");
    }
    Complex d = den_.eval(z);
    if (d == Complex(0)) throw PoleError("rational function evaluated at a pole");
    return num_.eval(z) / d;
}

RationalFunction RationalFunction::derivative() const {
    ComplexPolynomial n = num_.derivative() * den_ - num_ * den_.derivative();
    return RationalFunction(n, den_ * den_);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisionByZero("rational function division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator*(Complex a) const {
    return RationalFunction(num_ * a, den_);
}

Complex PartialFractions::eval(Complex z) const {
    Complex acc = poly.eval(z);
    for (const auto& t : terms) {
        Complex d = z - t.pole;
        Complex p = d;
        for (int k = 1; k < t.order; ++k) p *= d;
        acc += t.coeff / p;
    }
    return acc;
}

PartialFractions PartialFractions::derivative() const {
    PartialFractions out;
    out.poly = poly.derivative();
    out.terms.reserve(terms.size());
    for (const auto& t : terms)
        out.terms.push_back({t.pole, t.order + 1, -double(t.order) * t.coeff});
    return out;
}

PartialFractions PartialFractions::antiderivative() const {
    PartialFractions out;
    out.poly = poly.antiderivative();
    const double scale = coefficient_scale();
    for (const auto& t : terms) {
        if (t.order == 1) {
            if (std::abs(t.coeff) > 1e-9 * scale)
                throw PeriodError("antiderivative needs a logarithm: residue " +
                                  std::to_string(std::abs(t.coeff)) + " at a pole");
            continue; // numerically zero residue
        }
        out.terms.push_back({t.pole, t.order - 1, t.coeff / double(1 - t.order)});
    }
    return out;
}

RationalFunction PartialFractions::to_rational() const {
    RationalFunction acc(poly, ComplexPolynomial::constant(1.0));
    for (const auto& t : terms) {
        ComplexPolynomial lin({-t.pole, Complex(1)});
        ComplexPolynomial den = ComplexPolynomial::constant(1.0);
        for (int k = 0; k < t.order; ++k) den = den * lin;
        acc = acc + RationalFunction(ComplexPolynomial::constant(t.coeff), den);
    }
    return acc;
}

double PartialFractions::coefficient_scale() const {
    double s = poly.max_coeff_norm();
    for (const auto& t : terms) s = std::max(s, std::abs(t.coeff));
    return s > 0 ? s : 1.0;
}

PartialFractions partial_fractions(const RationalFunction& R) {
    PartialFractions out;
    out.poly = R.numerator().divmod(R.denominator()).first;

    const auto& poles = R.poles();
    for (size_t i = 0; i < poles.size(); ++i) {
        // contour radius: half the gap to the nearest other pole
        double rho = 0.5;
        for (size_t j = 0; j < poles.size(); ++j) {
            if (j == i) continue;
            rho = std::min(rho, 0.5 * std::abs(poles[i].location - poles[j].location));
        }
        const int K = 128;
        const Complex z0 = poles[i].location;
        std::vector<Complex> samples(K);
        for (int k = 0; k < K; ++k) {
            double th = 2.0 * kPi * k / K;
            samples[k] = R.eval(z0 + rho * Complex(std::cos(th), std::sin(th)));
        }
        for (int l = 1; l <= poles[i].multiplicity; ++l) {
            Complex acc(0);
            for (int k = 0; k < K; ++k) {
                double th = 2.0 * kPi * k / K;
                acc += samples[k] * std::pow(rho, l) * Complex(std::cos(l * th), std::sin(l * th));
            }
            acc /= double(K);
            out.terms.push_back({z0, l, acc});
        }
    }
    // prune numerically-zero coefficients
    double scale = out.coefficient_scale();
    std::vector<PartialFractions::Term> kept;
    for (const auto& t : out.terms)
        if (std::abs(t.coeff) > 1e-11 * scale) kept.push_back(t);
    out.terms = std::move(kept);

    // reassembly check at deterministic sample points
    double err = 0.0, ref = 0.0;
    std::mt19937 rng(20260809);
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    int checked = 0;
    while (checked < 20) {
        Complex z(uni(rng), uni(rng));
        bool near_pole = false;
        for (const auto& p : poles)
            if (std::abs(z - p.location) < 0.05) near_pole = true;
        if (near_pole) continue;
        Complex a = R.eval(z), b = out.eval(z);
        err = std::max(err, std::abs(a - b));
        ref = std::max(ref, std::abs(a));
        ++checked;
    }
    if (err > 1e-9 * std::max(1.0, ref))
        throw ClusteredRootsError("partial fractions reassembly failed: pole clusters unresolved");
    return out;
}

} // namespace wlab::algebra
