#include "wlab/surfaces/families.hpp"

#include <cmath>

#include "wlab/errors.hpp"
#include "wlab/surfaces/laurent.hpp"

namespace wlab::surfaces {

using algebra::ComplexPolynomial;
using algebra::PartialFractions;
using algebra::RationalFunction;

namespace {

// Minimal immersion Phi = 2 Re F with F a vector of rational primitives in
// partial-fraction form; all jets are exact termwise derivatives.
class RationalModel final : public ModelImpl {
  public:
    RationalModel(std::array<PartialFractions, 3> F, Topology topo, std::string name)
        : F_(std::move(F)), topo_(std::move(topo)), name_(std::move(name)) {
        for (int i = 0; i < 3; ++i) {
            Fp_[i] = F_[i].derivative();
            Fpp_[i] = Fp_[i].derivative();
        }
        // evaluation singularities: every pole of Phi or Phi_z
        for (int i = 0; i < 3; ++i) {
            for (const auto& t : F_[i].terms) {
                bool known = false;
                for (Complex s : singular_)
                    if (std::abs(s - t.pole) < 1e-12) known = true;
                if (!known) singular_.push_back(t.pole);
            }
        }
        singular_at_infinity_ = false;
        for (const auto& e : topo_.ends) singular_at_infinity_ |= e.at_infinity;
        for (const auto& bp : topo_.branch_points) singular_at_infinity_ |= bp.at_infinity;
    }

    Jet2 jet(Complex z) const override {
        for (Complex s : singular_)
            if (std::abs(z - s) < 1e-12 * std::max(1.0, std::abs(s)))
                throw SingularPoint("jet at a pole of the immersion");
        Jet2 out;
        CVec3 F, Fp, Fpp;
        for (int i = 0; i < 3; ++i) {
            F(i) = F_[i].eval(z);
            Fp(i) = Fp_[i].eval(z);
            Fpp(i) = Fpp_[i].eval(z);
        }
        out.phi = 2.0 * real(F);
        out.phi_z = Fp;
        out.phi_zz = Fpp;
        out.phi_zzbar = Vec3::Zero();
        return out;
    }

    const Topology& topology() const override { return topo_; }
    bool minimal() const override { return true; }
    std::string name() const override { return name_; }
    const std::vector<Complex>& singular_points() const override { return singular_; }
    bool singular_at_infinity() const override { return singular_at_infinity_; }

    const std::array<PartialFractions, 3>& primitive() const { return F_; }
    const std::array<PartialFractions, 3>& derivative() const { return Fp_; }

  private:
    std::array<PartialFractions, 3> F_, Fp_, Fpp_;
    Topology topo_;
    std::string name_;
    std::vector<Complex> singular_;
    bool singular_at_infinity_ = true;
};

// Local minimal model from Laurent data of the primitive.
class LaurentModel final : public ModelImpl {
  public:
    LaurentModel(std::array<LaurentSeries, 3> F, double max_radius, Topology topo,
                 std::string name)
        : F_(std::move(F)), max_radius_(max_radius), topo_(std::move(topo)),
          name_(std::move(name)) {
        for (int i = 0; i < 3; ++i) {
            Fp_[i] = F_[i].derivative();
            Fpp_[i] = Fp_[i].derivative();
        }
        singular_.push_back(0.0);
    }

    Jet2 jet(Complex z) const override {
        double r = std::abs(z);
        if (r == 0.0) throw SingularPoint("jet at the lattice point");
        if (r > max_radius_)
            throw OutOfDomain("local elliptic model valid only on |z| <= " +
                              std::to_string(max_radius_));
        Jet2 out;
        CVec3 F, Fp, Fpp;
        for (int i = 0; i < 3; ++i) {
            F(i) = F_[i].eval(z);
            Fp(i) = Fp_[i].eval(z);
            Fpp(i) = Fpp_[i].eval(z);
        }
        out.phi = 2.0 * real(F);
        out.phi_z = Fp;
        out.phi_zz = Fpp;
        out.phi_zzbar = Vec3::Zero();
        return out;
    }

    const Topology& topology() const override { return topo_; }
    bool minimal() const override { return true; }
    std::string name() const override { return name_; }
    const std::vector<Complex>& singular_points() const override { return singular_; }
    bool singular_at_infinity() const override { return true; }

  private:
    std::array<LaurentSeries, 3> F_, Fp_, Fpp_;
    double max_radius_;
    Topology topo_;
    std::string name_;
    std::vector<Complex> singular_;
};

PartialFractions poly_pf(ComplexPolynomial p) {
    PartialFractions out;
    out.poly = std::move(p);
    return out;
}

} // namespace

std::vector<std::string> NormalizedBubbleData::violations() const {
    std::vector<std::string> out;
    if (theta <= 0 || theta % 2 != 0) out.push_back("theta must be a positive even integer");
    if (2 * P.degree() > theta || 2 * Q.degree() > theta)
        out.push_back("deg P, deg Q must be <= theta/2");
    if (std::abs(P.eval(0.0)) > 1e-12) out.push_back("P(0) != 0");
    if (std::abs(Q.eval(0.0) - 1.0) > 1e-12) out.push_back("Q(0) != 1");
    if (std::abs(P.derivative().eval(0.0) - 1.0) > 1e-12) out.push_back("P'(0) != 1");
    if (std::abs(P.derivative().derivative().eval(0.0) - 2.0 * Q.derivative().eval(0.0)) > 1e-12)
        out.push_back("P''(0) != 2 Q'(0)");
    // numerical coprimality: no shared roots
    if (P.degree() > 0 && Q.degree() > 0) {
        for (const auto& rp : algebra::clustered_roots(P))
            for (const auto& rq : algebra::clustered_roots(Q))
                if (std::abs(rp.location - rq.location) < 1e-8)
                    out.push_back("P and Q share a root");
    }
    return out;
}

ImmersionModel plane() {
    std::array<PartialFractions, 3> F{
        poly_pf(ComplexPolynomial({0.0, 0.5})),
        poly_pf(ComplexPolynomial({0.0, Complex(0, 0.5)})),
        poly_pf(ComplexPolynomial()),
    };
    Topology topo;
    topo.euler_char = 2;
    topo.ends.push_back({0.0, true, 2});
    return ImmersionModel(std::make_shared<RationalModel>(std::move(F), topo, "plane"));
}

ImmersionModel enneper_variant(Complex c) {
    // F = ( z/2 - c^2 z^3/6, i z/2 + i c^2 z^3/6, c z^2/2 )
    Complex c2 = c * c;
    std::array<PartialFractions, 3> F{
        poly_pf(ComplexPolynomial({0.0, 0.5, 0.0, -c2 / 6.0})),
        poly_pf(ComplexPolynomial({0.0, Complex(0, 0.5), 0.0, Complex(0, 1) * c2 / 6.0})),
        poly_pf(ComplexPolynomial({0.0, 0.0, c / 2.0})),
    };
    Topology topo;
    topo.euler_char = 2;
    topo.ends.push_back({0.0, true, 4});
    return ImmersionModel(std::make_shared<RationalModel>(std::move(F), topo, "enneper"));
}

ImmersionModel enneper() { return enneper_variant(1.0); }

ImmersionModel lopez(Complex a) {
    // F = (3/(2z^3)) (1,i,0) + (a^2 z/8) (1,-i,0) + (3a/(2z)) (0,0,1)
    Complex a2 = a * a;
    PartialFractions Fx = poly_pf(ComplexPolynomial({0.0, a2 / 8.0}));
    Fx.terms.push_back({0.0, 3, 1.5});
    PartialFractions Fy = poly_pf(ComplexPolynomial({0.0, Complex(0, -1) * a2 / 8.0}));
    Fy.terms.push_back({0.0, 3, Complex(0, 1.5)});
    PartialFractions Fz;
    Fz.terms.push_back({0.0, 1, 1.5 * a});
    Topology topo;
    topo.euler_char = 2;
    topo.ends.push_back({0.0, false, 4}); // planar end of multiplicity 3
    topo.ends.push_back({0.0, true, 2});  // simple planar end
    return ImmersionModel(
        std::make_shared<RationalModel>(std::array<PartialFractions, 3>{Fx, Fy, Fz}, topo,
                                        "lopez"));
}

FamilyCoefficients family_coefficients(double mu, Complex a) {
    const Complex j(-0.5, std::sqrt(3.0) / 2.0);
    const Complex i(0, 1);
    FamilyCoefficients fc;
    fc.b = 3.0 * a / (2.0 * j * (j - 1.0));
    const CVec3 eplus(1.0, i, 0.0);
    const CVec3 eminus(1.0, -i, 0.0);
    const CVec3 e3(0.0, 0.0, 1.0);
    const double mu2 = mu * mu;
    fc.a1 = eplus / (2.0 * mu2);
    fc.a2 = (j / (2.0 * mu2)) * eplus - (mu2 * fc.b * fc.b / 2.0) * eminus + fc.b * j * j * e3;
    fc.a3 = (j * j / (2.0 * mu2)) * eplus - (mu2 * fc.b * fc.b / 2.0) * eminus - fc.b * j * e3;
    // closed form of -(a1 + j a2 + j^2 a3)/(3 mu^2); the defining formula
    // cancels catastrophically in doubles for small mu
    fc.a4 = -(fc.b * fc.b / 6.0) * eminus;
    return fc;
}

ImmersionModel family_psi_mu(double mu, Complex a) {
    if (!(mu > 0)) throw UsageError("family parameter mu must be positive");
    const Complex j(-0.5, std::sqrt(3.0) / 2.0);
    FamilyCoefficients fc = family_coefficients(mu, a);
    const Complex poles[3] = {mu, mu * j, mu * j * j};
    const CVec3* coeffs[3] = {&fc.a1, &fc.a2, &fc.a3};

    std::array<PartialFractions, 3> F;
    for (int c = 0; c < 3; ++c) {
        F[c].poly = ComplexPolynomial({0.0, fc.a4(c)});
        for (int k = 0; k < 3; ++k) F[c].terms.push_back({poles[k], 1, (*coeffs[k])(c)});
    }
    Topology topo;
    topo.euler_char = 2;
    for (int k = 0; k < 3; ++k) topo.ends.push_back({poles[k], false, 2});
    topo.ends.push_back({0.0, true, 2});
    return ImmersionModel(std::make_shared<RationalModel>(std::move(F), topo, "psi-mu"));
}

ImmersionModel weierstrass_model(const WeierstrassData& data, const Topology& topology) {
    const RationalFunction& f = data.f;
    const RationalFunction& g = data.g;
    RationalFunction g2 = g * g;

    // compatibility: f g^2 must stay finite at every pole of g
    RationalFunction fg2 = f * g2;
    for (const auto& p : g.poles()) {
        bool still_pole = false;
        for (const auto& q : fg2.poles())
            if (std::abs(p.location - q.location) < 1e-8) still_pole = true;
        for (const auto& q : f.poles())
            if (std::abs(p.location - q.location) < 1e-8) still_pole = false; // f's own pole
        if (still_pole)
            throw UsageError("Weierstrass data: f lacks zeros of order 2k at a pole of g");
    }

    const Complex i(0, 1);
    RationalFunction half = RationalFunction::constant(0.5);
    std::array<RationalFunction, 3> phi_z{
        half * f * (RationalFunction::constant(1.0) - g2),
        half * f * (RationalFunction::constant(1.0) + g2) * i,
        f * g,
    };
    std::array<PartialFractions, 3> F;
    for (int c = 0; c < 3; ++c) F[c] = algebra::partial_fractions(phi_z[c]).antiderivative();
    return ImmersionModel(
        std::make_shared<RationalModel>(std::move(F), topology, "weierstrass"));
}

ImmersionModel chen_gackstatter_local(const elliptic::EllipticContext& ctx) {
    // wp and wp' as Laurent data
    const int top_power = 2 * ctx.depth - 2;
    std::vector<Complex> wp_c(top_power + 3, Complex(0)); // powers -2 .. top
    wp_c[0] = 1.0;                                        // z^{-2}
    for (int k = 2; k <= ctx.depth; ++k) wp_c[2 * k - 2 + 2] = ctx.coeff(k);
    LaurentSeries wp(-2, wp_c);
    LaurentSeries wp_prime = wp.derivative();

    // (f,g) = (2 wp, A wp'/wp) and wp'^2/wp = 4 wp^2 - g2, so
    // Phi_z = (wp - A^2(4 wp^2 - g2))(1,i,0)-part + ... splits as
    // alpha = wp, beta = -A^2 (4 wp^2 - g2), gamma = 2 A wp'.
    const double A = ctx.A;
    LaurentSeries wp2 = (wp * wp).truncated(top_power);
    LaurentSeries beta =
        (wp2 * Complex(-4.0 * A * A) + LaurentSeries::term(0, A * A * ctx.g2)).truncated(top_power);
    LaurentSeries alpha = wp;
    LaurentSeries gamma = wp_prime * Complex(2.0 * A);

    const Complex i(0, 1);
    std::array<LaurentSeries, 3> phi_z{alpha + beta, (alpha + beta * Complex(-1.0)) * i, gamma};
    std::array<LaurentSeries, 3> F;
    for (int c = 0; c < 3; ++c) F[c] = phi_z[c].antiderivative();

    Topology topo;
    topo.euler_char = 0; // genus-1 surface; only the local germ is modelled
    topo.ends.push_back({0.0, false, 4});
    return ImmersionModel(
        std::make_shared<LaurentModel>(std::move(F), 0.45, topo, "chen-gackstatter"));
}

namespace {

// Assemble a family of partial-fraction forms over one shared polynomial
// denominator: p_k/D with D the product of all pole factors. Exact
// polynomial arithmetic, no root finding, so repeated poles cannot smear.
struct CommonDenominator {
    ComplexPolynomial den;
    std::vector<ComplexPolynomial> nums;
};

CommonDenominator over_common_denominator(const std::vector<const PartialFractions*>& fns) {
    struct PoleRec {
        Complex z;
        int order;
    };
    std::vector<PoleRec> poles;
    for (const auto* f : fns) {
        for (const auto& t : f->terms) {
            bool found = false;
            for (auto& p : poles) {
                if (std::abs(p.z - t.pole) < 1e-10 * std::max(1.0, std::abs(t.pole))) {
                    p.order = std::max(p.order, t.order);
                    found = true;
                }
            }
            if (!found) poles.push_back({t.pole, t.order});
        }
    }
    CommonDenominator out;
    out.den = ComplexPolynomial::constant(1.0);
    for (const auto& p : poles)
        for (int k = 0; k < p.order; ++k)
            out.den = out.den * ComplexPolynomial({-p.z, Complex(1)});

    for (const auto* f : fns) {
        ComplexPolynomial num = f->poly * out.den;
        for (const auto& t : f->terms) {
            // D / (z - pole)^order, assembled factor by factor
            ComplexPolynomial cof = ComplexPolynomial::constant(t.coeff);
            for (const auto& p : poles) {
                int pow = p.order;
                if (std::abs(p.z - t.pole) < 1e-10 * std::max(1.0, std::abs(t.pole)))
                    pow -= t.order;
                for (int k = 0; k < pow; ++k) cof = cof * ComplexPolynomial({-p.z, Complex(1)});
            }
            num = num + cof;
        }
        out.nums.push_back(num);
    }
    return out;
}

} // namespace

algebra::RationalFunction gauss_map(const ImmersionModel& model) {
    const auto* rm = dynamic_cast<const RationalModel*>(model.impl());
    if (!rm) throw UsageError("gauss_map requires a rational immersion model");
    const auto& Fp = rm->derivative();
    // Weierstrass f = Phi_z,x - i Phi_z,y and g = Phi_z,z / f; putting the
    // components over one exact denominator cancels it symbolically, so g
    // reduces to a ratio of the two low-degree numerators.
    CommonDenominator cd = over_common_denominator({&Fp[0], &Fp[1], &Fp[2]});
    ComplexPolynomial nf = cd.nums[0] - cd.nums[1] * Complex(0, 1);
    return RationalFunction(cd.nums[2], nf);
}

} // namespace wlab::surfaces
