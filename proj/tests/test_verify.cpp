#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wlab/errors.hpp"
#include "wlab/surfaces/families.hpp"
#include "wlab/surfaces/frame.hpp"
#include "wlab/verify/certify.hpp"

using namespace wlab;
using namespace wlab::verify;

namespace {

CycPoly1 zvar() { return CycPoly1({CycScalar(0L), CycScalar(1L)}); }
CycPoly1 one() { return CycPoly1({CycScalar(1L)}); }

} // namespace

TEST_CASE("constraint system certified for a = 3 and a = 6") {
    for (long a : {3L, 6L}) {
        CheckReport rep = check_constraints(CycScalar(a));
        CHECK(rep.all_hold());
        CHECK(rep.items.size() == 7);
    }
}

TEST_CASE("perturbed coefficients are reported") {
    Perturbation pert{0, {CycScalar(1L), CycScalar(0L), CycScalar(0L)}};
    CheckReport rep = check_constraints(CycScalar(3L), pert);
    CHECK(!rep.all_hold());
    auto v = rep.violated();
    CHECK(std::find(v.begin(), v.end(), "<a1,a1> = 0") != v.end());
    // the nonzero remainder is printed exactly
    for (const auto& it : rep.items)
        if (!it.holds) CHECK(!it.remainder.empty());
}

TEST_CASE("weierstrass frame identities") {
    // the normalized bubble data (z, 1)
    CheckReport rep = check_weierstrass_identities(zvar(), one());
    CHECK(rep.all_hold());
    CHECK(rep.items.size() == 4);

    // generic coprime pair (z^2, 1 + z)
    CycPoly1 P2({CycScalar(0L), CycScalar(0L), CycScalar(1L)});
    CycPoly1 Q2({CycScalar(1L), CycScalar(1L)});
    CHECK(check_weierstrass_identities(P2, Q2).all_hold());

    // (z, z) violates the gcd precondition
    CHECK_THROWS_AS(check_weierstrass_identities(zvar(), zvar()), UsageError);
}

TEST_CASE("exact conformality of the family") {
    CHECK(conformality_exact(CycScalar(3L)).all_hold());
    CHECK(conformality_exact(CycScalar(6L)).all_hold());
    CheckReport broken = conformality_exact(CycScalar(3L), true);
    CHECK(!broken.all_hold());
    CHECK(!broken.items[0].remainder.empty());
}

TEST_CASE("blow-up series: vanishing below mu^9 and the exact bubble") {
    BlowupSeriesResult blow = blowup_series(CycScalar(3L), {0, 0, 2}, 10);
    CHECK(blow.report.all_hold());

    // the mu^7 and mu^8 coefficients carry no z-dependence
    for (int c = 0; c < 3; ++c) {
        CHECK(blow.phi[c].coeff(7).nonconstant_part().is_zero());
        CHECK(blow.phi[c].coeff(8).nonconstant_part().is_zero());
    }

    // mu^9 nonconstant coefficient = -E(z) with
    // E = 2 Re( z/2 (1,i,0) + z^2/2 (0,0,1) - z^3/6 (1,-i,0) )
    const CycScalar i = CycScalar::i();
    const CycScalar half(Rational(1, 2));
    CycPoly2 z1 = CycPoly2::term(1, 0, CycScalar(1L));
    CycPoly2 z2 = CycPoly2::term(2, 0, CycScalar(1L));
    CycPoly2 z3 = CycPoly2::term(3, 0, CycScalar(1L));
    CycPoly2 ex = (z1 + z1.conj_swap()) * half -
                  (z3 + z3.conj_swap()) * CycScalar(Rational(1, 6));
    CycPoly2 ey = (z1 - z1.conj_swap()) * (half * i) +
                  (z3 - z3.conj_swap()) * (CycScalar(Rational(1, 6)) * i);
    CycPoly2 ez = (z2 + z2.conj_swap()) * half;
    CHECK(blow.mu9_nonconstant[0] == -ex);
    CHECK(blow.mu9_nonconstant[1] == -ey);
    CHECK(blow.mu9_nonconstant[2] == -ez);

    // p-independence of the mu^9 coefficient
    BlowupSeriesResult blow2 = blowup_series(CycScalar(3L), {1, 1, 3}, 10);
    CHECK(blow2.report.all_hold());
    for (int c = 0; c < 3; ++c) CHECK(blow2.mu9_nonconstant[c] == blow.mu9_nonconstant[c]);
}

TEST_CASE("blow-up series: the mu^10 coefficient is constant in z") {
    // order-11 run: the z-dependent error beyond the bubble starts at mu^11,
    // one order beyond the printed remainder bound
    for (auto p : std::vector<ExactPoint>{{0, 0, 2}, {1, 1, 3}}) {
        BlowupSeriesResult blow = blowup_series(CycScalar(3L), p, 11);
        bool mu10_const = true, mu11_const = true;
        for (int c = 0; c < 3; ++c) {
            if (!blow.phi[c].coeff(10).nonconstant_part().is_zero()) mu10_const = false;
            if (!blow.phi[c].coeff(11).nonconstant_part().is_zero()) mu11_const = false;
        }
        CHECK(mu10_const);
        CHECK(!mu11_const);
    }
}

TEST_CASE("series inversion contract") {
    // S * S^{-1} = 1 exactly through the truncation order
    MuSeries S(8);
    S.coeff(0) = CycPoly2::constant(CycScalar(3L));
    S.coeff(2) = CycPoly2::term(1, 0, CycScalar(2L));
    S.coeff(3) = CycPoly2::term(0, 1, CycScalar::i());
    S.coeff(5) = CycPoly2::term(2, 1, CycScalar(Rational(1, 7)));
    MuSeries prod = S * S.inverse();
    CHECK(prod.coeff(0) == CycPoly2::constant(CycScalar(1L)));
    for (int k = 1; k <= 8; ++k) CHECK(prod.coeff(k).is_zero());

    MuSeries bad(4);
    bad.coeff(0) = CycPoly2::term(1, 0, CycScalar(1L)); // nonconstant head
    CHECK_THROWS_AS(bad.inverse(), NonUnitLeadingTerm);
    MuSeries zero(4);
    CHECK_THROWS_AS(zero.inverse(), NonUnitLeadingTerm);
}

TEST_CASE("conjugation is an involution") {
    std::mt19937 rng(12);
    std::uniform_int_distribution<long> d(-5, 5);
    for (int t = 0; t < 20; ++t) {
        CycPoly2 p;
        for (int k = 0; k < 6; ++k) {
            p = p + CycPoly2::term(d(rng) & 3, d(rng) & 3,
                                   CycScalar(std::array<Rational, 4>{d(rng), d(rng), d(rng),
                                                                     d(rng)}));
        }
        CHECK(p.conj_swap().conj_swap() == p);
    }
    MuSeries S(5);
    S.coeff(1) = CycPoly2::term(2, 1, CycScalar::i());
    S.coeff(4) = CycPoly2::term(0, 3, CycScalar::j());
    MuSeries SS = S.conj().conj();
    for (int k = 0; k <= 5; ++k) CHECK(SS.coeff(k) == S.coeff(k));
}

TEST_CASE("embedding consistency with the numeric model") {
    // evaluating the exact series numerically matches the floating-point
    // inverted family at mu = 0.1; order 11 keeps the dropped tail below
    // the 1e-10 comparison threshold on the unit disk
    BlowupSeriesResult blow = blowup_series(CycScalar(3L), {0, 0, 2}, 11);
    surfaces::ImmersionModel phi =
        surfaces::invert(surfaces::family_psi_mu(0.1, 3.0), {Vec3(0, 0, 2)});
    const double mu = 0.1, mu3 = 1e-3;
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> rad(0.0, 1.0), ang(0.0, 2.0 * kPi);
    for (int t = 0; t < 12; ++t) {
        Complex z = std::polar(rad(rng), ang(rng));
        Vec3 numeric = phi.jet(mu3 * z).phi;
        for (int c = 0; c < 3; ++c) {
            Complex series_val = blow.phi[c].eval(mu, z);
            CHECK(std::abs(series_val.imag()) < 1e-14);
            CHECK(std::abs(series_val.real() - numeric(c)) < 1e-10);
        }
    }
}

TEST_CASE("exact and numeric family coefficients agree") {
    ExactFamilyCoefficients fc = exact_family_coefficients(CycScalar(3L));
    surfaces::FamilyCoefficients nc = surfaces::family_coefficients(0.37, 3.0);
    CHECK(std::abs(fc.b.embed() - nc.b) < 1e-13);
    const double mu = 0.37, mu2 = mu * mu;
    const CVec3* num[4] = {&nc.a1, &nc.a2, &nc.a3, &nc.a4};
    for (int k = 0; k < 4; ++k) {
        for (int c = 0; c < 3; ++c) {
            Complex exact_val = fc.a_hat[k][c].eval(0.0, mu) / mu2; // z unused
            CHECK(std::abs(exact_val - (*num[k])(c)) < 1e-12 * std::max(1.0, std::abs(exact_val)));
        }
    }
}
