#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wlab/algebra/cyclotomic.hpp"
#include "wlab/algebra/rational.hpp"
#include "wlab/errors.hpp"

using namespace wlab;
using namespace wlab::algebra;

namespace {

RationalFunction make(std::vector<Complex> num, std::vector<Complex> den) {
    return RationalFunction(ComplexPolynomial(std::move(num)), ComplexPolynomial(std::move(den)));
}

CycScalar rat(long n, long d = 1) { return CycScalar(Rational(n, d)); }

CycScalar random_cyc(std::mt19937& rng) {
    std::uniform_int_distribution<long> d(-6, 6);
    return CycScalar(std::array<Rational, 4>{d(rng), d(rng), d(rng), d(rng)});
}

} // namespace

TEST_CASE("rational evaluation") {
    RationalFunction r = make({0, 1}, {-1, 1}); // z/(z-1)
    CHECK(std::abs(r.eval(2.0) - 2.0) < 1e-14);

    // 3/(z^3 - mu^3) with mu = 1 at z = 0
    RationalFunction s = make({3}, {-1, 0, 0, 1});
    CHECK(std::abs(s.eval(0.0) - Complex(-3.0)) < 1e-14);

    RationalFunction inv = make({1}, {0, 1}); // 1/z
    CHECK_THROWS_AS(inv.eval(0.0), PoleError);
}

TEST_CASE("rational derivative") {
    RationalFunction inv = make({1}, {0, 1});
    RationalFunction d = inv.derivative(); // -1/z^2
    CHECK(std::abs(d.eval(2.0) - Complex(-0.25)) < 1e-13);
    CHECK(d.numerator().degree() == 0);
    CHECK(d.denominator().degree() == 2);

    RationalFunction zsq = make({0, 0, 1}, {1});
    CHECK(std::abs(zsq.derivative().eval(3.0) - 6.0) < 1e-13);

    // P = z, Q = 1: P Q' - P' Q = -1, the normalized bubble's constant
    ComplexPolynomial P({0, 1}), Q({1});
    ComplexPolynomial w = P * Q.derivative() - P.derivative() * Q;
    CHECK(std::abs(w.eval(0.35) - Complex(-1.0)) < 1e-15);
}

TEST_CASE("rational derivative matches central differences away from poles") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    RationalFunction r = make({1, 2, 1}, {-1, 0, 0, 1}); // (1+2z+z^2)/(z^3-1)
    RationalFunction dr = r.derivative();
    const double h = 1e-5;
    for (int k = 0; k < 50; ++k) {
        Complex z(2.0 + uni(rng), 2.0 + uni(rng));
        Complex fd = (r.eval(z + h) - r.eval(z - h)) / (2.0 * h);
        Complex an = dr.eval(z);
        CHECK(std::abs(fd - an) <= 1e-6 * std::max(1.0, std::abs(an)));
    }
}

TEST_CASE("partial fractions: simple cases") {
    // 1/(z^2-1) = (1/2)/(z-1) - (1/2)/(z+1)
    PartialFractions pf = partial_fractions(make({1}, {-1, 0, 1}));
    REQUIRE(pf.terms.size() == 2);
    REQUIRE(pf.poly.is_zero());
    for (const auto& t : pf.terms) {
        CHECK(t.order == 1);
        if (std::abs(t.pole - Complex(1.0)) < 1e-9)
            CHECK(std::abs(t.coeff - Complex(0.5)) < 1e-11);
        else {
            CHECK(std::abs(t.pole - Complex(-1.0)) < 1e-9);
            CHECK(std::abs(t.coeff - Complex(-0.5)) < 1e-11);
        }
    }

    // polynomial input: empty pole list, polynomial part z
    PartialFractions zpf = partial_fractions(make({0, 1}, {1}));
    CHECK(zpf.terms.empty());
    CHECK(zpf.poly.degree() == 1);
}

TEST_CASE("partial fractions: cube roots of unity, residue oracle") {
    // residue of 3/(z^3-1) at z_k is 3/(3 z_k^2) = 1/z_k^2
    PartialFractions pf = partial_fractions(make({3}, {-1, 0, 0, 1}));
    REQUIRE(pf.terms.size() == 3);
    for (const auto& t : pf.terms) {
        CHECK(t.order == 1);
        CHECK(std::abs(std::pow(t.pole, 3) - 1.0) < 1e-10);
        CHECK(std::abs(t.coeff - 1.0 / (t.pole * t.pole)) < 1e-10);
    }
}

TEST_CASE("partial fractions: double poles and reassembly property") {
    std::mt19937 rng(2026);
    std::uniform_real_distribution<double> uni(-1.5, 1.5);
    for (int trial = 0; trial < 25; ++trial) {
        // well-separated random roots, one doubled
        std::vector<Complex> roots;
        while (roots.size() < 3) {
            Complex cand(uni(rng), uni(rng));
            bool ok = true;
            for (Complex r : roots)
                if (std::abs(cand - r) < 0.4) ok = false;
            if (ok) roots.push_back(cand);
        }
        std::vector<Complex> den_roots{roots[0], roots[0], roots[1], roots[2]};
        ComplexPolynomial den = ComplexPolynomial::from_roots(den_roots);
        ComplexPolynomial num({uni(rng), uni(rng), uni(rng)});
        RationalFunction r(num, den);
        PartialFractions pf = partial_fractions(r);
        for (int s = 0; s < 20; ++s) {
            Complex z(uni(rng) * 2.0, uni(rng) * 2.0);
            bool near = false;
            for (Complex root : den_roots)
                if (std::abs(z - root) < 0.15) near = true;
            if (near) continue;
            Complex a = r.eval(z), b = pf.eval(z);
            CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST_CASE("partial fractions derivative and antiderivative round trip") {
    RationalFunction r = make({3}, {-1, 0, 0, 1});
    PartialFractions pf = partial_fractions(r);
    PartialFractions dpf = pf.derivative();
    Complex z(0.3, 1.2);
    Complex fd = (pf.eval(z + 1e-6) - pf.eval(z - 1e-6)) / 2e-6;
    CHECK(std::abs(dpf.eval(z) - fd) < 1e-6);

    // 3/(z^3-1) has nonzero residues: its primitive needs logarithms
    CHECK_THROWS_AS(pf.antiderivative(), PeriodError);

    // but the derivative of anything is residue-free
    PartialFractions back = dpf.antiderivative();
    CHECK(std::abs(back.eval(z) - pf.eval(z)) < 1e-10);
}

TEST_CASE("partial fractions: near-coincident distinct roots are refused") {
    // two simple roots 3e-8 apart cannot be told from a double root at the
    // working precision; the reassembly check catches the mismatch
    ComplexPolynomial den =
        ComplexPolynomial::from_roots({Complex(1.0), Complex(1.0 + 3e-8), Complex(-1.0)});
    RationalFunction r(ComplexPolynomial({1.0}), den);
    CHECK_THROWS_AS(partial_fractions(r), ClusteredRootsError);
}

TEST_CASE("cyclotomic basics") {
    CycScalar i = CycScalar::i();
    CHECK(i * i == rat(-1));

    CycScalar j = CycScalar::j();
    CHECK(j * j * j == rat(1));
    CHECK(!(j == rat(1)));

    // b = 3a/(2j(j-1)) with a = 3 satisfies 2j(j-1) b = 9 exactly
    CycScalar a = rat(3);
    CycScalar denom = rat(2) * j * (j - rat(1));
    CycScalar b = rat(3) * a * denom.inverse();
    CHECK(denom * b == rat(9));
}

TEST_CASE("cyclotomic field axioms on random triples") {
    std::mt19937 rng(99);
    for (int t = 0; t < 60; ++t) {
        CycScalar x = random_cyc(rng), y = random_cyc(rng), z = random_cyc(rng);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x + (-x) == rat(0));
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == rat(1));
        }
    }
    CHECK_THROWS_AS(rat(0).inverse(), DivisionByZero);
}

TEST_CASE("cyclotomic embedding is a ring homomorphism") {
    std::mt19937 rng(5);
    for (int t = 0; t < 40; ++t) {
        CycScalar x = random_cyc(rng), y = random_cyc(rng);
        CHECK(std::abs((x * y).embed() - x.embed() * y.embed()) < 1e-12 *
                  std::max(1.0, std::abs(x.embed() * y.embed())));
        CHECK(std::abs((x + y).embed() - (x.embed() + y.embed())) < 1e-12);
        // formal conjugation matches complex conjugation on the embedding
        CHECK(std::abs(x.conj().embed() - std::conj(x.embed())) < 1e-12);
        // involution
        CHECK(x.conj().conj() == x);
    }
    CHECK(std::abs(CycScalar::i().embed() - Complex(0, 1)) < 1e-15);
    CHECK(std::abs(CycScalar::j().embed() - std::polar(1.0, 2.0 * kPi / 3.0)) < 1e-15);
}
