#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wlab/energy/report.hpp"
#include "wlab/errors.hpp"
#include "wlab/surfaces/families.hpp"

using namespace wlab;
using namespace wlab::energy;
using namespace wlab::surfaces;

namespace {

const Vec3 kCenter(0, 0, 2);

EnergyReport report_for(const ImmersionModel& m, double tol = 1e-3) {
    return energy_report(m, QuadratureSpec::for_model(m, tol));
}

} // namespace

TEST_CASE("enneper total curvature matches its branched count") {
    // one end of multiplicity 3 on the sphere: 2 pi (2 - 4) = -4 pi
    ImmersionModel m = enneper();
    EnergyReport rep = report_for(m);
    CHECK(rep.gauss_bonnet_predicted == doctest::Approx(-4.0 * kPi).epsilon(1e-14));
    CHECK(rep.gauss.value == doctest::Approx(-4.0 * kPi).epsilon(5e-3));
    // E = -2 int K for a minimal model: the bubble carries 8 pi
    CHECK(rep.total_curv.value == doctest::Approx(8.0 * kPi).epsilon(5e-3));
    // exact short-circuit for int H^2 on minimal models
    CHECK(rep.willmore.value == 0.0);
    CHECK(rep.willmore.panels == 0);
}

TEST_CASE("four-ended family at mu = 0.3") {
    EnergyReport rep = report_for(family_psi_mu(0.3, 3.0));
    CHECK(rep.gauss.value == doctest::Approx(-12.0 * kPi).epsilon(5e-3));
    CHECK(rep.tracefree.value == doctest::Approx(24.0 * kPi).epsilon(5e-3));
    CHECK(rep.total_curv.value == doctest::Approx(24.0 * kPi).epsilon(5e-3));
    CHECK(rep.gauss_bonnet_predicted == doctest::Approx(-12.0 * kPi).epsilon(1e-14));
}

TEST_CASE("limit surface energies") {
    EnergyReport rep = report_for(lopez(3.0));
    CHECK(rep.gauss.value == doctest::Approx(-8.0 * kPi).epsilon(5e-3));
    CHECK(rep.tracefree.value == doctest::Approx(16.0 * kPi).epsilon(5e-3));
}

TEST_CASE("inverted family and inverted limit: the closed Willmore table") {
    EnergyReport mu_rep = report_for(invert(family_psi_mu(0.3, 3.0), {kCenter}));
    CHECK(mu_rep.willmore.value == doctest::Approx(16.0 * kPi).epsilon(5e-3));
    CHECK(mu_rep.gauss.value == doctest::Approx(4.0 * kPi).epsilon(5e-3));
    CHECK(mu_rep.tracefree.value == doctest::Approx(24.0 * kPi).epsilon(5e-3));

    EnergyReport lim_rep = report_for(invert(lopez(3.0), {kCenter}));
    CHECK(lim_rep.willmore.value == doctest::Approx(16.0 * kPi).epsilon(5e-3));
    CHECK(lim_rep.gauss.value == doctest::Approx(8.0 * kPi).epsilon(5e-3));
    CHECK(lim_rep.tracefree.value == doctest::Approx(16.0 * kPi).epsilon(5e-3));

    // the tracefree gap between the family and its limit is one bubble
    CHECK(mu_rep.tracefree.value - lim_rep.tracefree.value ==
          doctest::Approx(8.0 * kPi).epsilon(1e-2));
}

TEST_CASE("gauss map degree oracle") {
    CHECK(gauss_map_degree(gauss_map(enneper())) == 1);
    CHECK(gauss_map_degree(gauss_map(family_psi_mu(0.3, 3.0))) == 3);
    CHECK(gauss_map_degree(gauss_map(lopez(3.0))) == 2);
    // total curvature of a complete minimal surface is -4 pi deg g
    for (const auto& m : {enneper(), family_psi_mu(0.3, 3.0), lopez(3.0)}) {
        int deg = gauss_map_degree(gauss_map(m));
        EnergyReport rep = report_for(m);
        CHECK(rep.gauss.value == doctest::Approx(-4.0 * kPi * deg).epsilon(5e-3));
    }
}

TEST_CASE("chart-split independence") {
    ImmersionModel m = invert(family_psi_mu(0.3, 3.0), {kCenter});
    const double tol = 1e-3;
    QuadratureSpec ref = QuadratureSpec::for_model(m, tol);
    EnergyReport base = energy_report(m, ref);
    for (double split : {0.8, 1.25}) {
        QuadratureSpec spec = ref;
        spec.chart_split_radius = split;
        EnergyReport rep = energy_report(m, spec);
        CHECK(std::fabs(rep.willmore.value - base.willmore.value) <=
              2.0 * tol * std::fabs(base.willmore.value));
        CHECK(std::fabs(rep.tracefree.value - base.tracefree.value) <=
              2.0 * tol * std::fabs(base.tracefree.value));
        CHECK(std::fabs(rep.gauss.value - base.gauss.value) <=
              2.0 * tol * std::fabs(base.gauss.value));
    }
}

TEST_CASE("conformal invariance of the tracefree energy") {
    const double tol = 1e-3;
    for (const auto& base : {family_psi_mu(0.3, 3.0), lopez(3.0), enneper()}) {
        IntegralResult a =
            integrate_density(base, DensityKind::Tracefree, QuadratureSpec::for_model(base, tol));
        ImmersionModel inv = invert(base, {kCenter});
        IntegralResult b =
            integrate_density(inv, DensityKind::Tracefree, QuadratureSpec::for_model(inv, tol));
        CHECK(std::fabs(a.value - b.value) <= 2.0 * tol * std::fabs(a.value));
    }
}

TEST_CASE("gauss-bonnet agreement for every shipped model") {
    const double tol = 1e-3;
    std::vector<ImmersionModel> models{
        plane(),           enneper(),
        lopez(3.0),        family_psi_mu(0.3, 3.0),
        invert(lopez(3.0), {kCenter}), invert(family_psi_mu(0.3, 3.0), {kCenter}),
        invert(enneper(), {kCenter})};
    for (const auto& m : models) {
        EnergyReport rep = report_for(m, tol);
        double scale = std::max(std::fabs(rep.gauss.value), 1.0);
        CHECK(std::fabs(rep.gauss.value - rep.gauss_bonnet_predicted) <= 2.0 * tol * scale);
    }
}

TEST_CASE("identity residuals") {
    const double tol = 1e-3;
    for (const auto& m : {family_psi_mu(0.3, 3.0), invert(family_psi_mu(0.3, 3.0), {kCenter}),
                          invert(lopez(3.0), {kCenter})}) {
        EnergyReport rep = report_for(m, tol);
        double scale = std::max(rep.total_curv.value, rep.tracefree.value);
        CHECK(std::fabs(rep.identity_residuals[0]) <= 2.0 * tol * scale);
        CHECK(std::fabs(rep.identity_residuals[1]) <= 2.0 * tol * scale);
    }
}

TEST_CASE("plane: all densities vanish") {
    EnergyReport rep = report_for(plane());
    CHECK(rep.willmore.value == 0.0);
    CHECK(rep.total_curv.value == 0.0);
    CHECK(rep.tracefree.value == 0.0);
    CHECK(rep.gauss.value == 0.0);
}

TEST_CASE("quadrature refuses non-integrable tails") {
    // 1/|z|^2 diverges at the origin: the dyadic refinement must hit
    // max_depth with the tail still above tolerance
    auto f = [](Complex z) { return 1.0 / std::norm(z); };
    CHECK_THROWS_AS(integrate_disk(f, 1.0, {Complex(0.0)}, 1e-3, 6), wlab::NonConvergent);
    // while an integrable power converges fine
    auto g = [](Complex z) { return 1.0 / std::abs(z); };
    IntegralResult r = integrate_disk(g, 1.0, {Complex(0.0)}, 1e-4, 24);
    CHECK(r.value == doctest::Approx(2.0 * kPi).epsilon(1e-3));
}

TEST_CASE("error estimates are nonnegative and honest at coarse tolerance") {
    ImmersionModel m = family_psi_mu(0.3, 3.0);
    IntegralResult r =
        integrate_density(m, DensityKind::Gauss, QuadratureSpec::for_model(m, 1e-2));
    CHECK(r.error_estimate >= 0.0);
    CHECK(std::fabs(r.value + 12.0 * kPi) <= std::max(r.error_estimate, 1e-2 * 12.0 * kPi));
}
