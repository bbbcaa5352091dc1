#pragma once

#include <array>

#include "wlab/algebra/rational.hpp"
#include "wlab/elliptic/weierstrass.hpp"
#include "wlab/surfaces/model.hpp"

namespace wlab::surfaces {

// Meromorphic Weierstrass pair: Phi_z = (f/2)(1 - g^2, i(1 + g^2), 2g).
struct WeierstrassData {
    algebra::RationalFunction f;
    algebra::RationalFunction g;
};

// Normal form of the bubble data: Phi_z = 1/2 (Q^2-P^2, i(Q^2+P^2), 2PQ)
// with P(0) = 0, Q(0) = P'(0) = 1, P''(0) = 2 Q'(0), deg <= theta/2.
struct NormalizedBubbleData {
    algebra::ComplexPolynomial P;
    algebra::ComplexPolynomial Q;
    int theta = 2;

    // Returns the list of violated invariants (empty when valid).
    std::vector<std::string> violations() const;
};

// Totally geodesic plane through the origin, data (f,g) = (1,0).
ImmersionModel plane();

// Enneper surface, data (f,g) = (1,z); frame at 0 has n = (0,0,-1),
// e^lambda = 1, Omega = -2, H = 0.
ImmersionModel enneper();

// Variant with data (f,g) = (1, c z); c = 1 recovers enneper().
ImmersionModel enneper_variant(Complex c);

// Branched minimal sphere with one simple planar end (at infinity) and one
// planar end of multiplicity 3 (at 0).
ImmersionModel lopez(Complex a = 3.0);

// Four-ended minimal family: simple planar ends at mu, mu j, mu j^2 and
// infinity. The pole coefficients implement the null-vector constraint
// system with b = 3a/(2j(j-1)).
ImmersionModel family_psi_mu(double mu, Complex a = 3.0);

// Generic minimal model from Weierstrass data: the primitive of Phi_z is
// assembled from its partial-fraction decomposition (log terms rejected
// with PeriodError).
ImmersionModel weierstrass_model(const WeierstrassData& data, const Topology& topology);

// Local model of the square-lattice elliptic minimal surface near the
// lattice point at 0, data (f,g) = (2 wp, A wp'/wp). Valid on 0 < |z| <= 0.45.
ImmersionModel chen_gackstatter_local(const elliptic::EllipticContext& ctx);

// Weierstrass Gauss map g of a rational model (throws UsageError for
// non-rational models).
algebra::RationalFunction gauss_map(const ImmersionModel& model);

// Coefficient vectors of the four-ended family, exposed for tests.
struct FamilyCoefficients {
    CVec3 a1, a2, a3, a4;
    Complex b;
};
FamilyCoefficients family_coefficients(double mu, Complex a);

} // namespace wlab::surfaces
