#pragma once

#include <optional>

#include "wlab/verify/mu_series.hpp"

namespace wlab::verify {

using CycVec3 = std::array<CycScalar, 3>;

inline CycScalar cyc_dot(const CycVec3& a, const CycVec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; // bilinear, no conjugation
}

struct CheckItem {
    std::string name;
    bool holds = false;
    std::string remainder; // exact nonzero remainder, pretty-printed
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool all_hold() const {
        for (const auto& it : items)
            if (!it.holds) return false;
        return true;
    }
    std::vector<std::string> violated() const {
        std::vector<std::string> v;
        for (const auto& it : items)
            if (!it.holds) v.push_back(it.name);
        return v;
    }
};

// Exact pole-coefficient vectors of the four-ended family, cleared of the
// 1/mu^2 prefactor: hat a_k = mu^2 a_k as polynomials in mu (CycPoly2 with
// exponents (z, mu), z unused). b = 3a/(2j(j-1)).
struct ExactFamilyCoefficients {
    std::array<std::array<CycPoly2, 3>, 4> a_hat;
    CycScalar b;
};
ExactFamilyCoefficients exact_family_coefficients(const CycScalar& a);

struct Perturbation {
    int index = 0; // which a_k to perturb (0-based)
    CycVec3 delta; // added to a_k (constant in mu)
};

// Null-vector constraint system of the pole coefficients, verified as
// exact polynomial identities in mu.
CheckReport check_constraints(const CycScalar& a,
                              const std::optional<Perturbation>& perturb = std::nullopt);

// Exact frame identities of the normalized data Phi_z = 1/2 (Q^2-P^2,
// i(Q^2+P^2), 2PQ): conformality, the unnormalized normal, Omega =
// 2(PQ'-P'Q), and e^{2 lambda} = (|P|^2+|Q|^2)^2. Throws UsageError when
// gcd(P,Q) != 1.
CheckReport check_weierstrass_identities(const CycPoly1& P, const CycPoly1& Q);

struct ExactPoint {
    Rational x, y, z;
};

struct BlowupSeriesResult {
    MuSeriesVec3 phi;          // series of Phi_mu(mu^3 z) to order N
    CheckReport report;        // vanishing below mu^9 + the mu^9 coefficient
    std::array<CycPoly2, 3> mu9_nonconstant;
};

// Exact expansion of the inverted family at blow-up scale: the composite
// (Psi_mu(mu^3 z) - p)/|Psi_mu(mu^3 z) - p|^2 as a MuSeries, built from
// exact geometric series and formal series inversion of the squared norm.
BlowupSeriesResult blowup_series(const CycScalar& a, const ExactPoint& p, int order = 10);

// <f_mu', f_mu'> = 0 as an exact polynomial identity in (z, mu) after
// clearing denominators. break_a4 replaces a_4 by 0 to demonstrate a
// detected violation.
CheckReport conformality_exact(const CycScalar& a, bool break_a4 = false);

} // namespace wlab::verify
