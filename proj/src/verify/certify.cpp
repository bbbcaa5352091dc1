#include "wlab/verify/certify.hpp"

#include "wlab/errors.hpp"

namespace wlab::verify {

namespace {

using Poly2Vec3 = std::array<CycPoly2, 3>;

CycPoly2 p2dot(const Poly2Vec3& a, const Poly2Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Poly2Vec3 p2cross(const Poly2Vec3& a, const Poly2Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Poly2Vec3 p2scale(const Poly2Vec3& a, const CycPoly2& s) {
    return {a[0] * s, a[1] * s, a[2] * s};
}

Poly2Vec3 p2add(const Poly2Vec3& a, const Poly2Vec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

CheckItem identity(std::string name, const CycPoly2& remainder) {
    CheckItem it;
    it.name = std::move(name);
    it.holds = remainder.is_zero();
    if (!it.holds) it.remainder = remainder.to_string();
    return it;
}

} // namespace

ExactFamilyCoefficients exact_family_coefficients(const CycScalar& a) {
    const CycScalar i = CycScalar::i();
    const CycScalar j = CycScalar::j();
    const CycScalar half(Rational(1, 2));
    ExactFamilyCoefficients out;
    out.b = CycScalar(3L) * a * (CycScalar(2L) * j * (j - CycScalar(1L))).inverse();
    const CycScalar b = out.b;

    auto cpoly = [](int mu_pow, const CycScalar& c) { return CycPoly2::term(0, mu_pow, c); };

    // e_plus = (1, i, 0), e_minus = (1, -i, 0), e_3 = (0,0,1)
    // hat a_1 = 1/2 e_plus
    out.a_hat[0] = {cpoly(0, half), cpoly(0, half * i), CycPoly2()};
    // hat a_2 = (j/2) e_plus - mu^4 (b^2/2) e_minus + mu^2 (b j^2) e_3
    out.a_hat[1] = {cpoly(0, j * half) - cpoly(4, b * b * half),
                    cpoly(0, j * half * i) + cpoly(4, b * b * half * i),
                    cpoly(2, b * j * j)};
    // hat a_3 = (j^2/2) e_plus - mu^4 (b^2/2) e_minus - mu^2 (b j) e_3
    out.a_hat[2] = {cpoly(0, j * j * half) - cpoly(4, b * b * half),
                    cpoly(0, j * j * half * i) + cpoly(4, b * b * half * i),
                    cpoly(2, -(b * j))};

    // hat a_4 = -(hat a_1 + j hat a_2 + j^2 hat a_3) / (3 mu^2); the sum is
    // exactly divisible by mu^2
    const CycScalar third_neg = -CycScalar(Rational(1, 3));
    for (int c = 0; c < 3; ++c) {
        CycPoly2 s = out.a_hat[0][c] + out.a_hat[1][c] * j + out.a_hat[2][c] * (j * j);
        CycPoly2 shifted;
        for (const auto& [k, v] : s.terms()) {
            if (k.second < 2 && !v.is_zero())
                throw DivisionByZero("family coefficient sum not divisible by mu^2");
            shifted = shifted + CycPoly2::term(k.first, k.second - 2, v * third_neg);
        }
        out.a_hat[3][c] = shifted;
    }
    return out;
}

CheckReport check_constraints(const CycScalar& a, const std::optional<Perturbation>& perturb) {
    ExactFamilyCoefficients fc = exact_family_coefficients(a);
    if (perturb) {
        for (int c = 0; c < 3; ++c)
            fc.a_hat[perturb->index][c] =
                fc.a_hat[perturb->index][c] + CycPoly2::term(0, 2, perturb->delta[c]);
    }
    const CycScalar j = CycScalar::j();

    CheckReport rep;
    for (int k = 0; k < 4; ++k)
        rep.items.push_back(
            identity("<a" + std::to_string(k + 1) + ",a" + std::to_string(k + 1) + "> = 0",
                     p2dot(fc.a_hat[k], fc.a_hat[k])));

    CycPoly2 d12 = p2dot(fc.a_hat[0], fc.a_hat[1]);
    CycPoly2 d13 = p2dot(fc.a_hat[0], fc.a_hat[2]);
    CycPoly2 d23 = p2dot(fc.a_hat[1], fc.a_hat[2]);
    rep.items.push_back(identity("<a1,a2> = <a1,a3>", d12 - d13));
    rep.items.push_back(identity("<a1,a3> = <a2,a3>", d13 - d23));

    // 3 mu^2 a4 + (a1 + j a2 + j^2 a3) = 0, in the mu^2-cleared variables
    CycPoly2 a4_rem;
    for (int c = 0; c < 3 && a4_rem.is_zero(); ++c)
        a4_rem = CycPoly2::term(0, 2, CycScalar(3L)) * fc.a_hat[3][c] + fc.a_hat[0][c] +
                 fc.a_hat[1][c] * j + fc.a_hat[2][c] * (j * j);
    rep.items.push_back(identity("a4 = -(a1 + j a2 + j^2 a3)/(3 mu^2)", a4_rem));
    return rep;
}

CheckReport check_weierstrass_identities(const CycPoly1& P, const CycPoly1& Q) {
    CycPoly1 g = poly_gcd(P, Q);
    if (g.degree() > 0) throw UsageError("check_weierstrass_identities requires gcd(P,Q) = 1");

    const CycScalar i = CycScalar::i();
    const CycScalar half(Rational(1, 2));

    CycPoly2 Pz = CycPoly2::from_poly_first(P);
    CycPoly2 Qz = CycPoly2::from_poly_first(Q);
    CycPoly2 Pb = Pz.conj_swap();
    CycPoly2 Qb = Qz.conj_swap();
    CycPoly2 P2 = Pz * Pz, Q2 = Qz * Qz;

    Poly2Vec3 V{(Q2 - P2) * half, (Q2 + P2) * (half * i), Pz * Qz}; // Phi_z
    Poly2Vec3 Vb{V[0].conj_swap(), V[1].conj_swap(), V[2].conj_swap()};
    CycPoly2 norm2 = Pz * Pb + Qz * Qb; // |P|^2 + |Q|^2

    CheckReport rep;
    rep.items.push_back(identity("<Phi_z, Phi_z> = 0", p2dot(V, V)));

    // unnormalized normal: -2i (Phi_z x conj Phi_z) = (|P|^2+|Q|^2) *
    // (P Qbar + Pbar Q, i(Pbar Q - P Qbar), |P|^2 - |Q|^2)
    Poly2Vec3 Nv{Pz * Qb + Pb * Qz, (Pb * Qz - Pz * Qb) * i, Pz * Pb - Qz * Qb};
    Poly2Vec3 cross = p2cross(V, Vb);
    const CycScalar minus2i = -(CycScalar(2L) * i);
    Poly2Vec3 lhs{cross[0] * minus2i, cross[1] * minus2i, cross[2] * minus2i};
    Poly2Vec3 rhs = p2scale(Nv, norm2);
    CheckItem normal_item;
    normal_item.name = "(|P|^2+|Q|^2) n = (P Qbar + Pbar Q, i(Pbar Q - P Qbar), |P|^2-|Q|^2)";
    normal_item.holds = true;
    for (int c = 0; c < 3; ++c) {
        CycPoly2 diff = lhs[c] - rhs[c];
        if (!diff.is_zero()) {
            normal_item.holds = false;
            normal_item.remainder = diff.to_string();
        }
    }
    rep.items.push_back(normal_item);

    // Omega: 2 <Phi_zz, N_v> = 2 (P Q' - P' Q) (|P|^2 + |Q|^2)
    Poly2Vec3 Vzz{V[0].derivative_first(), V[1].derivative_first(), V[2].derivative_first()};
    CycPoly2 wron = Pz * CycPoly2::from_poly_first(Q.derivative()) -
                    CycPoly2::from_poly_first(P.derivative()) * Qz;
    rep.items.push_back(
        identity("Omega = 2 (P Q' - P' Q)", p2dot(Vzz, Nv) - wron * norm2));

    // e^{2 lambda}: 2 <Phi_z, conj Phi_z> = (|P|^2 + |Q|^2)^2
    rep.items.push_back(identity("e^{2 lambda} = (|P|^2+|Q|^2)^2",
                                 p2dot(V, Vb) * CycScalar(2L) - norm2 * norm2));
    return rep;
}

BlowupSeriesResult blowup_series(const CycScalar& a, const ExactPoint& p, int order) {
    const int N = order;
    const CycScalar i = CycScalar::i();
    const CycScalar half(Rational(1, 2));

    auto zpow = [](int k) {
        CycPoly1 m({CycScalar(0L), CycScalar(1L)});
        CycPoly1 acc({CycScalar(1L)});
        for (int q = 0; q < k; ++q) acc = acc * m;
        return CycPoly2::from_poly_first(acc);
    };

    // D = 1 + mu^2 z + mu^4 z^2
    MuSeries D(N);
    D.coeff(0) = CycPoly2::constant(CycScalar(1L));
    if (N >= 2) D.coeff(2) = zpow(1);
    if (N >= 4) D.coeff(4) = zpow(2);
    MuSeries Dinv = D.inverse();

    // mu^3 F1 = -3 (1 - mu^6 z^3)^{-1}
    MuSeries geo(N);
    geo.coeff(0) = CycPoly2::constant(CycScalar(1L));
    if (N >= 6) geo.coeff(6) = -zpow(3);
    MuSeries m3F1 = geo.inverse() * CycScalar(-3L);

    // mu^3 F2 = (a^2/4) [ 3 mu^4 (2 mu^2 z + 1) D^{-1} + mu^6 z ]
    MuSeries S21(N);
    S21.coeff(0) = CycPoly2::constant(CycScalar(1L));
    if (N >= 2) S21.coeff(2) = zpow(1) * CycScalar(2L);
    MuSeries m3F2 = ((S21 * Dinv).shifted_up(4) * CycScalar(3L) +
                     MuSeries::mu_power(6, zpow(1), N)) *
                    (a * a * CycScalar(Rational(1, 4)));

    // mu^3 F3 = (3a/2) mu^2 (mu^2 z + 1) D^{-1}
    MuSeries S11(N);
    S11.coeff(0) = CycPoly2::constant(CycScalar(1L));
    if (N >= 2) S11.coeff(2) = zpow(1);
    MuSeries m3F3 = (S11 * Dinv).shifted_up(2) * (CycScalar(3L) * a * half);

    // cartesian components of mu^3 f
    MuSeries m3fx = (m3F1 + m3F2) * half;
    MuSeries m3fy = (m3F1 - m3F2) * (half * i);
    MuSeries m3fz = m3F3;

    // G = mu^3 (Psi - p) = mu^3 f + conj(mu^3 f) - mu^3 p
    const CycScalar pc[3] = {CycScalar(p.x), CycScalar(p.y), CycScalar(p.z)};
    MuSeriesVec3 G{m3fx + m3fx.conj() - MuSeries::mu_power(3, CycPoly2::constant(pc[0]), N),
                   m3fy + m3fy.conj() - MuSeries::mu_power(3, CycPoly2::constant(pc[1]), N),
                   m3fz + m3fz.conj() - MuSeries::mu_power(3, CycPoly2::constant(pc[2]), N)};

    // |Psi - p|^2 = mu^{-6} M with M = sum G_i^2 (components are real)
    MuSeries M = G[0] * G[0] + G[1] * G[1] + G[2] * G[2];
    MuSeries Minv = M.inverse();

    BlowupSeriesResult out{{MuSeries(N), MuSeries(N), MuSeries(N)}, {}, {}};
    for (int c = 0; c < 3; ++c) out.phi[c] = (G[c] * Minv).shifted_up(3);

    // expected mu^9 nonconstant coefficient:
    // u = zbar^3/3 - (a^2/9) z on the (1,i,0)/2 direction
    CycPoly2 u = CycPoly2::term(0, 3, CycScalar(Rational(1, 3))) -
                 CycPoly2::term(1, 0, a * a * CycScalar(Rational(1, 9)));
    CycPoly2 ub = u.conj_swap();
    CycPoly2 w = CycPoly2::term(2, 0, a * CycScalar(Rational(1, 6)));
    std::array<CycPoly2, 3> target{(u + ub) * half, (u - ub) * (half * i), -(w + w.conj_swap())};

    bool low_ok = true;
    std::string low_bad;
    for (int k = 0; k <= std::min(8, N); ++k) {
        for (int c = 0; c < 3; ++c) {
            CycPoly2 nc = out.phi[c].coeff(k).nonconstant_part();
            if (!nc.is_zero()) {
                low_ok = false;
                low_bad = "mu^" + std::to_string(k) + " component " + std::to_string(c) + ": " +
                          nc.to_string();
            }
        }
    }
    CheckItem low;
    low.name = "nonconstant coefficients of mu^0..mu^8 vanish";
    low.holds = low_ok;
    low.remainder = low_bad;
    out.report.items.push_back(low);

    bool mu9_ok = N >= 9;
    std::string mu9_bad;
    for (int c = 0; c < 3 && N >= 9; ++c) {
        out.mu9_nonconstant[c] = out.phi[c].coeff(9).nonconstant_part();
        CycPoly2 diff = out.mu9_nonconstant[c] - target[c];
        if (!diff.is_zero()) {
            mu9_ok = false;
            mu9_bad = "component " + std::to_string(c) + ": " + diff.to_string();
        }
    }
    CheckItem m9;
    m9.name = "mu^9 nonconstant coefficient matches the bubble expansion";
    m9.holds = mu9_ok;
    m9.remainder = mu9_bad;
    out.report.items.push_back(m9);
    return out;
}

CheckReport conformality_exact(const CycScalar& a, bool break_a4) {
    ExactFamilyCoefficients fc = exact_family_coefficients(a);
    if (break_a4)
        for (int c = 0; c < 3; ++c) fc.a_hat[3][c] = CycPoly2();

    const CycScalar j = CycScalar::j();
    const CycScalar omega[3] = {CycScalar(1L), j, j * j};

    CycPoly2 L[3];
    for (int k = 0; k < 3; ++k)
        L[k] = CycPoly2::term(1, 0, CycScalar(1L)) - CycPoly2::term(0, 1, omega[k]);
    CycPoly2 L2[3] = {L[0] * L[0], L[1] * L[1], L[2] * L[2]};
    CycPoly2 P23 = L2[1] * L2[2], P13 = L2[0] * L2[2], P12 = L2[0] * L2[1];
    CycPoly2 Dfull = L2[0] * P23;

    Poly2Vec3 N;
    for (int c = 0; c < 3; ++c)
        N[c] = -(fc.a_hat[0][c] * P23) - (fc.a_hat[1][c] * P13) - (fc.a_hat[2][c] * P12) +
               fc.a_hat[3][c] * Dfull;

    CheckReport rep;
    rep.items.push_back(identity("<f_mu', f_mu'> = 0", p2dot(N, N)));
    return rep;
}

} // namespace wlab::verify
