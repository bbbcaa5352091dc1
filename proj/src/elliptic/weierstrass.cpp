#include "wlab/elliptic/weierstrass.hpp"

#include <cmath>

#include "wlab/errors.hpp"

namespace wlab::elliptic {

namespace {
// Coefficients are computed a few indices past depth so the evaluation can
// report a tail estimate.
constexpr int kExtraCoeffs = 8;
} // namespace

double eisenstein_g2(int truncation, double* imag_residual) {
    if (truncation < 10) throw OutOfDomain("eisenstein_g2 truncation must be >= 10");
    // Truncating on complete circular shells keeps the four-fold lattice
    // symmetry exact; averaging the last few shell truncations washes out
    // the lattice-count fluctuation of the boundary, which dominates the
    // error of any single cutoff.
    constexpr int kWindow = 8;
    long double cutoffs[kWindow];
    for (int k = 0; k < kWindow; ++k) {
        long double rk = truncation - k;
        cutoffs[k] = rk * (rk + 1.0L) + 0.5L; // between consecutive integer shells
    }
    long double re = 0.0L, im = 0.0L;
    for (int m = -truncation; m <= truncation; ++m) {
        for (int n = -truncation; n <= truncation; ++n) {
            if (m == 0 && n == 0) continue;
            long double q = static_cast<long double>(m) * m + static_cast<long double>(n) * n;
            int inside = 0;
            for (int k = 0; k < kWindow; ++k)
                if (q <= cutoffs[k]) ++inside;
            if (inside == 0) continue;
            long double w = static_cast<long double>(inside) / kWindow;
            // 1/(m+ni)^4
            long double a = m, b = n;
            long double s_re = a * a - b * b, s_im = 2.0L * a * b;
            long double q_re = s_re * s_re - s_im * s_im;
            long double q_im = 2.0L * s_re * s_im;
            long double q4 = q * q * q * q; // |m+ni|^8
            re += w * q_re / q4;
            im += -w * q_im / q4;
        }
    }
    if (imag_residual) *imag_residual = static_cast<double>(std::fabs(im));
    return 60.0 * static_cast<double>(re);
}

EllipticContext make_elliptic_context(int g2_truncation, int depth) {
    EllipticContext ctx;
    ctx.g2_truncation = g2_truncation;
    ctx.g2 = eisenstein_g2(g2_truncation, &ctx.g2_symmetry_residual);
    ctx.g3 = 0.0;
    ctx.depth = depth;
    ctx.A = std::sqrt(3.0 * kPi / (2.0 * ctx.g2));

    // c_2 = g2/20, c_3 = g3/28 = 0,
    // c_k = 3/((2k+1)(k-3)) * sum_{m=2}^{k-2} c_m c_{k-m} for k >= 4
    const int top = depth + kExtraCoeffs;
    ctx.laurent_coeffs.assign(top - 1, 0.0);
    ctx.laurent_coeffs[0] = ctx.g2 / 20.0;
    ctx.laurent_coeffs[1] = ctx.g3 / 28.0;
    for (int k = 4; k <= top; ++k) {
        double acc = 0.0;
        for (int m = 2; m <= k - 2; ++m) acc += ctx.coeff(m) * ctx.coeff(k - m);
        ctx.laurent_coeffs[k - 2] = 3.0 / ((2.0 * k + 1.0) * (k - 3.0)) * acc;
    }
    return ctx;
}

namespace {

void check_domain(Complex z) {
    double r = std::abs(z);
    if (r == 0.0 || r > 0.5)
        throw OutOfDomain("Weierstrass series valid only on 0 < |z| <= 0.5");
}

} // namespace

SeriesValue wp_eval(const EllipticContext& ctx, Complex z) {
    check_domain(z);
    Complex z2 = z * z;
    Complex acc(0);
    Complex p = z2; // z^{2k-2} for k=2
    for (int k = 2; k <= ctx.depth; ++k) {
        acc += ctx.coeff(k) * p;
        p *= z2;
    }
    double tail = 0.0;
    double rp = std::pow(std::abs(z), 2.0 * (ctx.depth + 1) - 2.0);
    for (int k = ctx.depth + 1; k <= ctx.depth + kExtraCoeffs; ++k) {
        tail += std::fabs(ctx.coeff(k)) * rp;
        rp *= std::norm(z);
    }
    return {1.0 / z2 + acc, tail};
}

SeriesValue wp_prime_eval(const EllipticContext& ctx, Complex z) {
    check_domain(z);
    Complex z2 = z * z;
    Complex acc(0);
    Complex p = z; // z^{2k-3} for k=2
    for (int k = 2; k <= ctx.depth; ++k) {
        acc += (2.0 * k - 2.0) * ctx.coeff(k) * p;
        p *= z2;
    }
    double tail = 0.0;
    double rp = std::pow(std::abs(z), 2.0 * (ctx.depth + 1) - 3.0);
    for (int k = ctx.depth + 1; k <= ctx.depth + kExtraCoeffs; ++k) {
        tail += (2.0 * k - 2.0) * std::fabs(ctx.coeff(k)) * rp;
        rp *= std::norm(z);
    }
    return {-2.0 / (z2 * z) + acc, tail};
}

} // namespace wlab::elliptic
