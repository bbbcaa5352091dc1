#pragma once

#include <vector>

#include "wlab/linalg.hpp"

namespace wlab::elliptic {

// Weierstrass p-function germ at 0 for the square lattice Z^2:
// p(z) = 1/z^2 + sum_{k>=2} c_k z^{2k-2}, evaluated by its Laurent series
// only (valid well inside the lattice spacing). g3 = 0 on this lattice.
struct EllipticContext {
    double g2 = 0.0;
    double g3 = 0.0;
    std::vector<double> laurent_coeffs; // c_k for k = 2..depth (index 0 <-> k=2)
    int depth = 20;
    double A = 0.0; // sqrt(3*pi/(2*g2))
    double g2_symmetry_residual = 0.0;
    int g2_truncation = 0;

    double coeff(int k) const { return laurent_coeffs[k - 2]; } // k in [2, depth+extra]
};

// Box-truncated lattice sum 60 * sum' 1/(m+ni)^4 over 0 < max(|m|,|n|) <= truncation.
// The imaginary part cancels by square-lattice symmetry; its magnitude is
// reported through *imag_residual as a sanity signal.
double eisenstein_g2(int truncation, double* imag_residual = nullptr);

EllipticContext make_elliptic_context(int g2_truncation = 200, int depth = 20);

struct SeriesValue {
    Complex value;
    double truncation_error; // magnitude estimate of the dropped tail
};

// Laurent-series evaluation of p and p'. Domain 0 < |z| <= 0.5.
SeriesValue wp_eval(const EllipticContext& ctx, Complex z);
SeriesValue wp_prime_eval(const EllipticContext& ctx, Complex z);

} // namespace wlab::elliptic
