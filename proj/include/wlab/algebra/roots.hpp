#pragma once

#include <vector>

#include "wlab/algebra/polynomial.hpp"

namespace wlab::algebra {

struct RootCluster {
    Complex location;  // polished cluster center
    int multiplicity;
};

// All roots via companion-matrix eigenvalues, Newton-polished. Multiple
// roots come back as a cluster of perturbed simple roots; they are grouped
// afterwards, so entries here may repeat up to eigensolver noise.
std::vector<Complex> polynomial_roots(const ComplexPolynomial& p);

// Roots grouped into multiplicity clusters. cluster_tol is the relative
// separation below which roots are considered one multiple root (companion
// eigenvalues of an m-fold root scatter like eps^(1/m), so this sits far
// above machine precision). Cluster centers are re-polished on the
// derivative chain.
std::vector<RootCluster> clustered_roots(const ComplexPolynomial& p, double cluster_tol = 1e-6);

} // namespace wlab::algebra
