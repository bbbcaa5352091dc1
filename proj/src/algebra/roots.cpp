#include "wlab/algebra/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace wlab::algebra {

namespace {

Complex newton_polish(const ComplexPolynomial& p, const ComplexPolynomial& dp, Complex z) {
    for (int it = 0; it < 8; ++it) {
        Complex f = p.eval(z);
        Complex df = dp.eval(z);
        if (std::abs(df) == 0.0) break;
        Complex step = f / df;
        z -= step;
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
    }
    return z;
}

} // namespace

std::vector<Complex> polynomial_roots(const ComplexPolynomial& p) {
    const int n = p.degree();
    if (n <= 0) return {};
    if (n == 1) return {-p.coeff(0) / p.coeff(1)};

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.coeff(i) / p.leading();

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    ComplexPolynomial dp = p.derivative();
    std::vector<Complex> roots;
    roots.reserve(n);
    for (int i = 0; i < n; ++i) roots.push_back(newton_polish(p, dp, solver.eigenvalues()(i)));
    // deterministic order
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

std::vector<RootCluster> clustered_roots(const ComplexPolynomial& p, double cluster_tol) {
    std::vector<Complex> roots = polynomial_roots(p);
    std::vector<RootCluster> clusters;
    std::vector<bool> used(roots.size(), false);

    double scale = 1.0;
    for (Complex r : roots) scale = std::max(scale, std::abs(r));
    const double tol = cluster_tol * scale;

    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        std::vector<size_t> group{i};
        used[i] = true;
        for (size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            for (size_t g : group) {
                if (std::abs(roots[j] - roots[g]) < tol) {
                    group.push_back(j);
                    used[j] = true;
                    break;
                }
            }
        }
        Complex center(0);
        for (size_t g : group) center += roots[g];
        center /= double(group.size());
        int m = static_cast<int>(group.size());
        if (m > 1) {
            // an m-fold root of p is a simple root of p^(m-1)
            ComplexPolynomial q = p;
            for (int k = 0; k + 1 < m; ++k) q = q.derivative();
            center = newton_polish(q, q.derivative(), center);
        }
        clusters.push_back({center, m});
    }
    std::sort(clusters.begin(), clusters.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    return clusters;
}

} // namespace wlab::algebra
