#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "wlab/surfaces/frame.hpp"
#include "wlab/surfaces/model.hpp"

namespace wlab::asymptotics {

// chi(z) = sqrt(eps^2 + |z|^2), the natural scale function of a
// concentration at 0 with speed eps.
struct RadialWeight {
    double epsilon = 0.0;
    double operator()(Complex z) const { return std::hypot(epsilon, std::abs(z)); }
};

struct ConcentrationResult {
    double epsilon = 0.0; // 2 / sup |Omega e^{-lambda}|; +inf when the sup is 0
    Complex argmax;
    double sup_density = 0.0;
};

struct ConcentrationGrid {
    double r_lo = 1e-9;
    double r_hi = 1.0;
    int radii = 64;
    int angles = 24;
    int zoom_rounds = 3;
    bool include_center = true;
};

ConcentrationResult concentration_speed(const surfaces::ImmersionModel& model,
                                        const ConcentrationGrid& grid = {});

struct BlowupRow {
    double mu = 0.0;
    double sup_error = 0.0; // sup |(Phi(mu^3 z)-Phi(0))/(-mu^9) - bubble(z)|
    bool admissible = false;
    double min_dist = 0.0; // sampled distance d(p, Psi_mu)
};

struct BlowupTable {
    std::vector<BlowupRow> rows;
    double fitted_order = 0.0; // least-squares slope of log sup_error vs log mu
};

// Rescaled comparison of the inverted family against its limit bubble on a
// 64x64 polar grid of radius R. For general a the bubble is the (a^2/9)-
// homothety of the surface with data (1, 3z/a).
BlowupTable blowup_compare(const std::vector<double>& mu_list, double R, Complex a = 3.0,
                           const Vec3& p = Vec3(0, 0, 2));

struct MultiplicityFit {
    std::vector<double> radii;
    std::vector<double> circle_means; // (1/2pi) contour integrals of d_r lambda
    double theta_estimate = 0.0;
};

enum class ProbeSide { BranchPoint, EndAtInfinity };

// (1/2pi) circle means of d_r lambda by 256-point trapezoid; the radial
// derivative uses central differences at h = r/200. Ends at infinity are
// probed in the w-chart, where the chart factor shifts the mean by -2 and
// flips its sign.
MultiplicityFit multiplicity_estimate(const surfaces::ImmersionModel& model, Complex center,
                                      const std::vector<double>& radii,
                                      ProbeSide side = ProbeSide::BranchPoint);

// Extremes of e^lambda / chi^theta over a polar grid around 0.
struct HarnackGrid {
    double r_lo = 1e-6;
    double r_hi = 0.9;
    int radii = 48;
    int angles = 16;
};
std::pair<double, double> harnack_ratio(const surfaces::ImmersionModel& model, double epsilon,
                                        double theta, const HarnackGrid& grid = {});

enum class ResidueProbe { MeanCurvature, Support };

struct ResidueFit {
    std::vector<double> radii;  // strictly decreasing
    std::vector<double> values; // per-circle sup of the probed quantity
    double slope = 0.0;
    int alpha = 0; // round(-slope)
    double r2 = 0.0;
};

// Per-circle sup of |H| or |<n, Phi - p>| on geometric circles around
// center, log-log fitted. Radii must span at least two decades.
ResidueFit second_residue_fit(const surfaces::ImmersionModel& model, Complex center,
                              ResidueProbe probe, std::optional<Vec3> p,
                              const std::vector<double>& radii);

std::vector<double> geometric_radii(double r_hi, double r_lo, int count);

struct FirstResidueResult {
    Vec3 gamma0;
    double grad_h_scale = 0.0; // sup |grad (H n)| on the circle
};

// (1/4pi) contour integral of nu . (grad Hvec - 3 pi_n(grad Hvec) +
// grad^perp n x Hvec) on |z - center| = radius, 512-point trapezoid,
// gradients by central differences at h = radius/100.
FirstResidueResult first_residue(const surfaces::ImmersionModel& model, double radius,
                                 Complex center = 0.0);

// |Delta_g H + |Aring|^2 H| with the flat Laplacian from a 5-point stencil
// of the model's pointwise H.
double willmore_residual(const surfaces::ImmersionModel& model, Complex z, double h);

} // namespace wlab::asymptotics
