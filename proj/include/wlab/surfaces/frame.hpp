#pragma once

#include "wlab/surfaces/model.hpp"

namespace wlab::surfaces {

// Pointwise geometric bundle of a conformal immersion: position, first and
// second derivatives, unit normal, conformal factor e^lambda, mean
// curvature H, tracefree curvature Omega = 2<Phi_zz, n>, and Gauss
// curvature K = H^2 - |Omega|^2 e^{-4 lambda}.
struct GeometryFrame {
    Vec3 phi;
    CVec3 phi_z;
    CVec3 phi_zz;
    Vec3 n;
    double conf_factor = 0.0; // e^lambda
    double H = 0.0;
    Complex Omega;
    double K = 0.0;

    double e2l() const { return conf_factor * conf_factor; }
    double lambda() const { return std::log(conf_factor); }
    // |Omega e^{-lambda}|, the pointwise conformal density driving
    // concentration.
    double omega_density() const { return std::abs(Omega) / conf_factor; }
    double tracefree_sq() const { return 2.0 * std::norm(Omega) / (e2l() * e2l()); } // |Aring|^2
};

GeometryFrame frame(const ImmersionModel& model, Complex z);

// <n(z), Phi(z) - p>
double support_function(const ImmersionModel& model, const Vec3& p, Complex z);

} // namespace wlab::surfaces
