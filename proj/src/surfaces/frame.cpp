#include "wlab/surfaces/frame.hpp"

#include <cmath>

#include "wlab/errors.hpp"

namespace wlab::surfaces {

GeometryFrame frame(const ImmersionModel& model, Complex z) {
    Jet2 j = model.jet(z);
    if (!finite(j.phi) || !finite(j.phi_z) || !finite(j.phi_zz))
        throw SingularPoint("non-finite jet at chart point");

    GeometryFrame f;
    f.phi = j.phi;
    f.phi_z = j.phi_z;
    f.phi_zz = j.phi_zz;

    double e2l = 2.0 * j.phi_z.squaredNorm();
    if (!(e2l > 1e-280)) throw SingularPoint("vanishing conformal factor");
    f.conf_factor = std::sqrt(e2l);

    // Phi_x cross Phi_y = -2i (Phi_z cross conj(Phi_z)), a real vector of
    // norm e^{2 lambda} at conformal points.
    CVec3 cr = ccross(j.phi_z, j.phi_z.conjugate());
    Vec3 nv = real(Complex(0.0, -2.0) * cr);
    double nn = nv.norm();
    if (!(nn > 0.0) || std::abs(nn - e2l) > 1e-3 * e2l)
        throw SingularPoint("degenerate frame: conformality lost at chart point");
    f.n = model.normal_sign() * nv / nn;

    f.H = 2.0 * f.n.dot(j.phi_zzbar) / e2l;
    f.Omega = 2.0 * cdot(j.phi_zz, f.n);
    f.K = f.H * f.H - std::norm(f.Omega) / (e2l * e2l);
    return f;
}

double support_function(const ImmersionModel& model, const Vec3& p, Complex z) {
    GeometryFrame f = frame(model, z);
    return f.n.dot(f.phi - p);
}

} // namespace wlab::surfaces
