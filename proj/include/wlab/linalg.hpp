#pragma once

#include <Eigen/Dense>
#include <complex>

namespace wlab {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3d;

constexpr double kPi = 3.14159265358979323846264338327950288;

// Bilinear complex pairing <a,b> = sum a_i b_i, no conjugation. This is the
// pairing entering conformality and the null-vector constraints.
inline Complex cdot(const CVec3& a, const CVec3& b) {
    return a(0) * b(0) + a(1) * b(1) + a(2) * b(2);
}

inline Complex cdot(const CVec3& a, const Vec3& b) {
    return a(0) * b(0) + a(1) * b(1) + a(2) * b(2);
}

inline Complex cdot(const Vec3& a, const CVec3& b) { return cdot(b, a); }

// Componentwise cross product without conjugation (Eigen's complex cross
// conjugates each entry).
inline CVec3 ccross(const CVec3& a, const CVec3& b) {
    return CVec3(a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2),
                 a(0) * b(1) - a(1) * b(0));
}

inline CVec3 conj(const CVec3& a) { return a.conjugate(); }

inline Vec3 real(const CVec3& a) { return Vec3(a(0).real(), a(1).real(), a(2).real()); }
inline Vec3 imag(const CVec3& a) { return Vec3(a(0).imag(), a(1).imag(), a(2).imag()); }

inline bool finite(const Vec3& v) {
    return std::isfinite(v(0)) && std::isfinite(v(1)) && std::isfinite(v(2));
}

inline bool finite(const CVec3& v) {
    for (int i = 0; i < 3; ++i)
        if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag())) return false;
    return true;
}

} // namespace wlab
