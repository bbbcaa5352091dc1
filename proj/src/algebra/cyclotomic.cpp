#include "wlab/algebra/cyclotomic.hpp"

#include <sstream>

#include "wlab/errors.hpp"

namespace wlab::algebra {

bool CycScalar::is_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

CycScalar CycScalar::operator+(const CycScalar& o) const {
    std::array<Rational, 4> r;
    for (int k = 0; k < 4; ++k) r[k] = c_[k] + o.c_[k];
    return CycScalar(std::move(r));
}

CycScalar CycScalar::operator-(const CycScalar& o) const {
    std::array<Rational, 4> r;
    for (int k = 0; k < 4; ++k) r[k] = c_[k] - o.c_[k];
    return CycScalar(std::move(r));
}

CycScalar CycScalar::operator-() const {
    std::array<Rational, 4> r;
    for (int k = 0; k < 4; ++k) r[k] = -c_[k];
    return CycScalar(std::move(r));
}

CycScalar CycScalar::operator*(const CycScalar& o) const {
    std::array<Rational, 7> conv{};
    for (int a = 0; a < 4; ++a) {
        if (c_[a] == 0) continue;
        for (int b = 0; b < 4; ++b) {
            if (o.c_[b] == 0) continue;
            conv[a + b] += c_[a] * o.c_[b];
        }
    }
    // z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
    std::array<Rational, 4> r{conv[0], conv[1], conv[2], conv[3]};
    r[2] += conv[4];
    r[0] -= conv[4];
    r[3] += conv[5];
    r[1] -= conv[5];
    r[0] -= conv[6];
    return CycScalar(std::move(r));
}

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_12)");
    // Multiplication by *this is Q-linear; solve M x = e_0 by exact
    // Gaussian elimination. Columns of M are the coordinates of this * z^k.
    Rational M[4][5];
    CycScalar pw(1L);
    for (int k = 0; k < 4; ++k) {
        CycScalar col = *this * pw;
        for (int r = 0; r < 4; ++r) M[r][k] = col.c_[r];
        pw = pw * zeta();
    }
    for (int r = 0; r < 4; ++r) M[r][4] = (r == 0) ? 1 : 0;

    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (M[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw DivisionByZero("singular multiplication matrix in Q(zeta_12)");
        if (piv != col)
            for (int k = 0; k < 5; ++k) std::swap(M[piv][k], M[col][k]);
        Rational d = M[col][col];
        for (int k = col; k < 5; ++k) M[col][k] /= d;
        for (int r = 0; r < 4; ++r) {
            if (r == col || M[r][col] == 0) continue;
            Rational f = M[r][col];
            for (int k = col; k < 5; ++k) M[r][k] -= f * M[col][k];
        }
    }
    return CycScalar(std::array<Rational, 4>{M[0][4], M[1][4], M[2][4], M[3][4]});
}

CycScalar CycScalar::conj() const {
    // conj(1) = 1, conj(z) = z - z^3, conj(z^2) = 1 - z^2, conj(z^3) = -z^3
    return CycScalar(std::array<Rational, 4>{c_[0] + c_[2], c_[1], -c_[2], -c_[1] - c_[3]});
}

Complex CycScalar::embed() const {
    const double s3 = std::sqrt(3.0) / 2.0;
    const Complex zpow[4] = {{1.0, 0.0}, {s3, 0.5}, {0.5, s3}, {0.0, 1.0}};
    Complex acc(0);
    for (int k = 0; k < 4; ++k) acc += static_cast<double>(c_[k]) * zpow[k];
    return acc;
}

std::string CycScalar::to_string() const {
    static const char* basis[4] = {"", "*s", "*s^2", "*s^3"};
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        os << "(" << c_[k] << ")" << basis[k];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace wlab::algebra
