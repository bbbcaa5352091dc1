#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "wlab/linalg.hpp"

namespace wlab::algebra {

using Rational = boost::multiprecision::cpp_rational;

// Exact element of Q(zeta_12) in the power basis {1, z, z^2, z^3} with
// z = e^{i pi/6}, reduced by the minimal polynomial x^4 - x^2 + 1
// (so z^4 = z^2 - 1). Contains i = z^3 and j = e^{2 pi i/3} = z^4 exactly.
class CycScalar {
  public:
    CycScalar() : c_{} {}
    CycScalar(long v) { c_[0] = v; }           // NOLINT(google-explicit-constructor)
    CycScalar(const Rational& v) { c_[0] = v; } // NOLINT(google-explicit-constructor)
    explicit CycScalar(std::array<Rational, 4> c) : c_(std::move(c)) {}

    static CycScalar zeta() { return CycScalar(std::array<Rational, 4>{0, 1, 0, 0}); }
    static CycScalar i() { return CycScalar(std::array<Rational, 4>{0, 0, 0, 1}); }
    static CycScalar j() { return CycScalar(std::array<Rational, 4>{-1, 0, 1, 0}); } // z^2 - 1

    const std::array<Rational, 4>& coords() const { return c_; }
    bool is_zero() const;
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    const Rational& rational_part() const { return c_[0]; }

    CycScalar operator+(const CycScalar& o) const;
    CycScalar operator-(const CycScalar& o) const;
    CycScalar operator-() const;
    CycScalar operator*(const CycScalar& o) const;
    CycScalar inverse() const; // DivisionByZero on 0
    CycScalar operator/(const CycScalar& o) const { return *this * o.inverse(); }
    bool operator==(const CycScalar& o) const { return c_ == o.c_; }
    bool operator!=(const CycScalar& o) const { return !(*this == o); }

    // Complex conjugation on the embedding, zeta -> zeta^{-1}. An involutive
    // ring map.
    CycScalar conj() const;

    Complex embed() const; // zeta -> e^{i pi/6}
    std::string to_string() const;

  private:
    std::array<Rational, 4> c_;
};

inline CycScalar conj(const CycScalar& a) { return a.conj(); }

} // namespace wlab::algebra
