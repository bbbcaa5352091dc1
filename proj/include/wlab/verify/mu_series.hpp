#pragma once

#include <array>

#include "wlab/verify/cyc_poly.hpp"

namespace wlab::verify {

// Truncated power series in mu with CycPoly2 coefficients (the two formal
// variables read (z, zbar)). Arithmetic truncates consistently at order N.
class MuSeries {
  public:
    explicit MuSeries(int order = 10) : c_(order + 1) {}
    static MuSeries constant(CycPoly2 p, int order);
    static MuSeries mu_power(int k, CycPoly2 p, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const CycPoly2& coeff(int k) const { return c_[k]; }
    CycPoly2& coeff(int k) { return c_[k]; }
    bool exact_remainder_dropped() const { return truncated_; }
    void mark_truncated() { truncated_ = true; }

    MuSeries operator+(const MuSeries& o) const;
    MuSeries operator-(const MuSeries& o) const;
    MuSeries operator*(const MuSeries& o) const;
    MuSeries operator*(const CycScalar& a) const;
    MuSeries conj() const;
    // multiply by mu^k; spilled top coefficients mark the series truncated
    MuSeries shifted_up(int k) const;
    // requires the mu^0 coefficient to be a nonzero constant
    // (NonUnitLeadingTerm otherwise)
    MuSeries inverse() const;

    Complex eval(double mu, Complex z) const; // zbar = conj(z)

  private:
    std::vector<CycPoly2> c_;
    bool truncated_ = false;
};

using MuSeriesVec3 = std::array<MuSeries, 3>;

} // namespace wlab::verify
