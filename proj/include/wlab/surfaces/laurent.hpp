#pragma once

#include <vector>

#include "wlab/linalg.hpp"

namespace wlab::surfaces {

// Finite Laurent polynomial sum a[k] z^(lo+k). Backs the local elliptic
// immersion where everything is a germ at 0.
class LaurentSeries {
  public:
    LaurentSeries() = default;
    LaurentSeries(int lo, std::vector<Complex> coeffs) : lo_(lo), a_(std::move(coeffs)) { trim(); }
    static LaurentSeries term(int power, Complex c) { return LaurentSeries(power, {c}); }

    bool is_zero() const { return a_.empty(); }
    int lowest_power() const { return lo_; }
    int highest_power() const { return lo_ + static_cast<int>(a_.size()) - 1; }
    Complex coeff(int power) const;

    Complex eval(Complex z) const;
    LaurentSeries derivative() const;
    LaurentSeries antiderivative() const; // PeriodError on a z^{-1} term

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator*(Complex c) const;
    LaurentSeries truncated(int max_power) const;

  private:
    void trim();
    int lo_ = 0;
    std::vector<Complex> a_;
};

} // namespace wlab::surfaces
