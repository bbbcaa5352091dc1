#include "wlab/surfaces/laurent.hpp"

#include <cmath>

#include "wlab/errors.hpp"

namespace wlab::surfaces {

void LaurentSeries::trim() {
    double scale = 0.0;
    for (const auto& c : a_) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) {
        a_.clear();
        lo_ = 0;
        return;
    }
    while (!a_.empty() && std::abs(a_.back()) <= 1e-300) a_.pop_back();
    size_t drop = 0;
    while (drop < a_.size() && std::abs(a_[drop]) <= 1e-300) ++drop;
    if (drop > 0) {
        a_.erase(a_.begin(), a_.begin() + drop);
        lo_ += static_cast<int>(drop);
    }
}

Complex LaurentSeries::coeff(int power) const {
    int k = power - lo_;
    if (k < 0 || k >= static_cast<int>(a_.size())) return Complex(0);
    return a_[k];
}

Complex LaurentSeries::eval(Complex z) const {
    Complex acc(0);
    for (auto it = a_.rbegin(); it != a_.rend(); ++it) acc = acc * z + *it;
    return acc * std::pow(z, lo_);
}

LaurentSeries LaurentSeries::derivative() const {
    if (is_zero()) return {};
    std::vector<Complex> d(a_.size());
    for (size_t k = 0; k < a_.size(); ++k) d[k] = a_[k] * double(lo_ + static_cast<int>(k));
    return LaurentSeries(lo_ - 1, std::move(d));
}

LaurentSeries LaurentSeries::antiderivative() const {
    if (is_zero()) return {};
    std::vector<Complex> d(a_.size());
    for (size_t k = 0; k < a_.size(); ++k) {
        int p = lo_ + static_cast<int>(k);
        if (p == -1) {
            if (std::abs(a_[k]) > 1e-12)
                throw PeriodError("Laurent antiderivative needs a logarithm");
            d[k] = 0.0;
            continue;
        }
        d[k] = a_[k] / double(p + 1);
    }
    return LaurentSeries(lo_ + 1, std::move(d));
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int lo = std::min(lo_, o.lo_);
    int hi = std::max(highest_power(), o.highest_power());
    std::vector<Complex> d(hi - lo + 1, Complex(0));
    for (size_t k = 0; k < a_.size(); ++k) d[lo_ + k - lo] += a_[k];
    for (size_t k = 0; k < o.a_.size(); ++k) d[o.lo_ + k - lo] += o.a_[k];
    return LaurentSeries(lo, std::move(d));
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Complex> d(a_.size() + o.a_.size() - 1, Complex(0));
    for (size_t i = 0; i < a_.size(); ++i)
        for (size_t j = 0; j < o.a_.size(); ++j) d[i + j] += a_[i] * o.a_[j];
    return LaurentSeries(lo_ + o.lo_, std::move(d));
}

LaurentSeries LaurentSeries::operator*(Complex c) const {
    std::vector<Complex> d = a_;
    for (auto& x : d) x *= c;
    return LaurentSeries(lo_, std::move(d));
}

LaurentSeries LaurentSeries::truncated(int max_power) const {
    if (is_zero() || highest_power() <= max_power) return *this;
    if (max_power < lo_) return {};
    std::vector<Complex> d(a_.begin(), a_.begin() + (max_power - lo_ + 1));
    return LaurentSeries(lo_, std::move(d));
}

} // namespace wlab::surfaces
