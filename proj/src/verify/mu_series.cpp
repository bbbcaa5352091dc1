#include "wlab/verify/mu_series.hpp"

#include "wlab/errors.hpp"

namespace wlab::verify {

MuSeries MuSeries::constant(CycPoly2 p, int order) {
    MuSeries s(order);
    s.c_[0] = std::move(p);
    return s;
}

MuSeries MuSeries::mu_power(int k, CycPoly2 p, int order) {
    MuSeries s(order);
    if (k <= order)
        s.c_[k] = std::move(p);
    else
        s.truncated_ = true;
    return s;
}

MuSeries MuSeries::operator+(const MuSeries& o) const {
    MuSeries s(order());
    for (int k = 0; k <= order(); ++k) s.c_[k] = c_[k] + o.c_[k];
    s.truncated_ = truncated_ || o.truncated_;
    return s;
}

MuSeries MuSeries::operator-(const MuSeries& o) const {
    MuSeries s(order());
    for (int k = 0; k <= order(); ++k) s.c_[k] = c_[k] - o.c_[k];
    s.truncated_ = truncated_ || o.truncated_;
    return s;
}

MuSeries MuSeries::operator*(const MuSeries& o) const {
    MuSeries s(order());
    for (int i = 0; i <= order(); ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; i + j <= order(); ++j) {
            if (o.c_[j].is_zero()) continue;
            s.c_[i + j] = s.c_[i + j] + c_[i] * o.c_[j];
        }
    }
    s.truncated_ = truncated_ || o.truncated_;
    return s;
}

MuSeries MuSeries::operator*(const CycScalar& a) const {
    MuSeries s(order());
    for (int k = 0; k <= order(); ++k) s.c_[k] = c_[k] * a;
    s.truncated_ = truncated_;
    return s;
}

MuSeries MuSeries::conj() const {
    MuSeries s(order());
    for (int k = 0; k <= order(); ++k) s.c_[k] = c_[k].conj_swap();
    s.truncated_ = truncated_;
    return s;
}

MuSeries MuSeries::shifted_up(int k) const {
    MuSeries s(order());
    for (int j = 0; j + k <= order(); ++j) s.c_[j + k] = c_[j];
    for (int j = order() - k + 1; j <= order(); ++j)
        if (j >= 0 && !c_[j].is_zero()) s.truncated_ = true;
    s.truncated_ = s.truncated_ || truncated_;
    return s;
}

MuSeries MuSeries::inverse() const {
    const CycPoly2& head = c_[0];
    if (head.is_zero() || !head.nonconstant_part().is_zero())
        throw NonUnitLeadingTerm("series inversion needs a nonzero constant mu^0 coefficient");
    CycScalar inv0 = head.constant_term().inverse();

    MuSeries s(order());
    s.c_[0] = CycPoly2::constant(inv0);
    for (int n = 1; n <= order(); ++n) {
        CycPoly2 acc;
        for (int k = 1; k <= n; ++k) acc = acc + c_[k] * s.c_[n - k];
        s.c_[n] = -(acc * inv0);
    }
    s.truncated_ = true; // geometric remainder dropped beyond order N
    return s;
}

Complex MuSeries::eval(double mu, Complex z) const {
    Complex acc(0);
    double mp = 1.0;
    for (int k = 0; k <= order(); ++k) {
        acc += mp * c_[k].eval(z, std::conj(z));
        mp *= mu;
    }
    return acc;
}

} // namespace wlab::verify
