#include "wlab/verify/cyc_poly.hpp"

#include <sstream>

#include "wlab/errors.hpp"

namespace wlab::verify {

void CycPoly1::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycPoly1 CycPoly1::operator+(const CycPoly1& o) const {
    std::vector<CycScalar> d(std::max(c_.size(), o.c_.size()));
    for (size_t k = 0; k < c_.size(); ++k) d[k] = d[k] + c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) d[k] = d[k] + o.c_[k];
    return CycPoly1(std::move(d));
}

CycPoly1 CycPoly1::operator-(const CycPoly1& o) const { return *this + o * CycScalar(-1L); }

CycPoly1 CycPoly1::operator*(const CycPoly1& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<CycScalar> d(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) d[i + j] = d[i + j] + c_[i] * o.c_[j];
    return CycPoly1(std::move(d));
}

CycPoly1 CycPoly1::operator*(const CycScalar& a) const {
    std::vector<CycScalar> d = c_;
    for (auto& x : d) x = x * a;
    return CycPoly1(std::move(d));
}

CycPoly1 CycPoly1::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<CycScalar> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * CycScalar(long(k));
    return CycPoly1(std::move(d));
}

CycScalar CycPoly1::eval(const CycScalar& x) const {
    CycScalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

CycPoly1 poly_gcd(CycPoly1 a, CycPoly1 b) {
    while (!b.is_zero()) {
        // remainder of a by b
        CycPoly1 r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            CycScalar f = r.coeff(r.degree()) / b.coeff(b.degree());
            std::vector<CycScalar> shift(r.degree() - b.degree() + 1);
            shift.back() = f;
            r = r - b * CycPoly1(std::move(shift));
        }
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a * a.coeff(a.degree()).inverse(); // monic
}

void CycPoly2::insert(const Key& k, const CycScalar& v) {
    if (v.is_zero()) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, v);
        return;
    }
    it->second = it->second + v;
    if (it->second.is_zero()) t_.erase(it);
}

CycPoly2 CycPoly2::constant(CycScalar a) { return term(0, 0, std::move(a)); }

CycPoly2 CycPoly2::term(int i, int j, CycScalar a) {
    CycPoly2 p;
    p.insert({i, j}, a);
    return p;
}

CycPoly2 CycPoly2::from_poly_first(const CycPoly1& p) {
    CycPoly2 out;
    for (int k = 0; k <= p.degree(); ++k) out.insert({k, 0}, p.coeff(k));
    return out;
}

CycPoly2 CycPoly2::from_poly_second(const CycPoly1& p) {
    CycPoly2 out;
    for (int k = 0; k <= p.degree(); ++k) out.insert({0, k}, p.coeff(k));
    return out;
}

CycScalar CycPoly2::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? CycScalar() : it->second;
}

CycPoly2 CycPoly2::nonconstant_part() const {
    CycPoly2 out = *this;
    out.t_.erase({0, 0});
    return out;
}

CycPoly2 CycPoly2::operator+(const CycPoly2& o) const {
    CycPoly2 out = *this;
    for (const auto& [k, v] : o.t_) out.insert(k, v);
    return out;
}

CycPoly2 CycPoly2::operator-(const CycPoly2& o) const { return *this + (-o); }

CycPoly2 CycPoly2::operator-() const {
    CycPoly2 out;
    for (const auto& [k, v] : t_) out.t_.emplace(k, -v);
    return out;
}

CycPoly2 CycPoly2::operator*(const CycPoly2& o) const {
    CycPoly2 out;
    for (const auto& [ka, va] : t_)
        for (const auto& [kb, vb] : o.t_)
            out.insert({ka.first + kb.first, ka.second + kb.second}, va * vb);
    return out;
}

CycPoly2 CycPoly2::operator*(const CycScalar& a) const {
    CycPoly2 out;
    if (a.is_zero()) return out;
    for (const auto& [k, v] : t_) {
        CycScalar w = v * a;
        if (!w.is_zero()) out.t_.emplace(k, w);
    }
    return out;
}

CycPoly2 CycPoly2::conj_swap() const {
    CycPoly2 out;
    for (const auto& [k, v] : t_) out.insert({k.second, k.first}, v.conj());
    return out;
}

CycPoly2 CycPoly2::derivative_first() const {
    CycPoly2 out;
    for (const auto& [k, v] : t_) {
        if (k.first == 0) continue;
        out.insert({k.first - 1, k.second}, v * CycScalar(long(k.first)));
    }
    return out;
}

Complex CycPoly2::eval(Complex first, Complex second) const {
    Complex acc(0);
    for (const auto& [k, v] : t_)
        acc += v.embed() * std::pow(first, k.first) * std::pow(second, k.second);
    return acc;
}

std::string CycPoly2::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : t_) {
        if (!first) os << " + ";
        os << "[" << v.to_string() << "]";
        if (k.first) os << "*x^" << k.first;
        if (k.second) os << "*y^" << k.second;
        first = false;
    }
    return os.str();
}

} // namespace wlab::verify
