#include "lk/ratfunc.hpp"

#include <stdexcept>

namespace lk {

RatFunc::RatFunc(Polynomial num) : num_(std::move(num)), den_(1) {}

RatFunc::RatFunc(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = 1;
        return;
    }
    Polynomial g = gcd(num, den);
    if (!g.is_one()) {
        num = num / g;
        den = den / g;
    }
    Rational lead = den.leading();
    if (lead != 1) {
        Rational inv = 1 / lead;
        num *= inv;
        den *= inv;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

RatFunc RatFunc::laurent(const Rational& c, int k) {
    if (k >= 0) return RatFunc(Polynomial::monomial(c, k));
    if (c == 0) return {};
    return RatFunc(Polynomial(c), Polynomial::monomial(1, -k), Reduced{});
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(r)");
    Rational lead = num_.leading();
    Rational inv = 1 / lead;
    return RatFunc(den_ * inv, num_ * inv, Reduced{});
}

RatFunc RatFunc::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RatFunc base = *this, acc(1);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        if (a.den_.is_one()) return RatFunc(a.num_ + b.num_, a.den_, RatFunc::Reduced{});
        return RatFunc(a.num_ + b.num_, a.den_);
    }
    Polynomial g = gcd(a.den_, b.den_);
    if (g.is_one()) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFunc::Reduced{});
    Polynomial bd = b.den_ / g;
    Polynomial num = a.num_ * bd + b.num_ * (a.den_ / g);
    return RatFunc(std::move(num), a.den_ * bd);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_, Polynomial(1), RatFunc::Reduced{});
    Polynomial g1 = gcd(a.num_, b.den_);
    Polynomial g2 = gcd(b.num_, a.den_);
    Polynomial an = g1.is_one() ? a.num_ : a.num_ / g1;
    Polynomial bd = g1.is_one() ? b.den_ : b.den_ / g1;
    Polynomial bn = g2.is_one() ? b.num_ : b.num_ / g2;
    Polynomial ad = g2.is_one() ? a.den_ : a.den_ / g2;
    Polynomial num = an * bn;
    Polynomial den = ad * bd;
    Rational lead = den.leading();
    if (lead != 1) {
        Rational inv = 1 / lead;
        num *= inv;
        den *= inv;
    }
    return RatFunc(std::move(num), std::move(den), RatFunc::Reduced{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

std::string RatFunc::to_string(std::string_view var) const {
    if (den_.is_one()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace lk
