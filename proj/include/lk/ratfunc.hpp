#pragma once

// Elements of Q(r): reduced quotients with a monic denominator.

#include "lk/polynomial.hpp"

#include <string>

namespace lk {

class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(Polynomial num);  // NOLINT
    RatFunc(Polynomial num, Polynomial den);
    RatFunc(long c) : RatFunc(Polynomial(c)) {}  // NOLINT

    static RatFunc r() { return RatFunc(Polynomial::x()); }
    // c * r^k for any integer k.
    static RatFunc laurent(const Rational& c, int k);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFunc operator-() const;
    RatFunc inverse() const;
    RatFunc pow(int k) const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(std::string_view var = "r") const;

private:
    struct Reduced {};
    RatFunc(Polynomial num, Polynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    Polynomial num_;
    Polynomial den_;
};

}  // namespace lk
