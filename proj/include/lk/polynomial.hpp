#pragma once

// Dense univariate polynomials over Q, lowest degree first.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lk {

using Rational = mpq_class;

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(long c);  // NOLINT: constants convert implicitly
    Polynomial(const Rational& c);  // NOLINT

    static Polynomial x();
    static Polynomial monomial(const Rational& c, int degree);

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(int k) const;
    const Rational& leading() const { return coeffs_.back(); }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    // Euclidean division; throws std::domain_error on a zero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
    Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
    Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }

    Polynomial monic() const;
    Rational evaluate(const Rational& x) const;

    std::string to_string(std::string_view var = "r") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

struct ExtendedGcd {
    Polynomial g;  // monic
    Polynomial s;
    Polynomial t;  // s*a + t*b = g
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

// Phi_m(x), computed by dividing x^m - 1 by Phi_d for all proper divisors d.
Polynomial cyclotomic_polynomial(int m);

int euler_phi(int m);

std::string rational_to_string(const Rational& q);

}  // namespace lk
