#include "lk/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace lk {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

Polynomial::Polynomial(long c) {
    if (c != 0) coeffs_.emplace_back(c);
}

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

Polynomial Polynomial::x() { return monomial(1, 1); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    Polynomial p;
    if (c == 0) return p;
    p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
    p.coeffs_.back() = c;
    return p;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    Polynomial p;
    p.coeffs_ = std::move(out);
    p.trim();
    return p;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < d.degree()) return {Polynomial{}, *this};
    std::vector<Rational> rem = coeffs_;
    std::vector<Rational> quo(static_cast<std::size_t>(degree() - d.degree()) + 1, Rational(0));
    const int dd = d.degree();
    const Rational inv_lead = 1 / d.leading();
    for (int k = degree(); k >= dd; --k) {
        const Rational& top = rem[static_cast<std::size_t>(k)];
        if (top == 0) continue;
        Rational f = top * inv_lead;
        const auto shift = static_cast<std::size_t>(k - dd);
        for (int j = 0; j <= dd; ++j) rem[shift + static_cast<std::size_t>(j)] -= f * d.coeffs_[static_cast<std::size_t>(j)];
        quo[shift] = std::move(f);
    }
    Polynomial q, r;
    q.coeffs_ = std::move(quo);
    q.trim();
    r.coeffs_ = std::move(rem);
    r.trim();
    return {std::move(q), std::move(r)};
}

Polynomial Polynomial::monic() const {
    if (is_zero() || is_monic()) return *this;
    return *this * Rational(1 / leading());
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

std::string Polynomial::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = 1, s1 = 0;
    Polynomial t0 = 0, t1 = 1;
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Polynomial t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational inv = 1 / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

int euler_phi(int m) {
    if (m < 1) throw std::invalid_argument("euler_phi: m must be positive");
    int result = m;
    int k = m;
    for (int p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        while (k % p == 0) k /= p;
        result -= result / p;
    }
    if (k > 1) result -= result / k;
    return result;
}

Polynomial cyclotomic_polynomial(int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be >= 1");
    Polynomial p = Polynomial::monomial(1, m) - Polynomial(1);
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto [q, r] = p.divmod(cyclotomic_polynomial(d));
        if (!r.is_zero()) throw std::logic_error("cyclotomic_polynomial: inexact division");
        p = std::move(q);
    }
    return p;
}

}  // namespace lk
