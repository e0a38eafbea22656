#include "lk/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace lk {

std::shared_ptr<const CyclotomicContext> cyclotomic_context(int m) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CyclotomicContext>> cache;
    if (m < 1) throw std::invalid_argument("cyclotomic field index must be positive");
    std::lock_guard lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    auto ctx = std::make_shared<const CyclotomicContext>(CyclotomicContext{m, cyclotomic_polynomial(m)});
    cache.emplace(m, ctx);
    return ctx;
}

CyclotomicElement::CyclotomicElement(std::shared_ptr<const CyclotomicContext> ctx, const Polynomial& p)
    : ctx_(std::move(ctx)), value_(p % ctx_->modulus) {}

std::vector<Rational> CyclotomicElement::coefficients() const {
    std::vector<Rational> out(static_cast<std::size_t>(ctx_->degree()), Rational(0));
    const auto& c = value_.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) out[k] = c[k];
    return out;
}

void CyclotomicElement::check_same(const CyclotomicElement& o) const {
    if (ctx_->m != o.ctx_->m)
        throw std::invalid_argument("mixed-field operands: Q[x]/Phi_" + std::to_string(ctx_->m) +
                                    " vs Q[x]/Phi_" + std::to_string(o.ctx_->m));
}

CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
    a.check_same(b);
    return {a.ctx_, a.value_ + b.value_, CyclotomicElement::Reduced{}};
}

CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) {
    a.check_same(b);
    return {a.ctx_, a.value_ - b.value_, CyclotomicElement::Reduced{}};
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return {a.ctx_, Polynomial{}, CyclotomicElement::Reduced{}};
    return {a.ctx_, (a.value_ * b.value_) % a.ctx_->modulus, CyclotomicElement::Reduced{}};
}

CyclotomicElement CyclotomicElement::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q[x]/Phi_" + std::to_string(ctx_->m));
    // Phi_m is irreducible, so gcd(value, Phi_m) = 1.
    ExtendedGcd eg = extended_gcd(value_, ctx_->modulus);
    if (!eg.g.is_one()) throw std::logic_error("non-invertible residue modulo cyclotomic polynomial");
    return {ctx_, eg.s % ctx_->modulus, Reduced{}};
}

CyclotomicElement operator/(const CyclotomicElement& a, const CyclotomicElement& b) {
    a.check_same(b);
    return a * b.inverse();
}

CyclotomicElement CyclotomicElement::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    CyclotomicElement base = *this;
    CyclotomicElement acc(ctx_, Polynomial(1), Reduced{});
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::string CyclotomicElement::to_string() const { return value_.to_string("x"); }

}  // namespace lk
