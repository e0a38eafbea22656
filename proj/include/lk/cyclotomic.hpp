#pragma once

// Q[x]/Phi_m(x). Elements share an immutable context holding Phi_m.

#include "lk/polynomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace lk {

struct CyclotomicContext {
    int m;
    Polynomial modulus;  // Phi_m
    int degree() const { return modulus.degree(); }
};

// Shared per-m context; safe to call concurrently.
std::shared_ptr<const CyclotomicContext> cyclotomic_context(int m);

class CyclotomicElement {
public:
    CyclotomicElement(std::shared_ptr<const CyclotomicContext> ctx, const Polynomial& p);

    static CyclotomicElement generator(std::shared_ptr<const CyclotomicContext> ctx) {
        return {std::move(ctx), Polynomial::x()};
    }

    int modulus_index() const { return ctx_->m; }
    const std::shared_ptr<const CyclotomicContext>& context() const { return ctx_; }
    const Polynomial& residue() const { return value_; }
    // Exactly phi(m) coefficients, lowest degree first.
    std::vector<Rational> coefficients() const;

    bool is_zero() const { return value_.is_zero(); }
    bool is_one() const { return value_.is_one(); }

    CyclotomicElement operator-() const { return {ctx_, -value_, Reduced{}}; }
    CyclotomicElement inverse() const;
    CyclotomicElement pow(int k) const;

    friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b);
    friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b);
    friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
    friend CyclotomicElement operator/(const CyclotomicElement& a, const CyclotomicElement& b);
    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
        return a.ctx_->m == b.ctx_->m && a.value_ == b.value_;
    }

    std::string to_string() const;

private:
    struct Reduced {};
    CyclotomicElement(std::shared_ptr<const CyclotomicContext> ctx, Polynomial p, Reduced)
        : ctx_(std::move(ctx)), value_(std::move(p)) {}
    void check_same(const CyclotomicElement& o) const;

    std::shared_ptr<const CyclotomicContext> ctx_;
    Polynomial value_;
};

}  // namespace lk
