#pragma once

// Runtime-tagged scalars over one of three exact fields: Q, Q(r), or
// Q[x]/Phi_m. Arithmetic between different fields is an error.

#include "lk/cyclotomic.hpp"
#include "lk/polynomial.hpp"
#include "lk/ratfunc.hpp"

#include <memory>
#include <string>
#include <variant>

namespace lk {

enum class FieldKind { rational, ratfunc, cyclotomic };

class FieldDescriptor {
public:
    static FieldDescriptor rational() { return FieldDescriptor(FieldKind::rational, nullptr); }
    static FieldDescriptor ratfunc() { return FieldDescriptor(FieldKind::ratfunc, nullptr); }
    // Requires m >= 3.
    static FieldDescriptor cyclotomic(int m);

    FieldKind kind() const { return kind_; }
    // 0 unless cyclotomic.
    int modulus_index() const { return ctx_ ? ctx_->m : 0; }
    const std::shared_ptr<const CyclotomicContext>& context() const { return ctx_; }

    std::string to_string() const;

    friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
        return a.kind_ == b.kind_ && a.modulus_index() == b.modulus_index();
    }

private:
    FieldDescriptor(FieldKind kind, std::shared_ptr<const CyclotomicContext> ctx)
        : kind_(kind), ctx_(std::move(ctx)) {}

    FieldKind kind_;
    std::shared_ptr<const CyclotomicContext> ctx_;
};

class FieldElement {
public:
    using Storage = std::variant<Rational, RatFunc, CyclotomicElement>;

    FieldElement(Rational q) : v_(std::move(q)) {}  // NOLINT
    FieldElement(RatFunc f) : v_(std::move(f)) {}  // NOLINT
    FieldElement(CyclotomicElement c) : v_(std::move(c)) {}  // NOLINT

    static FieldElement zero(const FieldDescriptor& f) { return from_rational(f, 0); }
    static FieldElement one(const FieldDescriptor& f) { return from_rational(f, 1); }
    static FieldElement from_rational(const FieldDescriptor& f, const Rational& q);
    // The adjoined element: r in Q(r), the class of x in Q[x]/Phi_m.
    // Throws for the rational field, which has no distinguished generator.
    static FieldElement generator(const FieldDescriptor& f);

    FieldDescriptor field() const;
    FieldKind kind() const { return static_cast<FieldKind>(v_.index()); }
    const Storage& storage() const { return v_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(int k) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.v_ == b.v_; }

    // Canonical exact string: "-r^3", "(1)/(r^7)", "x^3 - x", "5/6".
    std::string to_string() const;

private:
    Storage v_;
};

enum class ArithOp { add, sub, mul, div };
FieldElement field_arithmetic(const FieldElement& a, const FieldElement& b, ArithOp op);

// Image of e under r -> r_value in r_value's field. Throws std::domain_error
// naming the vanishing denominator factor.
FieldElement specialize(const RatFunc& e, const FieldElement& r_value);

}  // namespace lk
