#include "lk/field.hpp"

#include <stdexcept>

namespace lk {

namespace {

[[noreturn]] void mixed(const FieldElement& a, const FieldElement& b) {
    throw std::invalid_argument("mixed-field operands: " + a.field().to_string() + " vs " + b.field().to_string());
}

template <class Fn>
FieldElement binary(const FieldElement& a, const FieldElement& b, Fn&& fn) {
    return std::visit(
        [&](const auto& x, const auto& y) -> FieldElement {
            using X = std::decay_t<decltype(x)>;
            using Y = std::decay_t<decltype(y)>;
            if constexpr (std::is_same_v<X, Y>) {
                return FieldElement(fn(x, y));
            } else {
                mixed(a, b);
            }
        },
        a.storage(), b.storage());
}

}  // namespace

FieldDescriptor FieldDescriptor::cyclotomic(int m) {
    if (m < 3) throw std::invalid_argument("cyclotomic field requires m >= 3, got " + std::to_string(m));
    return FieldDescriptor(FieldKind::cyclotomic, cyclotomic_context(m));
}

std::string FieldDescriptor::to_string() const {
    switch (kind_) {
        case FieldKind::rational: return "rational";
        case FieldKind::ratfunc: return "ratfunc";
        case FieldKind::cyclotomic: return "cyclotomic:" + std::to_string(ctx_->m);
    }
    return "?";
}

FieldElement FieldElement::from_rational(const FieldDescriptor& f, const Rational& q) {
    switch (f.kind()) {
        case FieldKind::rational: return FieldElement(q);
        case FieldKind::ratfunc: return FieldElement(RatFunc(Polynomial(q)));
        case FieldKind::cyclotomic: return FieldElement(CyclotomicElement(f.context(), Polynomial(q)));
    }
    throw std::logic_error("unknown field kind");
}

FieldElement FieldElement::generator(const FieldDescriptor& f) {
    switch (f.kind()) {
        case FieldKind::ratfunc: return FieldElement(RatFunc::r());
        case FieldKind::cyclotomic: return FieldElement(CyclotomicElement::generator(f.context()));
        case FieldKind::rational: break;
    }
    throw std::invalid_argument("the rational field has no generator; supply r explicitly");
}

FieldDescriptor FieldElement::field() const {
    switch (kind()) {
        case FieldKind::rational: return FieldDescriptor::rational();
        case FieldKind::ratfunc: return FieldDescriptor::ratfunc();
        case FieldKind::cyclotomic:
            return FieldDescriptor::cyclotomic(std::get<CyclotomicElement>(v_).modulus_index());
    }
    throw std::logic_error("unknown field kind");
}

bool FieldElement::is_zero() const {
    return std::visit(
        [](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>)
                return x == 0;
            else
                return x.is_zero();
        },
        v_);
}

bool FieldElement::is_one() const {
    return std::visit(
        [](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>)
                return x == 1;
            else
                return x.is_one();
        },
        v_);
}

FieldElement FieldElement::operator-() const {
    return std::visit([](const auto& x) { return FieldElement(-x); }, v_);
}

FieldElement FieldElement::inverse() const {
    return std::visit(
        [](const auto& x) -> FieldElement {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>) {
                if (x == 0) throw std::domain_error("division by zero in Q");
                return FieldElement(Rational(1 / x));
            } else {
                return FieldElement(x.inverse());
            }
        },
        v_);
}

FieldElement FieldElement::pow(int k) const {
    return std::visit(
        [k](const auto& x) -> FieldElement {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>) {
                if (k < 0 && x == 0) throw std::domain_error("division by zero in Q");
                Rational base = k < 0 ? Rational(1 / x) : x;
                Rational acc = 1;
                for (int i = 0; i < (k < 0 ? -k : k); ++i) acc *= base;
                return FieldElement(acc);
            } else {
                return FieldElement(x.pow(k));
            }
        },
        v_);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x + y; });
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x - y; });
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x * y; });
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    if (b.is_zero()) {
        if (a.kind() != b.kind()) mixed(a, b);
        throw std::domain_error("division by zero in " + b.field().to_string());
    }
    return binary(a, b, [](const auto& x, const auto& y) {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Rational>)
            return Rational(x / y);
        else
            return x / y;
    });
}

std::string FieldElement::to_string() const {
    return std::visit(
        [](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>)
                return rational_to_string(x);
            else
                return x.to_string();
        },
        v_);
}

FieldElement field_arithmetic(const FieldElement& a, const FieldElement& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw std::logic_error("unknown arithmetic op");
}

namespace {

FieldElement evaluate(const Polynomial& p, const FieldElement& x) {
    const FieldDescriptor f = x.field();
    FieldElement acc = FieldElement::zero(f);
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + FieldElement::from_rational(f, *it);
    return acc;
}

}  // namespace

FieldElement specialize(const RatFunc& e, const FieldElement& r_value) {
    FieldElement den = evaluate(e.denominator(), r_value);
    if (den.is_zero()) {
        // Name the part of the denominator that vanishes when the minimal
        // polynomial of r_value is known; otherwise the whole denominator.
        Polynomial factor = e.denominator();
        if (const auto* q = std::get_if<Rational>(&r_value.storage())) {
            factor = gcd(e.denominator(), Polynomial::x() - Polynomial(*q));
        } else if (const auto* c = std::get_if<CyclotomicElement>(&r_value.storage());
                   c && c->residue() == Polynomial::x()) {
            factor = gcd(e.denominator(), c->context()->modulus);
        }
        throw std::domain_error("specialize: denominator factor " + factor.to_string("r") + " vanishes at r = " +
                                r_value.to_string());
    }
    return evaluate(e.numerator(), r_value) / den;
}

}  // namespace lk
