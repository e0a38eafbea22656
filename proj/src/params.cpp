#include "lk/params.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <utility>

namespace lk {

std::vector<RootIndex> positive_roots(int n) {
    if (n < 2) throw std::invalid_argument("positive_roots: n must be >= 2, got " + std::to_string(n));
    std::vector<RootIndex> out;
    out.reserve(lk_dimension(n));
    for (int s = 1; s <= n; ++s)
        for (int t = s + 1; t <= n; ++t) out.push_back({s, t});
    return out;
}

std::size_t lk_dimension(int n) { return n < 2 ? 0 : static_cast<std::size_t>(n * (n - 1) / 2); }

std::size_t root_position(int n, RootIndex b) {
    if (b.s < 1 || b.s >= b.t || b.t > n)
        throw std::out_of_range("root_position: (" + std::to_string(b.s) + "," + std::to_string(b.t) +
                                ") invalid for n=" + std::to_string(n));
    // Rows before s contribute (n-1) + (n-2) + ... + (n-s+1) entries.
    const int before = (b.s - 1) * n - (b.s - 1) * b.s / 2;
    return static_cast<std::size_t>(before + (b.t - b.s - 1));
}

namespace {

constexpr std::array<std::pair<LCase, std::string_view>, 6> kLTags{{
    {LCase::l_eq_r, "l_eq_r"},
    {LCase::l_eq_neg_r3, "l_eq_neg_r3"},
    {LCase::l_eq_inv_r2n3, "l_eq_inv_r2n3"},
    {LCase::l_eq_inv_rn3, "l_eq_inv_rn3"},
    {LCase::l_eq_neg_inv_rn3, "l_eq_neg_inv_rn3"},
    {LCase::explicit_value, "explicit"},
}};

constexpr std::array<std::pair<TCase, std::string_view>, 5> kTTags{{
    {TCase::t_eq_inv_qn, "t_eq_inv_qn"},
    {TCase::t_eq_inv_sqrt_qn, "t_eq_inv_sqrt_qn"},
    {TCase::t_eq_neg_inv_sqrt_qn, "t_eq_neg_inv_sqrt_qn"},
    {TCase::t_eq_inv_q, "t_eq_inv_q"},
    {TCase::t_eq_neg_one, "t_eq_neg_one"},
}};

}  // namespace

std::string_view to_string(LCase c) {
    for (auto [k, v] : kLTags)
        if (k == c) return v;
    return "?";
}

std::string_view to_string(TCase c) {
    for (auto [k, v] : kTTags)
        if (k == c) return v;
    return "?";
}

std::optional<LCase> parse_lcase(std::string_view tag) {
    for (auto [k, v] : kLTags)
        if (v == tag) return k;
    return std::nullopt;
}

std::optional<TCase> parse_tcase(std::string_view tag) {
    for (auto [k, v] : kTTags)
        if (v == tag) return k;
    return std::nullopt;
}

LaurentMonomial l_monomial(LCase c, int n) {
    switch (c) {
        case LCase::l_eq_r: return {1, 1};
        case LCase::l_eq_neg_r3: return {-1, 3};
        case LCase::l_eq_inv_r2n3: return {1, 3 - 2 * n};
        case LCase::l_eq_inv_rn3: return {1, 3 - n};
        case LCase::l_eq_neg_inv_rn3: return {-1, 3 - n};
        case LCase::explicit_value: break;
    }
    throw std::invalid_argument("l_monomial: explicit case has no fixed monomial");
}

FieldElement laurent_value(const LaurentMonomial& mono, const FieldElement& r) {
    return FieldElement::from_rational(r.field(), Rational(mono.coefficient)) * r.pow(mono.power);
}

LCase params_from_tq(TCase t, int /*n*/) {
    // t = 1/q^n = r^{2n}        -> l = r^{3-2n}
    // t = +-1/sqrt(q)^n = +-r^n -> l = +-r^{3-n}
    // t = 1/q = r^2             -> l = r
    // t = -1                    -> l = -r^3
    switch (t) {
        case TCase::t_eq_inv_qn: return LCase::l_eq_inv_r2n3;
        case TCase::t_eq_inv_sqrt_qn: return LCase::l_eq_inv_rn3;
        case TCase::t_eq_neg_inv_sqrt_qn: return LCase::l_eq_neg_inv_rn3;
        case TCase::t_eq_inv_q: return LCase::l_eq_r;
        case TCase::t_eq_neg_one: return LCase::l_eq_neg_r3;
    }
    throw std::invalid_argument("params_from_tq: unknown t case");
}

std::optional<LaurentMonomial> parse_laurent(std::string_view text) {
    std::string_view s = text;
    long sign = 1;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        if (s.front() == '-') sign = -1;
        s.remove_prefix(1);
    }
    if (s.empty()) return std::nullopt;

    auto read_int = [](std::string_view& v, long& out) {
        const char* end = v.data() + v.size();
        auto [p, ec] = std::from_chars(v.data(), end, out);
        if (ec != std::errc{} || p == v.data()) return false;
        v.remove_prefix(static_cast<std::size_t>(p - v.data()));
        return true;
    };

    long coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(s.front()))) {
        if (!read_int(s, coeff)) return std::nullopt;
        have_coeff = true;
    }
    if (s.empty()) return LaurentMonomial{sign * coeff, 0};

    bool reciprocal = false;
    if (have_coeff && s.front() == '*') {
        s.remove_prefix(1);
    } else if (have_coeff && s.front() == '/') {
        if (coeff != 1) return std::nullopt;
        reciprocal = true;
        s.remove_prefix(1);
    }
    if (s.empty() || s.front() != 'r') return std::nullopt;
    s.remove_prefix(1);
    long power = 1;
    if (!s.empty()) {
        if (s.front() == '^') s.remove_prefix(1);
        if (!read_int(s, power) || !s.empty()) return std::nullopt;
    }
    if (reciprocal) power = -power;
    if (coeff == 0) return std::nullopt;
    return LaurentMonomial{sign * coeff, static_cast<int>(power)};
}

std::string to_string(const LaurentMonomial& mono) {
    std::string out = mono.coefficient < 0 ? "-" : "";
    long mag = mono.coefficient < 0 ? -mono.coefficient : mono.coefficient;
    if (mono.power == 0) return out + std::to_string(mag);
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "r";
    if (mono.power != 1) out += "^" + std::to_string(mono.power);
    return out;
}

ParamSpec make_params(int n, const FieldElement& r, const FieldElement& l, LCase lcase) {
    if (n < 2) throw std::invalid_argument("ParamSpec: n must be >= 2");
    if (r.is_zero()) throw std::invalid_argument("ParamSpec: r must be nonzero");
    if (l.is_zero()) throw std::invalid_argument("ParamSpec: l must be nonzero");
    const FieldDescriptor f = r.field();
    if (!(l.field() == f)) throw std::invalid_argument("ParamSpec: r and l lie in different fields");
    const FieldElement one = FieldElement::one(f);
    const FieldElement r2 = r * r;
    FieldElement power = one;
    for (int k = 1; k <= n; ++k) {
        power = power * r2;
        if (power == one)
            throw std::invalid_argument("ParamSpec: r^" + std::to_string(2 * k) +
                                        " = 1 (Hecke algebra not semisimple)");
    }
    FieldElement m = r.inverse() - r;
    return ParamSpec{n, f, r, l, std::move(m), lcase};
}

ParamSpec make_params(int n, const FieldDescriptor& field, LCase lcase) {
    FieldElement r = FieldElement::generator(field);
    FieldElement l = laurent_value(l_monomial(lcase, n), r);
    return make_params(n, r, l, lcase);
}

ParamSpec make_params(int n, const FieldDescriptor& field, const LaurentMonomial& l) {
    FieldElement r = FieldElement::generator(field);
    return make_params(n, r, laurent_value(l, r), LCase::explicit_value);
}

}  // namespace lk
