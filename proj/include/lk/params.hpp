#pragma once

// Positive roots of A_{n-1} and the (n, r, l) parameter bundle.

#include "lk/field.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lk {

// Basis vector w_{s,t}, i.e. the root alpha_s + ... + alpha_{t-1}.
struct RootIndex {
    int s;
    int t;

    int height() const { return t - s; }
    bool supports(int k) const { return s <= k && k < t; }

    friend auto operator<=>(const RootIndex&, const RootIndex&) = default;
};

// Lexicographic (s, t); this is the basis order everywhere. Throws for n < 2.
std::vector<RootIndex> positive_roots(int n);
// Position of w_{s,t} in the basis order.
std::size_t root_position(int n, RootIndex b);
std::size_t lk_dimension(int n);

// Reducibility loci for l as a Laurent monomial in r.
enum class LCase { l_eq_r, l_eq_neg_r3, l_eq_inv_r2n3, l_eq_inv_rn3, l_eq_neg_inv_rn3, explicit_value };

// Parameters of the Lawrence-Krammer module in terms of t and q = 1/r^2.
enum class TCase { t_eq_inv_qn, t_eq_inv_sqrt_qn, t_eq_neg_inv_sqrt_qn, t_eq_inv_q, t_eq_neg_one };

std::string_view to_string(LCase c);
std::string_view to_string(TCase c);
std::optional<LCase> parse_lcase(std::string_view tag);
std::optional<TCase> parse_tcase(std::string_view tag);

// l = c * r^k.
struct LaurentMonomial {
    long coefficient;
    int power;
};

// Throws for LCase::explicit_value.
LaurentMonomial l_monomial(LCase c, int n);
FieldElement laurent_value(const LaurentMonomial& mono, const FieldElement& r);

// l = r^3 / t with q = 1/r^2 and sqrt(q) = 1/r.
LCase params_from_tq(TCase t, int n);

// Parses "r", "-r^3", "r5", "r^-7", "1/r^7", "-1/r^2", "2*r^3", "1", "-1".
std::optional<LaurentMonomial> parse_laurent(std::string_view text);
std::string to_string(const LaurentMonomial& mono);

struct ParamSpec {
    int n;
    FieldDescriptor field;
    FieldElement r;
    FieldElement l;
    FieldElement m;  // 1/r - r
    LCase lcase = LCase::explicit_value;
};

// Validates n >= 2, l != 0, and r^{2k} != 1 for 1 <= k <= n.
ParamSpec make_params(int n, const FieldElement& r, const FieldElement& l, LCase lcase = LCase::explicit_value);
// r is the field generator; l follows the case tag.
ParamSpec make_params(int n, const FieldDescriptor& field, LCase lcase);
ParamSpec make_params(int n, const FieldDescriptor& field, const LaurentMonomial& l);

}  // namespace lk
