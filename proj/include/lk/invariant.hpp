#pragma once

// K(n) = intersection of ker C_ij, the explicit spanning vectors of the
// invariant subspaces, and the checks built on them.

#include "lk/check.hpp"
#include "lk/representation.hpp"
#include "lk/subspace.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace lk {

// A vector of V^(n) written in the w_{s,t} basis.
class VectorExpr {
public:
    VectorExpr(int n, FieldDescriptor field) : n_(n), field_(std::move(field)) {}

    static VectorExpr from_vector(int n, const FieldDescriptor& field, const Vector& v);

    int n() const { return n_; }
    const FieldDescriptor& field() const { return field_; }
    const std::map<RootIndex, FieldElement>& terms() const { return terms_; }
    FieldElement coefficient(int s, int t) const;

    // Adds c * w_{s,t}.
    VectorExpr& add(int s, int t, const FieldElement& c);
    VectorExpr& add(const VectorExpr& o, const FieldElement& c);

    Vector to_vector() const;

    friend bool operator==(const VectorExpr& a, const VectorExpr& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    int n_;
    FieldDescriptor field_;
    std::map<RootIndex, FieldElement> terms_;  // nonzero coefficients only
};

// V^(n-1) inside V^(n): same coefficients, w_{s,t} with t <= n-1.
VectorExpr embed_subrep(const VectorExpr& v);
VectorExpr embed_to(const VectorExpr& v, int n);
SubspaceBasis embed_to(const SubspaceBasis& w, int from_n, int to_n);
// span{w_{s,t} : t <= level} inside V^(n).
SubspaceBasis level_subspace(const FieldDescriptor& field, int n, int level);

std::vector<Vector> to_vectors(const std::vector<VectorExpr>& v);
SubspaceBasis span_of(const std::vector<VectorExpr>& v);

struct KnResult {
    ParamSpec params;
    SubspaceBasis kn;
    std::size_t k_n;
};

// Throws std::logic_error if the computed K(n) fails to be nu_i-invariant.
KnResult compute_Kn(const RepSet& rep);

// sum_{s<t} r^{s+t} w_{s,t}.
VectorExpr onedim_vector(const ParamSpec& p);
// n = 3: w12 + r w13 + r^2 w23 when l = 1/r^3, w12 - w13/r + w23/r^2 when
// l = -r^3; both when the two values of l coincide.
std::vector<VectorExpr> n3_onedim_vectors(const ParamSpec& p);
// v_1 .. v_{n-1} with sign epsilon = +-1.
std::vector<VectorExpr> v_vectors(const ParamSpec& p, int epsilon);
// u_1, u_2, u_3 at n = 4.
std::vector<VectorExpr> u_vectors_n4(const ParamSpec& p);
// The n-2 vectors added at level `level` (the two base vectors at level 4).
std::vector<VectorExpr> w_vectors(int level, const ParamSpec& p);
// V_1 .. V_{level-2} at level `level`.
std::vector<VectorExpr> V_vectors(int level, const ParamSpec& p);

// span of all V_k^(j), 3 <= j <= n, embedded in V^(n).
SubspaceBasis inductive_V_span(const ParamSpec& p);
// K(n-1) + span(w^(n)) built from the level-4 base upward, in V^(n).
SubspaceBasis inductive_w_span(const ParamSpec& p);

// Action identities of g_i on V_k^(n) at l = -r^3, n >= 5, plus membership of
// each V_k^(n) in K(n).
CheckList lemma4_check(const RepSet& rep);

struct GenericityTrial {
    Rational r;
    Rational l;
    std::size_t k_n;
    int redraws;
};

struct GenericityReport {
    int n;
    std::uint64_t seed;
    std::vector<GenericityTrial> trials;
    bool pass() const;
};

// True when l lies in the reducibility locus for (n, r).
bool in_reducibility_locus(int n, const Rational& r, const Rational& l);
std::size_t generic_kn(int n, const Rational& r, const Rational& l);
GenericityReport genericity_probe(int n, int trials, std::uint64_t seed);

enum class TraceCase { l_eq_r_n8, l_eq_neg_r3_n8 };

struct ProofTrace {
    VectorExpr base;               // stated to lie in K(8)
    VectorExpr image;              // stated value of nu_7 nu_6 nu_5 nu_4 applied to base
    std::vector<int> applied;      // generator indices in application order
    bool image_in_previous_level;  // stated membership of image in embedded K(7)
};

ProofTrace proof_trace_vectors(TraceCase c, const ParamSpec& p);
CheckList check_proof_trace(TraceCase c);

}  // namespace lk
