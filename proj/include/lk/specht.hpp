#pragma once

// Partitions, standard Young tableaux, and identification of invariant
// subspaces of V^(n) with Specht modules of the Hecke algebra by signature.

#include "lk/check.hpp"
#include "lk/invariant.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lk {

class Partition {
public:
    // Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    std::size_t length() const { return parts_.size(); }
    Partition conjugate() const;
    // "(3,2)", "(1,1,1)".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// Reverse lexicographic: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

std::size_t hook_length_dim(const Partition& lam);

struct SytCount {
    std::size_t count = 0;
    std::size_t g1_row = 0;  // 2 immediately right of 1
    std::size_t g1_col = 0;  // 2 immediately below 1
};

SytCount enumerate_syt(const Partition& lam);

struct Corner {
    int row;      // 0-based
    int col;      // 0-based
    int content;  // col - row
};

std::vector<Corner> removable_corners(const Partition& lam);
// Partitions of n-1 from removing one corner, top row first. Throws for n < 2.
std::vector<Partition> branch_restrict(const Partition& lam);

struct ModuleSignature {
    std::size_t dim = 0;
    std::size_t g1_mult_r = 0;
    std::size_t g1_mult_neg = 0;
    std::vector<std::size_t> restriction_dims;             // sorted ascending
    std::map<int, std::size_t> restriction_by_content;     // content of removed box -> dim

    friend bool operator==(const ModuleSignature&, const ModuleSignature&) = default;
};

ModuleSignature operator+(const ModuleSignature& a, const ModuleSignature& b);

// Restriction is read off the eigenspaces of g_{n-1}...g_1 g_1...g_{n-1} on W,
// which acts by r^{2c} on the summand reached by removing a box of content c.
// Throws std::domain_error if W is not invariant or the Hecke quadratic fails on W.
ModuleSignature subspace_signature(const SubspaceBasis& w, const RepSet& rep);

ModuleSignature predicted_signature(const Partition& lam);

struct Identification {
    std::optional<Partition> partition;  // empty when ambiguous
    std::vector<Partition> candidates;   // every partition of n that matched
    bool ambiguous() const { return !partition.has_value(); }
};

Identification identify_module(const ModuleSignature& sig, int n);

struct ExpectedSubspace {
    std::string label;
    std::vector<Partition> summands;  // one entry for an irreducible subspace
};

// Throws std::invalid_argument for qn_minus_one with a t case other than
// t = -1, and when a listed module does not exist at this n.
std::vector<ExpectedSubspace> classify_expected(int n, TCase t, bool qn_minus_one);

struct ClassifiedSubspace {
    std::string label;
    std::size_t dim = 0;
    std::string identified;  // a partition, a sum of partitions, or "ambiguous"
    ModuleSignature signature;
    bool matches = false;
};

struct ClassificationReport {
    int n = 0;
    TCase t_case{};
    bool qn_minus_one = false;
    LCase l_case{};
    FieldDescriptor field = FieldDescriptor::ratfunc();
    std::size_t k_n = 0;
    std::vector<ClassifiedSubspace> subspaces;
    CheckList checks;
    bool pass() const { return all_pass(checks); }
};

ClassificationReport verify_main_theorem(int n, TCase t, bool qn_minus_one);

}  // namespace lk
