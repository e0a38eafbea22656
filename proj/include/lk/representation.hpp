#pragma once

// Matrices of the Lawrence-Krammer representation of the BMW algebra of type
// A_{n-1} on the span of the w_{s,t}. Matrices act on column vectors; column
// j is the image of the j-th basis vector.

#include "lk/check.hpp"
#include "lk/matrix.hpp"
#include "lk/params.hpp"

#include <map>
#include <utility>
#include <vector>

namespace lk {

// Which branch of the generator action applies to a root for a given i.
enum class NuCase { diagonal_r, simple, a, b, c, d };

// Every matching branch for (i, beta); exactly one for valid input. Indices
// i-1 = 0 and i+1 = n are never in the support.
std::vector<NuCase> nu_cases(int n, int i, RootIndex beta);

// The generator g_i, 1 <= i <= n-1. Throws std::logic_error if a root
// matches zero or several branches.
Matrix nu_matrix(const ParamSpec& p, int i);

// (l/m) (nu_i^2 + m nu_i - id).
Matrix e_matrix(const ParamSpec& p, int i, const Matrix& nu_i);

class RepSet {
public:
    static RepSet build(const ParamSpec& p);
    // Derives inverses, e_i and C_ij from caller-supplied generator matrices.
    static RepSet from_generators(const ParamSpec& p, std::vector<Matrix> nu);

    const ParamSpec& params() const { return params_; }
    int n() const { return params_.n; }
    std::size_t dimension() const { return lk_dimension(params_.n); }
    const FieldDescriptor& field() const { return params_.field; }

    // 1-based indices throughout.
    const Matrix& nu(int i) const;
    const Matrix& nu_inv(int i) const;
    const Matrix& e(int i) const;
    const std::vector<Matrix>& generators() const { return nu_; }

    // C_{i,i+1} = e_i; C_{ij} = nu_{j-1}^-1 ... nu_{i+1}^-1 e_i nu_{i+1} ... nu_{j-1}.
    const Matrix& c(int i, int j) const;
    const std::map<std::pair<int, int>, Matrix>& all_c() const { return c_; }

private:
    RepSet(ParamSpec p) : params_(std::move(p)) {}

    ParamSpec params_;
    std::vector<Matrix> nu_;
    std::vector<Matrix> nu_inv_;
    std::vector<Matrix> e_;
    std::map<std::pair<int, int>, Matrix> c_;
};

const Matrix& c_matrix(const RepSet& rep, int i, int j);

enum class CConvention {
    left_action,   // nu_{j-1}^-1 ... nu_{i+1}^-1 e_i nu_{i+1} ... nu_{j-1}; the RepSet default
    right_action,  // the same word read as a right action: nu_{j-1} ... e_i ... nu_{j-1}^-1
};

Matrix c_matrix(const RepSet& rep, int i, int j, CConvention convention);

// Braid relations, g_i e_i = l^-1 e_i, e_i g_j e_i = l e_i for |i-j| = 1,
// and e_i e_j = 0 for |i-j| > 1, each as an exact matrix identity.
CheckList relation_suite(const RepSet& rep);

}  // namespace lk
