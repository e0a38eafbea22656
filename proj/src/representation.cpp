#include "lk/representation.hpp"

#include <stdexcept>
#include <string>

namespace lk {

std::vector<NuCase> nu_cases(int n, int i, RootIndex beta) {
    auto in_support = [&](int k) { return k >= 1 && k <= n - 1 && beta.supports(k); };
    const bool hits = in_support(i - 1) || in_support(i) || in_support(i + 1);
    const bool covers = in_support(i - 1) && in_support(i) && in_support(i + 1);

    std::vector<NuCase> out;
    if (!hits || covers) out.push_back(NuCase::diagonal_r);
    if (beta.s == i && beta.t == i + 1) out.push_back(NuCase::simple);
    if (beta.t == i && beta.s <= i - 1) out.push_back(NuCase::a);
    if (beta.s == i + 1 && beta.t >= i + 2) out.push_back(NuCase::b);
    if (beta.t == i + 1 && beta.s <= i - 1) out.push_back(NuCase::c);
    if (beta.s == i && beta.t >= i + 2) out.push_back(NuCase::d);
    return out;
}

Matrix nu_matrix(const ParamSpec& p, int i) {
    const int n = p.n;
    if (i < 1 || i > n - 1)
        throw std::out_of_range("nu_matrix: i=" + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
    const FieldDescriptor& f = p.field;
    const std::size_t simple = root_position(n, {i, i + 1});
    const FieldElement l_inv = p.l.inverse();
    Matrix m(f, lk_dimension(n), lk_dimension(n));

    for (const RootIndex& beta : positive_roots(n)) {
        const auto cases = nu_cases(n, i, beta);
        if (cases.size() != 1)
            throw std::logic_error("nu_matrix: root (" + std::to_string(beta.s) + "," + std::to_string(beta.t) +
                                   ") matches " + std::to_string(cases.size()) + " cases for i=" + std::to_string(i));
        const std::size_t col = root_position(n, beta);
        const int ht = beta.height();
        switch (cases.front()) {
            case NuCase::diagonal_r:
                m(col, col) = p.r;
                break;
            case NuCase::simple:
                m(col, col) = l_inv;
                break;
            case NuCase::a:  // beta + alpha_i
                m(root_position(n, {beta.s, i + 1}), col) = FieldElement::one(f);
                break;
            case NuCase::b:
                m(root_position(n, {i, beta.t}), col) = FieldElement::one(f);
                m(simple, col) = p.m * p.r.pow(ht - 1);
                m(col, col) = -p.m;
                break;
            case NuCase::c:  // beta - alpha_i
                m(root_position(n, {beta.s, i}), col) = FieldElement::one(f);
                m(simple, col) = p.m * l_inv * p.r.pow(2 - ht);
                m(col, col) = -p.m;
                break;
            case NuCase::d:
                m(root_position(n, {i + 1, beta.t}), col) = FieldElement::one(f);
                break;
        }
    }
    return m;
}

Matrix e_matrix(const ParamSpec& p, int /*i*/, const Matrix& nu_i) {
    const Matrix id = Matrix::identity(p.field, nu_i.rows());
    Matrix quad = nu_i * nu_i + p.m * nu_i - id;
    return (p.l / p.m) * quad;
}

RepSet RepSet::build(const ParamSpec& p) {
    std::vector<Matrix> nu;
    for (int i = 1; i < p.n; ++i) nu.push_back(nu_matrix(p, i));
    return from_generators(p, std::move(nu));
}

RepSet RepSet::from_generators(const ParamSpec& p, std::vector<Matrix> nu) {
    if (nu.size() != static_cast<std::size_t>(p.n - 1))
        throw std::invalid_argument("RepSet: expected n-1 generator matrices");
    RepSet rep(p);
    rep.nu_ = std::move(nu);
    for (int i = 1; i < p.n; ++i) {
        const Matrix& g = rep.nu_[static_cast<std::size_t>(i - 1)];
        if (!g.is_square() || g.rows() != lk_dimension(p.n))
            throw std::invalid_argument("RepSet: generator has wrong size");
        rep.nu_inv_.push_back(inverse(g));
        rep.e_.push_back(e_matrix(p, i, g));
    }
    for (int i = 1; i < p.n; ++i) {
        Matrix c = rep.e(i);
        rep.c_.emplace(std::pair{i, i + 1}, c);
        for (int j = i + 2; j <= p.n; ++j) {
            c = rep.nu_inv(j - 1) * c * rep.nu(j - 1);
            rep.c_.emplace(std::pair{i, j}, c);
        }
    }
    return rep;
}

const Matrix& RepSet::nu(int i) const {
    if (i < 1 || i > n() - 1) throw std::out_of_range("RepSet::nu: index " + std::to_string(i));
    return nu_[static_cast<std::size_t>(i - 1)];
}

const Matrix& RepSet::nu_inv(int i) const {
    if (i < 1 || i > n() - 1) throw std::out_of_range("RepSet::nu_inv: index " + std::to_string(i));
    return nu_inv_[static_cast<std::size_t>(i - 1)];
}

const Matrix& RepSet::e(int i) const {
    if (i < 1 || i > n() - 1) throw std::out_of_range("RepSet::e: index " + std::to_string(i));
    return e_[static_cast<std::size_t>(i - 1)];
}

const Matrix& RepSet::c(int i, int j) const {
    auto it = c_.find({i, j});
    if (it == c_.end())
        throw std::out_of_range("RepSet::c: (" + std::to_string(i) + "," + std::to_string(j) + ") not 1<=i<j<=n");
    return it->second;
}

const Matrix& c_matrix(const RepSet& rep, int i, int j) { return rep.c(i, j); }

Matrix c_matrix(const RepSet& rep, int i, int j, CConvention convention) {
    if (convention == CConvention::left_action) return rep.c(i, j);
    if (i < 1 || j <= i || j > rep.n())
        throw std::out_of_range("c_matrix: (" + std::to_string(i) + "," + std::to_string(j) + ") not 1<=i<j<=n");
    Matrix c = rep.e(i);
    for (int k = i + 1; k < j; ++k) c = rep.nu(k) * c * rep.nu_inv(k);
    return c;
}

CheckList relation_suite(const RepSet& rep) {
    CheckList out;
    const int n = rep.n();
    const ParamSpec& p = rep.params();
    const Matrix id = Matrix::identity(p.field, rep.dimension());
    auto idx = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };

    for (int i = 1; i < n; ++i) {
        out.push_back({"inverse " + std::to_string(i), rep.nu(i) * rep.nu_inv(i) == id, ""});
        out.push_back({"g_i e_i = l^-1 e_i " + std::to_string(i), rep.nu(i) * rep.e(i) == p.l.inverse() * rep.e(i), ""});
    }
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (j == i + 1) {
                const Matrix& a = rep.nu(i);
                const Matrix& b = rep.nu(j);
                out.push_back({"braid " + idx(i, j), a * b * a == b * a * b, ""});
            } else {
                out.push_back({"commute " + idx(i, j), rep.nu(i) * rep.nu(j) == rep.nu(j) * rep.nu(i), ""});
                out.push_back({"e_i e_j = 0 " + idx(i, j), (rep.e(i) * rep.e(j)).is_zero(), ""});
                out.push_back({"e_j e_i = 0 " + idx(j, i), (rep.e(j) * rep.e(i)).is_zero(), ""});
            }
        }
    }
    for (int i = 1; i < n; ++i) {
        for (int j : {i - 1, i + 1}) {
            if (j < 1 || j > n - 1) continue;
            out.push_back({"e_i g_j e_i = l e_i " + idx(i, j), rep.e(i) * rep.nu(j) * rep.e(i) == p.l * rep.e(i), ""});
        }
    }
    return out;
}

}  // namespace lk
