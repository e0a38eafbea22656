#include "generators.hpp"
#include "lk/subspace.hpp"

#include <doctest.h>

using namespace lk;
using namespace lktest;

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

struct BareissResult {
    IntMatrix echelon;
    std::vector<std::size_t> pivots;
};

// Fraction-free elimination: every intermediate entry stays an integer.
BareissResult bareiss(IntMatrix a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t p = row;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[row], a[p]);
        for (std::size_t i = row + 1; i < a.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class v = a[row][c] * a[i][j] - a[i][c] * a[row][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = v;
            }
            a[i][c] = 0;
        }
        prev = a[row][c];
        pivots.push_back(c);
        ++row;
    }
    a.resize(row);
    return {a, pivots};
}

// Kernel basis from the fraction-free echelon form by back substitution.
std::vector<std::vector<Rational>> oracle_kernel(const IntMatrix& m, std::size_t cols) {
    const BareissResult b = bareiss(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : b.pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[f] = 1;
        for (std::size_t k = b.pivots.size(); k-- > 0;) {
            const std::size_t pc = b.pivots[k];
            Rational acc = 0;
            for (std::size_t j = pc + 1; j < cols; ++j) acc += Rational(b.echelon[k][j]) * x[j];
            x[pc] = -acc / Rational(b.echelon[k][pc]);
        }
        out.push_back(x);
    }
    return out;
}

IntMatrix random_int_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int rank_cap) {
    std::uniform_int_distribution<int> d(-4, 4);
    // rows x rank_cap times rank_cap x cols keeps the rank small enough to leave a kernel.
    std::vector<std::vector<int>> a(rows, std::vector<int>(static_cast<std::size_t>(rank_cap)));
    std::vector<std::vector<int>> b(static_cast<std::size_t>(rank_cap), std::vector<int>(cols));
    for (auto& r : a)
        for (auto& x : r) x = d(rng);
    for (auto& r : b)
        for (auto& x : r) x = d(rng);
    IntMatrix m(rows, std::vector<mpz_class>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t k = 0; k < static_cast<std::size_t>(rank_cap); ++k) m[i][j] += a[i][k] * b[k][j];
    return m;
}

Matrix to_matrix(const IntMatrix& m, std::size_t cols) {
    const FieldDescriptor q = FieldDescriptor::rational();
    Matrix out(q, m.size(), cols);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = FieldElement(Rational(m[i][j]));
    return out;
}

Vector to_vector(const std::vector<Rational>& v) {
    Vector out;
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

SubspaceBasis random_subspace(std::mt19937& rng, const FieldDescriptor& f, std::size_t ambient, std::size_t count) {
    std::vector<Vector> vs;
    std::uniform_int_distribution<int> coin(0, 3);
    for (std::size_t k = 0; k < count; ++k) {
        Vector v;
        for (std::size_t j = 0; j < ambient; ++j)
            v.push_back(coin(rng) == 0 ? FieldElement::zero(f) : random_element(rng, f));
        vs.push_back(v);
    }
    return SubspaceBasis::span(f, ambient, vs);
}

}  // namespace

TEST_CASE("kernel of identity and zero") {
    const FieldDescriptor f = FieldDescriptor::ratfunc();
    CHECK(kernel(Matrix::identity(f, 5)).dim() == 0);
    CHECK(kernel(Matrix(f, 5, 5)).dim() == 5);
}

TEST_CASE("rref kernel matches fraction-free elimination oracle") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 6, cols = 6;
        const IntMatrix im = random_int_matrix(rng, rows, cols, 1 + trial % 6);
        const Matrix m = to_matrix(im, cols);
        const RrefKernel rk = rref_and_kernel(m);
        const auto oracle = oracle_kernel(im, cols);
        std::vector<Vector> ov;
        for (const auto& v : oracle) ov.push_back(to_vector(v));
        CHECK(rk.rref.rank() + rk.kernel.dim() == cols);
        CHECK(rk.kernel.dim() == oracle.size());
        CHECK(rk.kernel == SubspaceBasis::span(FieldDescriptor::rational(), cols, ov));
        for (std::size_t k = 0; k < rk.kernel.dim(); ++k) CHECK(is_zero(m * rk.kernel.vector(k)));
    }
}

TEST_CASE("rref is canonical under row operations") {
    std::mt19937 rng(5);
    const FieldDescriptor f = FieldDescriptor::ratfunc();
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m(f, 4, 5);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 5; ++j) m(i, j) = random_element(rng, f);
        const FieldElement c = random_element(rng, f);
        for (std::size_t j = 0; j < 5; ++j) m(3, j) = m(0, j) + c * m(1, j);
        Matrix shuffled(f, 4, 5);
        const FieldElement s = random_element(rng, f) + FieldElement::one(f) * FieldElement::generator(f);
        for (std::size_t j = 0; j < 5; ++j) {
            shuffled(0, j) = m(3, j);
            shuffled(1, j) = s * m(2, j);
            shuffled(2, j) = m(0, j) - m(1, j);
            shuffled(3, j) = m(1, j);
        }
        const RrefResult a = rref(m), b = rref(shuffled);
        CHECK(a.rref == b.rref);
        CHECK(a.pivots == b.pivots);
    }
}

TEST_CASE("inverse") {
    std::mt19937 rng(11);
    const FieldDescriptor f = FieldDescriptor::cyclotomic(12);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m(f, 4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = random_element(rng, f);
        if (rank(m) < 4) continue;
        CHECK(m * inverse(m) == Matrix::identity(f, 4));
        CHECK(inverse(m) * m == Matrix::identity(f, 4));
    }
    CHECK_THROWS_AS(inverse(Matrix(f, 3, 3)), std::domain_error);
    CHECK_THROWS_AS(inverse(Matrix(f, 2, 3)), std::domain_error);
}

TEST_CASE("lattice operations") {
    std::mt19937 rng(31);
    const FieldDescriptor f = FieldDescriptor::rational();
    for (int trial = 0; trial < 40; ++trial) {
        const SubspaceBasis a = random_subspace(rng, f, 6, 1 + trial % 4);
        const SubspaceBasis b = random_subspace(rng, f, 6, 1 + (trial / 4) % 5);
        const SubspaceBasis i = intersect(a, b);
        const SubspaceBasis s = sum(a, b);
        // Brute force: dim(A + B) is the rank of the stacked bases.
        CHECK(s.dim() == rank(Matrix::stack(a.basis(), b.basis())));
        CHECK(i.dim() + s.dim() == a.dim() + b.dim());
        CHECK(a.contains(i));
        CHECK(b.contains(i));
        CHECK(s.contains(a));
        CHECK(s.contains(b));
        CHECK(intersect(a, a) == a);
        CHECK(sum(a, SubspaceBasis(f, 6)) == a);
        CHECK(std::get<bool>(subspace_lattice(a, a, LatticeOp::equals)));
    }
    CHECK_THROWS_AS(intersect(SubspaceBasis(f, 3), SubspaceBasis(f, 4)), std::invalid_argument);
}

TEST_CASE("invariance_check trivial cases and size mismatch") {
    const FieldDescriptor f = FieldDescriptor::ratfunc();
    std::mt19937 rng(2);
    Matrix t(f, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) t(i, j) = random_element(rng, f);
    const std::vector<Matrix> ops{t};
    CHECK(invariance_check(SubspaceBasis::full(f, 3), ops));
    CHECK(invariance_check(SubspaceBasis(f, 3), ops));
    const std::vector<Matrix> wrong{Matrix::identity(f, 4)};
    CHECK_THROWS_AS(invariance_check(SubspaceBasis::full(f, 3), wrong), std::invalid_argument);
}

TEST_CASE("restriction of an operator to an invariant subspace") {
    const FieldDescriptor f = FieldDescriptor::ratfunc();
    const FieldElement r = FieldElement::generator(f);
    Matrix t(f, 3, 3);
    t(0, 0) = r;
    t(1, 0) = FieldElement::one(f);
    t(1, 1) = r * r;
    t(2, 2) = -r;
    const SubspaceBasis w = SubspaceBasis::coordinate(f, 3, std::vector<std::size_t>{0, 1});
    const Matrix tw = w.restrict(t);
    CHECK(tw.rows() == 2);
    CHECK(tw(0, 0) == r);
    CHECK(tw(1, 0) == FieldElement::one(f));
    CHECK_THROWS_AS(SubspaceBasis::coordinate(f, 3, std::vector<std::size_t>{0, 2}).restrict(t), std::domain_error);
}
