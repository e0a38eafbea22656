#include "lk/matrix.hpp"

#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>

namespace lk {

namespace {

void require_same_field(const FieldDescriptor& a, const FieldDescriptor& b, const char* what) {
    if (!(a == b)) throw std::invalid_argument(std::string(what) + ": mixed-field operands " + a.to_string() +
                                               " vs " + b.to_string());
}

void require_shape(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

// Rough size of an entry; cheap pivots keep intermediate expressions small.
std::size_t entry_weight(const FieldElement& x) {
    auto poly_weight = [](const Polynomial& p) {
        std::size_t w = 0;
        for (const Rational& c : p.coefficients())
            if (c != 0) w += 1 + mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2);
        return w;
    };
    return std::visit(
        [&](const auto& v) -> std::size_t {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Rational>)
                return mpz_sizeinbase(v.get_num_mpz_t(), 2) + mpz_sizeinbase(v.get_den_mpz_t(), 2);
            else if constexpr (std::is_same_v<T, RatFunc>)
                return poly_weight(v.numerator()) + poly_weight(v.denominator());
            else
                return poly_weight(v.residue());
        },
        x.storage());
}

}  // namespace

Matrix::Matrix(FieldDescriptor field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, FieldElement::zero(field_)) {}

Matrix::Matrix(FieldDescriptor field, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw std::invalid_argument("Matrix: entry count does not match shape");
}

Matrix Matrix::identity(const FieldDescriptor& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(field);
    return m;
}

Matrix Matrix::from_rows(const FieldDescriptor& field, std::size_t cols, const std::vector<Vector>& rows) {
    std::vector<FieldElement> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        require_shape(r.size() == cols, "Matrix::from_rows");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return Matrix(field, rows.size(), cols, std::move(entries));
}

Vector Matrix::row(std::size_t i) const {
    return Vector(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_, "matrix +");
    require_shape(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix +");
    Matrix c = a;
    for (std::size_t k = 0; k < c.a_.size(); ++k)
        if (!b.a_[k].is_zero()) c.a_[k] += b.a_[k];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_, "matrix -");
    require_shape(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix -");
    Matrix c = a;
    for (std::size_t k = 0; k < c.a_.size(); ++k)
        if (!b.a_[k].is_zero()) c.a_[k] -= b.a_[k];
    return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_, "matrix *");
    require_shape(a.cols_ == b.rows_, "matrix *");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const FieldElement& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const FieldElement& y = b(k, j);
                if (y.is_zero()) continue;
                c(i, j) += x * y;
            }
        }
    }
    return c;
}

Matrix operator*(const FieldElement& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.a_)
        if (!x.is_zero()) x = s * x;
    return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
    require_shape(a.cols_ == v.size(), "matrix-vector *");
    Vector out = zero_vector(a.field_, a.rows_);
    for (std::size_t k = 0; k < a.cols_; ++k) {
        if (v[k].is_zero()) continue;
        for (std::size_t i = 0; i < a.rows_; ++i) {
            const FieldElement& x = a(i, k);
            if (!x.is_zero()) out[i] += x * v[k];
        }
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::stack(const Matrix& top, const Matrix& bottom) {
    require_same_field(top.field_, bottom.field_, "Matrix::stack");
    require_shape(top.cols_ == bottom.cols_, "Matrix::stack");
    std::vector<FieldElement> e = top.a_;
    e.insert(e.end(), bottom.a_.begin(), bottom.a_.end());
    return Matrix(top.field_, top.rows_ + bottom.rows_, top.cols_, std::move(e));
}

Vector zero_vector(const FieldDescriptor& f, std::size_t n) { return Vector(n, FieldElement::zero(f)); }

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

RrefResult rref(const Matrix& m) {
    std::vector<Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));

    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols() && next < rows.size(); ++c) {
        std::size_t p = rows.size();
        std::size_t best = 0;
        for (std::size_t i = next; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            const std::size_t w = entry_weight(rows[i][c]);
            if (p == rows.size() || w < best) {
                p = i;
                best = w;
            }
        }
        if (p == rows.size()) continue;
        std::swap(rows[next], rows[p]);
        Vector& piv = rows[next];
        if (!piv[c].is_one()) {
            FieldElement inv = piv[c].inverse();
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!piv[j].is_zero()) piv[j] = piv[j] * inv;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == next || rows[i][c].is_zero()) continue;
            FieldElement f = rows[i][c];
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!piv[j].is_zero()) rows[i][j] -= f * piv[j];
        }
        pivots.push_back(c);
        ++next;
    }
    rows.resize(pivots.size());
    return {Matrix::from_rows(m.field(), m.cols(), rows), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw std::domain_error("inverse: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return m;
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = FieldElement::one(m.field());
    }
    RrefResult r = rref(aug);
    if (r.rank() < n || r.pivots[n - 1] != n - 1) throw std::domain_error("inverse: matrix is singular");
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.rref(i, n + j);
    return inv;
}

}  // namespace lk
