#pragma once

// Dense row-major matrices over a single exact field.

#include "lk/field.hpp"

#include <cstddef>
#include <vector>

namespace lk {

using Vector = std::vector<FieldElement>;

class Matrix {
public:
    Matrix(FieldDescriptor field, std::size_t rows, std::size_t cols);
    Matrix(FieldDescriptor field, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);

    static Matrix identity(const FieldDescriptor& field, std::size_t n);
    static Matrix from_rows(const FieldDescriptor& field, std::size_t cols, const std::vector<Vector>& rows);

    const FieldDescriptor& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const FieldElement& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    FieldElement& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const std::vector<FieldElement>& entries() const { return a_; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    bool is_zero() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const FieldElement& c, const Matrix& a);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b);

    Matrix transpose() const;
    // Vertical concatenation; column counts and fields must agree.
    static Matrix stack(const Matrix& top, const Matrix& bottom);

private:
    FieldDescriptor field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> a_;
};

struct RrefResult {
    Matrix rref;                      // nonzero rows only
    std::vector<std::size_t> pivots;  // pivot column per row, strictly increasing
    std::size_t rank() const { return pivots.size(); }
};

// Reduced row echelon form by exact Gauss-Jordan elimination with
// first-nonzero pivoting.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Throws std::domain_error on a singular or non-square input.
Matrix inverse(const Matrix& m);

Vector zero_vector(const FieldDescriptor& f, std::size_t n);
bool is_zero(const Vector& v);

}  // namespace lk
