#pragma once

// Subspaces of F^n held by their canonical reduced row echelon basis, so
// that two values compare equal exactly when the subspaces coincide.

#include "lk/matrix.hpp"

#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace lk {

class SubspaceBasis {
public:
    // The zero subspace.
    SubspaceBasis(FieldDescriptor field, std::size_t ambient_dim);

    static SubspaceBasis span(const FieldDescriptor& field, std::size_t ambient_dim, const std::vector<Vector>& vectors);
    static SubspaceBasis row_space(const Matrix& m);
    static SubspaceBasis full(const FieldDescriptor& field, std::size_t ambient_dim);
    // Span of the given standard basis vectors.
    static SubspaceBasis coordinate(const FieldDescriptor& field, std::size_t ambient_dim,
                                    std::span<const std::size_t> indices);

    const FieldDescriptor& field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vector vector(std::size_t k) const { return basis_.row(k); }

    bool contains(const Vector& v) const;
    bool contains(const SubspaceBasis& other) const;
    // Coefficients of v in the canonical basis, or nullopt if v is outside.
    std::optional<Vector> coordinates(const Vector& v) const;

    // Matrix of T restricted to this subspace: column k holds the coordinates
    // of T applied to basis vector k. Throws if the subspace is not T-invariant.
    Matrix restrict(const Matrix& t) const;

    // Orthogonal complement for the standard bilinear form: {y : <x, y> = 0 for all x here}.
    SubspaceBasis annihilator() const;

    friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
        return a.basis_ == b.basis_;
    }

private:
    SubspaceBasis(Matrix basis, std::vector<std::size_t> pivots)
        : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

struct RrefKernel {
    RrefResult rref;
    SubspaceBasis kernel;
};

// rank(rref) + dim(kernel) = cols.
RrefKernel rref_and_kernel(const Matrix& m);
SubspaceBasis kernel(const Matrix& m);

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b);

enum class LatticeOp { intersect, sum, equals, contains_vector };

// Applies `op`; intersect/sum yield a subspace, equals/contains_vector a
// bool. For contains_vector, b must be one-dimensional and the test is
// whether its spanning vector lies in a.
std::variant<SubspaceBasis, bool> subspace_lattice(const SubspaceBasis& a, const SubspaceBasis& b, LatticeOp op);

// True iff every operator maps every basis vector of w back into w.
bool invariance_check(const SubspaceBasis& w, std::span<const Matrix> ops);

}  // namespace lk
