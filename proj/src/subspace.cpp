#include "lk/subspace.hpp"

#include <stdexcept>

namespace lk {

namespace {

void require_ambient(const SubspaceBasis& a, const SubspaceBasis& b, const char* what) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument(std::string(what) + ": ambient dimensions differ (" +
                                    std::to_string(a.ambient_dim()) + " vs " + std::to_string(b.ambient_dim()) + ")");
    if (!(a.field() == b.field()))
        throw std::invalid_argument(std::string(what) + ": mixed-field subspaces");
}

// v minus its projection along the pivot coordinates.
Vector residual(const SubspaceBasis& w, Vector v) {
    const Matrix& b = w.basis();
    for (std::size_t k = 0; k < w.dim(); ++k) {
        const FieldElement c = v[w.pivots()[k]];
        if (c.is_zero()) continue;
        for (std::size_t j = w.pivots()[k]; j < b.cols(); ++j)
            if (!b(k, j).is_zero()) v[j] -= c * b(k, j);
    }
    return v;
}

}  // namespace

SubspaceBasis::SubspaceBasis(FieldDescriptor field, std::size_t ambient_dim)
    : basis_(std::move(field), 0, ambient_dim) {}

SubspaceBasis SubspaceBasis::row_space(const Matrix& m) {
    RrefResult r = rref(m);
    return SubspaceBasis(std::move(r.rref), std::move(r.pivots));
}

SubspaceBasis SubspaceBasis::span(const FieldDescriptor& field, std::size_t ambient_dim,
                                  const std::vector<Vector>& vectors) {
    return row_space(Matrix::from_rows(field, ambient_dim, vectors));
}

SubspaceBasis SubspaceBasis::full(const FieldDescriptor& field, std::size_t ambient_dim) {
    std::vector<std::size_t> piv(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) piv[i] = i;
    return SubspaceBasis(Matrix::identity(field, ambient_dim), std::move(piv));
}

SubspaceBasis SubspaceBasis::coordinate(const FieldDescriptor& field, std::size_t ambient_dim,
                                        std::span<const std::size_t> indices) {
    std::vector<Vector> rows;
    for (std::size_t i : indices) {
        if (i >= ambient_dim) throw std::out_of_range("SubspaceBasis::coordinate: index out of range");
        Vector v = zero_vector(field, ambient_dim);
        v[i] = FieldElement::one(field);
        rows.push_back(std::move(v));
    }
    return span(field, ambient_dim, rows);
}

bool SubspaceBasis::contains(const Vector& v) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("SubspaceBasis::contains: dimension mismatch");
    return is_zero(residual(*this, v));
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
    require_ambient(*this, other, "SubspaceBasis::contains");
    for (std::size_t k = 0; k < other.dim(); ++k)
        if (!contains(other.vector(k))) return false;
    return true;
}

std::optional<Vector> SubspaceBasis::coordinates(const Vector& v) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("SubspaceBasis::coordinates: dimension mismatch");
    if (!contains(v)) return std::nullopt;
    Vector c;
    c.reserve(dim());
    for (std::size_t p : pivots_) c.push_back(v[p]);
    return c;
}

Matrix SubspaceBasis::restrict(const Matrix& t) const {
    if (!t.is_square() || t.rows() != ambient_dim())
        throw std::invalid_argument("SubspaceBasis::restrict: operator size mismatch");
    Matrix out(field(), dim(), dim());
    for (std::size_t k = 0; k < dim(); ++k) {
        auto c = coordinates(t * vector(k));
        if (!c) throw std::domain_error("SubspaceBasis::restrict: subspace is not invariant");
        for (std::size_t j = 0; j < dim(); ++j) out(j, k) = (*c)[j];
    }
    return out;
}

SubspaceBasis SubspaceBasis::annihilator() const { return kernel(basis_); }

RrefKernel rref_and_kernel(const Matrix& m) {
    RrefResult r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<Vector> vecs;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v = zero_vector(m.field(), n);
        v[f] = FieldElement::one(m.field());
        for (std::size_t k = 0; k < r.rank(); ++k)
            if (!r.rref(k, f).is_zero()) v[r.pivots[k]] = -r.rref(k, f);
        vecs.push_back(std::move(v));
    }
    SubspaceBasis ker = SubspaceBasis::span(m.field(), n, vecs);
    return {std::move(r), std::move(ker)};
}

SubspaceBasis kernel(const Matrix& m) { return rref_and_kernel(m).kernel; }

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
    require_ambient(a, b, "intersect");
    if (a.contains(b)) return b;
    if (b.contains(a)) return a;
    return kernel(Matrix::stack(a.annihilator().basis(), b.annihilator().basis()));
}

SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    require_ambient(a, b, "sum");
    return SubspaceBasis::row_space(Matrix::stack(a.basis(), b.basis()));
}

std::variant<SubspaceBasis, bool> subspace_lattice(const SubspaceBasis& a, const SubspaceBasis& b, LatticeOp op) {
    require_ambient(a, b, "subspace_lattice");
    switch (op) {
        case LatticeOp::intersect: return intersect(a, b);
        case LatticeOp::sum: return sum(a, b);
        case LatticeOp::equals: return a == b;
        case LatticeOp::contains_vector:
            if (b.dim() != 1) throw std::invalid_argument("contains_vector: second operand must be a line");
            return a.contains(b.vector(0));
    }
    throw std::logic_error("unknown lattice op");
}

bool invariance_check(const SubspaceBasis& w, std::span<const Matrix> ops) {
    for (const Matrix& t : ops) {
        if (!t.is_square() || t.rows() != w.ambient_dim())
            throw std::invalid_argument("invariance_check: operator size mismatch");
        for (std::size_t k = 0; k < w.dim(); ++k)
            if (!w.contains(t * w.vector(k))) return false;
    }
    return true;
}

}  // namespace lk
