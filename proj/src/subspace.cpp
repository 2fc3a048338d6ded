#include "gluemin/subspace.hpp"

#include <stdexcept>

namespace gluemin {

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
    for (const auto& v : vectors)
        if (v.size() != ambient_dim)
            throw std::invalid_argument("span: vector length != ambient dimension");
    return span(Matrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::span(const Matrix& rows) {
    Subspace s(rows.cols());
    Matrix r = rref(rows);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        Vec row = r.row(i);
        if (!is_zero_vec(row))
            s.basis_.push_back(std::move(row));
    }
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    return span(Matrix::identity(ambient_dim));
}

Matrix Subspace::basis_rows() const {
    return Matrix::from_rows(basis_, ambient_dim_);
}

Matrix Subspace::inclusion() const {
    return Matrix::from_columns(basis_, ambient_dim_);
}

bool Subspace::contains(const Vec& v) const {
    return coordinates(v).has_value();
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_dim_)
        throw std::invalid_argument("contains: dimension mismatch");
    // Residual elimination against the RREF basis.
    Vec residual = v;
    Vec coords(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        std::size_t pivot = 0;
        while (basis_[i][pivot] == 0)
            ++pivot;
        Rational factor = residual[pivot];
        if (factor != 0) {
            coords[i] = factor;
            for (std::size_t c = 0; c < ambient_dim_; ++c)
                residual[c] -= factor * basis_[i][c];
        }
    }
    if (!is_zero_vec(residual))
        return std::nullopt;
    return coords;
}

bool Subspace::includes(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_)
        throw std::invalid_argument("includes: dimension mismatch");
    for (const auto& v : other.basis_)
        if (!contains(v))
            return false;
    return true;
}

std::weak_ordering Subspace::operator<=>(const Subspace& other) const {
    if (auto c = ambient_dim_ <=> other.ambient_dim_; c != 0)
        return std::weak_ordering(c);
    if (auto c = basis_.size() <=> other.basis_.size(); c != 0)
        return std::weak_ordering(c);
    return basis_ <=> other.basis_;
}

Subspace sum(const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != t.ambient_dim())
        throw std::invalid_argument("sum: dimension mismatch");
    std::vector<Vec> all = s.basis_;
    all.insert(all.end(), t.basis_.begin(), t.basis_.end());
    return Subspace::span(all, s.ambient_dim());
}

Subspace intersect(const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != t.ambient_dim())
        throw std::invalid_argument("intersect: dimension mismatch");
    // Zassenhaus-style: kernel of [S^T | -T^T] gives coefficient pairs with
    // equal combinations; the common value spans the intersection.
    if (s.dim() == 0 || t.dim() == 0)
        return Subspace::zero(s.ambient_dim());
    Matrix st = hstack(s.inclusion(), -t.inclusion());
    Subspace ker = kernel(st);
    std::vector<Vec> gens;
    Matrix sinc = s.inclusion();
    for (const auto& k : ker.basis()) {
        Vec coeffs(k.begin(), k.begin() + static_cast<long>(s.dim()));
        gens.push_back(sinc.apply(coeffs));
    }
    return Subspace::span(gens, s.ambient_dim());
}

Subspace image(const Matrix& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim())
        throw std::invalid_argument("image: dimension mismatch");
    std::vector<Vec> gens;
    for (const auto& v : s.basis())
        gens.push_back(m.apply(v));
    return Subspace::span(gens, m.rows());
}

Subspace preimage(const Matrix& m, const Subspace& s) {
    if (m.rows() != s.ambient_dim())
        throw std::invalid_argument("preimage: dimension mismatch");
    // x with m x in s  <=>  x in kernel of (complement functionals . m).
    // Equivalently: solve on the graph. We use: preimage = kernel of P*m where
    // rows of P span the annihilator of s.
    // Annihilator basis = kernel of basis_rows (as functionals), i.e. kernel
    // of s.basis_rows() acting on covectors: rows y with <y, b> = 0 for all b.
    Subspace ann = kernel(s.basis_rows()); // in Q^{ambient}, y with B y = 0
    if (ann.dim() == 0)
        return Subspace::full(m.cols());
    Matrix p = ann.basis_rows(); // each row is a functional vanishing on s
    return kernel(p * m);
}

Subspace kernel(const Matrix& m) {
    Matrix r = rref(m);
    std::vector<long> pivot_col_of_row;
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t row = 0; row < r.rows(); ++row) {
        std::size_t c = 0;
        while (c < r.cols() && r.at(row, c) == 0)
            ++c;
        if (c == r.cols())
            break;
        pivot_col_of_row.push_back(static_cast<long>(c));
        is_pivot[c] = true;
    }
    std::vector<Vec> gens;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vec v(m.cols());
        v[free] = 1;
        for (std::size_t row = 0; row < pivot_col_of_row.size(); ++row)
            v[static_cast<std::size_t>(pivot_col_of_row[row])] = -r.at(row, free);
        gens.push_back(std::move(v));
    }
    return Subspace::span(gens, m.cols());
}

Subspace product_subspace(const Subspace& s, const Subspace& t) {
    std::vector<Vec> gens;
    Vec zs(s.ambient_dim()), zt(t.ambient_dim());
    for (const auto& v : s.basis())
        gens.push_back(concat(v, zt));
    for (const auto& v : t.basis())
        gens.push_back(concat(zs, v));
    return Subspace::span(gens, s.ambient_dim() + t.ambient_dim());
}

std::vector<Vec> complement_basis(const Subspace& s) {
    std::vector<bool> pivot(s.ambient_dim(), false);
    for (const auto& v : s.basis()) {
        std::size_t c = 0;
        while (v[c] == 0)
            ++c;
        pivot[c] = true;
    }
    std::vector<Vec> out;
    for (std::size_t c = 0; c < s.ambient_dim(); ++c) {
        if (pivot[c])
            continue;
        Vec e(s.ambient_dim());
        e[c] = 1;
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace gluemin
