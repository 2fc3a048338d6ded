#pragma once

#include "gluemin/linalg.hpp"

#include <compare>
#include <vector>

namespace gluemin {

// A linear subspace of Q^n, stored as the RREF basis of its row space.
// Canonical: two Subspace values compare equal iff they denote the same
// point set, so structural equality is semantic equality.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient_dim);
    static Subspace span(const Matrix& rows);
    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return basis_.size() == ambient_dim_; }

    const std::vector<Vec>& basis() const { return basis_; }
    // Basis vectors as rows (dim x ambient) and as columns (ambient x dim).
    Matrix basis_rows() const;
    Matrix inclusion() const;

    bool contains(const Vec& v) const;
    bool includes(const Subspace& other) const;

    // Coordinates of v in the basis, if v lies in the subspace.
    std::optional<Vec> coordinates(const Vec& v) const;

    friend Subspace sum(const Subspace& s, const Subspace& t);
    friend Subspace intersect(const Subspace& s, const Subspace& t);

    bool operator==(const Subspace& other) const = default;
    // Deterministic order: ambient, then rank, then lexicographic basis.
    std::weak_ordering operator<=>(const Subspace& other) const;

private:
    std::size_t ambient_dim_;
    std::vector<Vec> basis_;
};

Subspace sum(const Subspace& s, const Subspace& t);
Subspace intersect(const Subspace& s, const Subspace& t);

Subspace image(const Matrix& m, const Subspace& s);
Subspace preimage(const Matrix& m, const Subspace& s);
Subspace kernel(const Matrix& m);

// Subspace of Q^{n+m} under coordinate concatenation.
Subspace product_subspace(const Subspace& s, const Subspace& t);

// Vectors extending s's basis to a basis of the ambient space.
std::vector<Vec> complement_basis(const Subspace& s);

} // namespace gluemin
