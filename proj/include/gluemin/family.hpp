#pragma once

#include "gluemin/subspace.hpp"

namespace gluemin {

// A finite union of subspaces in antichain normal form: no member includes
// another, members canonically ordered. Over an infinite field a subspace is
// contained in a finite union iff it is contained in one member, which makes
// union containment (and uniqueness of antichain covers) decidable.
class SubspaceFamily {
public:
    explicit SubspaceFamily(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    static SubspaceFamily antichain_reduce(std::vector<Subspace> members,
                                           std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<Subspace>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool union_includes_subspace(const Subspace& s) const;
    bool union_includes_family(const SubspaceFamily& g) const;

    bool operator==(const SubspaceFamily& other) const = default;

private:
    std::size_t ambient_dim_;
    std::vector<Subspace> members_;
};

inline bool family_equal(const SubspaceFamily& f, const SubspaceFamily& g) {
    return f == g;
}

// The unique smallest antichain cover of a finite point set: spans of the
// nonzero points, antichain-reduced ({0} alone when all points vanish).
SubspaceFamily minimal_cover_points(const std::vector<Vec>& points,
                                    std::size_t ambient_dim);

// Over-approximation: collapse the family to the single sum of its members.
SubspaceFamily widen(const SubspaceFamily& f);

} // namespace gluemin
