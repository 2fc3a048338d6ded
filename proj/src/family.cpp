#include "gluemin/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace gluemin {

SubspaceFamily SubspaceFamily::antichain_reduce(std::vector<Subspace> members,
                                                std::size_t ambient_dim) {
    for (const auto& s : members)
        if (s.ambient_dim() != ambient_dim)
            throw std::invalid_argument("antichain_reduce: ambient mismatch");
    SubspaceFamily f(ambient_dim);
    for (std::size_t i = 0; i < members.size(); ++i) {
        bool covered = false;
        for (std::size_t j = 0; j < members.size() && !covered; ++j) {
            if (i == j)
                continue;
            if (members[j].includes(members[i]) &&
                !(members[i] == members[j] && j > i))
                covered = true; // kept by j (first occurrence wins for duplicates)
        }
        if (!covered)
            f.members_.push_back(members[i]);
    }
    std::sort(f.members_.begin(), f.members_.end());
    return f;
}

bool SubspaceFamily::union_includes_subspace(const Subspace& s) const {
    if (s.ambient_dim() != ambient_dim_)
        throw std::invalid_argument("union_includes_subspace: ambient mismatch");
    for (const auto& m : members_)
        if (m.includes(s))
            return true;
    return false;
}

bool SubspaceFamily::union_includes_family(const SubspaceFamily& g) const {
    if (g.ambient_dim_ != ambient_dim_)
        throw std::invalid_argument("union_includes_family: ambient mismatch");
    for (const auto& m : g.members_)
        if (!union_includes_subspace(m))
            return false;
    return true;
}

SubspaceFamily minimal_cover_points(const std::vector<Vec>& points,
                                    std::size_t ambient_dim) {
    std::vector<Subspace> lines;
    bool all_zero = true;
    for (const auto& p : points) {
        if (is_zero_vec(p))
            continue;
        all_zero = false;
        lines.push_back(Subspace::span({p}, ambient_dim));
    }
    if (all_zero)
        lines.push_back(Subspace::zero(ambient_dim));
    return SubspaceFamily::antichain_reduce(std::move(lines), ambient_dim);
}

SubspaceFamily widen(const SubspaceFamily& f) {
    if (f.empty())
        return f;
    Subspace total = Subspace::zero(f.ambient_dim());
    for (const auto& m : f.members())
        total = sum(total, m);
    return SubspaceFamily::antichain_reduce({total}, f.ambient_dim());
}

} // namespace gluemin
