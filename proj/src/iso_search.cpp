#include "gluemin/iso_search.hpp"

#include <algorithm>

namespace gluemin {

IsoSystem::IsoSystem(const GluedSpace& g, const GluedSpace& h,
                     const std::vector<std::size_t>& sigma) {
    src_dims_ = g.components;
    for (std::size_t c = 0; c < sigma.size(); ++c)
        dst_dims_.push_back(h.components[sigma[c]]);
    nvars_ = 0;
    for (std::size_t c = 0; c < src_dims_.size(); ++c) {
        offsets_.push_back(nvars_);
        nvars_ += src_dims_[c] * dst_dims_[c];
    }
}

Matrix IsoSystem::coeff(std::size_t c, const Matrix& a, const Vec& b) const {
    // (A M_c b)_r = sum_{s,t} A[r,s] M_c[s,t] b[t]
    Matrix out(a.rows(), nvars_);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t s = 0; s < dst_dims_[c]; ++s) {
            if (a.at(r, s) == 0)
                continue;
            for (std::size_t t = 0; t < src_dims_[c]; ++t)
                out.at(r, offsets_[c] + s * src_dims_[c] + t) += a.at(r, s) * b[t];
        }
    return out;
}

Matrix IsoSystem::coeff(std::size_t c, const Vec& b) const {
    return coeff(c, Matrix::identity(dst_dims_[c]), b);
}

void IsoSystem::add_equal(const Matrix& coeff1, const Vec& const1,
                          const Matrix& coeff2, const Vec& const2) {
    for (std::size_t r = 0; r < coeff1.rows(); ++r) {
        Vec row(nvars_);
        for (std::size_t c = 0; c < nvars_; ++c)
            row[c] = coeff1.at(r, c) - coeff2.at(r, c);
        rows_.push_back(std::move(row));
        rhs_.push_back(const2[r] - const1[r]);
    }
}

void IsoSystem::add_equal(const Matrix& coeff1, const Vec& const2) {
    add_equal(coeff1, Vec(coeff1.rows()), Matrix::zero(coeff1.rows(), nvars_), const2);
}

void IsoSystem::add_membership(const Matrix& coeff, const Vec& constant,
                               const Subspace& s) {
    // x in s  <=>  every annihilator functional of s vanishes on x
    Subspace ann = kernel(s.basis_rows());
    for (const auto& p : ann.basis()) {
        Vec row(nvars_);
        Rational k = 0;
        for (std::size_t c = 0; c < s.ambient_dim(); ++c) {
            if (p[c] == 0)
                continue;
            for (std::size_t v = 0; v < nvars_; ++v)
                row[v] += p[c] * coeff.at(c, v);
            k += p[c] * constant[c];
        }
        rows_.push_back(std::move(row));
        rhs_.push_back(-k);
    }
}

std::vector<std::vector<Matrix>> IsoSystem::invertible_solutions(
    std::size_t max_samples) const {
    Matrix a = Matrix::from_rows(rows_, nvars_);
    auto particular = solve(a, Matrix::from_columns({rhs_}, rows_.size()));
    if (!particular || !((a * *particular).col(0) == rhs_))
        return {};
    Vec p = particular->col(0);
    std::vector<Vec> homogeneous = kernel(a).basis();

    std::vector<Vec> candidates;
    candidates.push_back(p);
    for (const auto& hvec : homogeneous) {
        Vec v = p;
        for (std::size_t i = 0; i < nvars_; ++i)
            v[i] += hvec[i];
        candidates.push_back(std::move(v));
    }
    std::uint64_t state = 0x9e3779b97f4a7c15ull; // deterministic sampling
    while (candidates.size() < max_samples && !homogeneous.empty()) {
        Vec v = p;
        for (const auto& hvec : homogeneous) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            long lambda = static_cast<long>((state >> 33) % 15) - 7;
            if (lambda == 0)
                continue;
            for (std::size_t i = 0; i < nvars_; ++i)
                v[i] += Rational(lambda) * hvec[i];
        }
        candidates.push_back(std::move(v));
    }

    std::vector<std::vector<Matrix>> out;
    for (const auto& z : candidates) {
        std::vector<Matrix> mats;
        bool ok = true;
        for (std::size_t c = 0; c < src_dims_.size() && ok; ++c) {
            Matrix m(dst_dims_[c], src_dims_[c]);
            for (std::size_t s = 0; s < dst_dims_[c]; ++s)
                for (std::size_t t = 0; t < src_dims_[c]; ++t)
                    m.at(s, t) = z[offsets_[c] + s * src_dims_[c] + t];
            if (src_dims_[c] != dst_dims_[c] || !inverse(m))
                ok = false;
            mats.push_back(std::move(m));
        }
        if (ok)
            out.push_back(std::move(mats));
    }
    return out;
}

namespace {

// (dim, sorted (partner dim, relation dim) profile) per component.
std::vector<std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>>
signatures(const GluedSpace& g) {
    std::vector<std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>>
        sig(g.components.size());
    for (std::size_t c = 0; c < g.components.size(); ++c)
        sig[c].first = g.components[c];
    for (const auto& [key, gl] : g.gluings) {
        auto [i, j] = key;
        sig[i].second.push_back({g.components[j], gl.domain.dim()});
        sig[j].second.push_back({g.components[i], gl.domain.dim()});
    }
    for (auto& s : sig)
        std::sort(s.second.begin(), s.second.end());
    return sig;
}

} // namespace

std::optional<GluedMorphism> find_iso(
    const GluedSpace& g, const GluedSpace& h,
    const std::function<bool(const std::vector<std::size_t>&, IsoSystem&)>& extra,
    const std::function<bool(const GluedMorphism&)>& accept) {
    const std::size_t k = g.components.size();
    if (h.components.size() != k)
        return std::nullopt;
    auto sig_g = signatures(g), sig_h = signatures(h);

    std::vector<std::size_t> sigma(k);
    std::vector<bool> used(k, false);
    std::optional<GluedMorphism> found;

    // Entry pattern between already-placed components must match exactly.
    auto compatible = [&](std::size_t c, std::size_t t) {
        if (sig_g[c] != sig_h[t])
            return false;
        for (std::size_t c2 = 0; c2 < c; ++c2) {
            const Gluing* a = g.gluing(c2, c);
            const Gluing* b = h.gluing(sigma[c2], t);
            if ((a == nullptr) != (b == nullptr))
                return false;
            if (a && a->domain.dim() != b->domain.dim())
                return false;
        }
        return true;
    };

    std::function<bool(std::size_t)> place = [&](std::size_t c) -> bool {
        if (c == k) {
            IsoSystem sys(g, h, sigma);
            for (const auto& [key, gl] : g.gluings) {
                auto [i, j] = key;
                auto rel_h = h.relation(sigma[i], sigma[j]);
                Subspace graph = *g.relation(i, j);
                for (const auto& uv : graph.basis()) {
                    Vec u(uv.begin(), uv.begin() + static_cast<long>(g.components[i]));
                    Vec v(uv.begin() + static_cast<long>(g.components[i]), uv.end());
                    Matrix c1 = sys.coeff(i, u), c2 = sys.coeff(j, v);
                    sys.add_membership(vstack(c1, c2),
                                       Vec(c1.rows() + c2.rows()), *rel_h);
                }
            }
            if (!extra(sigma, sys))
                return false;
            for (auto& mats : sys.invertible_solutions(64)) {
                GluedMorphism m;
                m.source = g;
                m.target = h;
                for (std::size_t i = 0; i < k; ++i)
                    m.assignment.push_back({sigma[i], std::move(mats[i])});
                if (accept(m)) {
                    found = std::move(m);
                    return true;
                }
            }
            return false;
        }
        for (std::size_t t = 0; t < k; ++t) {
            if (used[t] || !compatible(c, t))
                continue;
            sigma[c] = t;
            used[t] = true;
            if (place(c + 1))
                return true;
            used[t] = false;
        }
        return false;
    };
    place(0);
    return found;
}

std::optional<GluedMorphism> glued_iso(const GluedSpace& g, const GluedSpace& h) {
    auto accept = [&](const GluedMorphism& m) {
        if (!morphism_validate(m))
            return false;
        GluedMorphism inv;
        inv.source = h;
        inv.target = g;
        inv.assignment.resize(m.assignment.size());
        for (std::size_t c = 0; c < m.assignment.size(); ++c)
            inv.assignment[m.assignment[c].target] = {c, *inverse(m.assignment[c].mat)};
        return morphism_validate(inv);
    };
    return find_iso(g, h, [](const auto&, auto&) { return true; }, accept);
}

} // namespace gluemin
