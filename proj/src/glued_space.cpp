#include "gluemin/glued_space.hpp"
#include "gluemin/iso_search.hpp"

#include <algorithm>
#include <numeric>

namespace gluemin {

namespace {

Subspace diagonal_rel(std::size_t n) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n; ++i) {
        Vec v(2 * n);
        v[i] = 1;
        v[n + i] = 1;
        gens.push_back(std::move(v));
    }
    return Subspace::span(gens, 2 * n);
}

// Selection matrix extracting coordinates [offset, offset+len) of Q^total.
Matrix selection(std::size_t offset, std::size_t len, std::size_t total) {
    Matrix m(len, total);
    for (std::size_t i = 0; i < len; ++i)
        m.at(i, offset + i) = 1;
    return m;
}

Subspace swap_rel(const Subspace& r, std::size_t a, std::size_t b) {
    std::vector<Vec> gens;
    for (const auto& v : r.basis()) {
        Vec w(a + b);
        for (std::size_t i = 0; i < b; ++i)
            w[i] = v[a + i];
        for (std::size_t i = 0; i < a; ++i)
            w[b + i] = v[i];
        gens.push_back(std::move(w));
    }
    return Subspace::span(gens, a + b);
}

// Relation composition: r in Q^{a+b}, s in Q^{b+c} -> Q^{a+c}.
Subspace compose_rel(const Subspace& r, const Subspace& s,
                     std::size_t a, std::size_t b, std::size_t c) {
    Subspace lift_r = product_subspace(r, Subspace::full(c));
    Subspace lift_s = preimage(selection(a, b + c, a + b + c), s);
    Subspace both = intersect(lift_r, lift_s);
    Matrix drop_mid = vstack(selection(0, a, a + b + c), selection(a + b, c, a + b + c));
    return image(drop_mid, both);
}

Subspace graph_subspace(const Gluing& gl, std::size_t ni, std::size_t nj) {
    std::vector<Vec> gens;
    for (const auto& u : gl.domain.basis())
        gens.push_back(concat(u, gl.phi.apply(u)));
    return Subspace::span(gens, ni + nj);
}

// Recover the canonical (domain, phi) pair of a functional relation graph.
// phi is extended by zero on the RREF complement of the domain.
Gluing gluing_from_graph(const Subspace& g, std::size_t ni, std::size_t nj) {
    if (intersect(g, product_subspace(Subspace::zero(ni), Subspace::full(nj))).dim() != 0)
        throw GluedError("SelfFolding", "relation graph is not functional");
    Subspace dom = image(selection(0, ni, ni + nj), g);
    std::vector<Vec> dom_basis = dom.basis();
    Matrix g_cols = g.basis_rows().transpose(); // (ni+nj) x rank
    Matrix g_top(ni, g.dim()), g_bot(nj, g.dim());
    for (std::size_t c = 0; c < g.dim(); ++c) {
        for (std::size_t r = 0; r < ni; ++r)
            g_top.at(r, c) = g_cols.at(r, c);
        for (std::size_t r = 0; r < nj; ++r)
            g_bot.at(r, c) = g_cols.at(ni + r, c);
    }
    std::vector<Vec> images;
    for (const auto& u : dom_basis) {
        auto alpha = solve(g_top, Matrix::from_columns({u}, ni));
        images.push_back(g_bot.apply(alpha->col(0)));
    }
    std::vector<Vec> cmpl = complement_basis(dom);
    std::vector<Vec> all_cols = dom_basis;
    all_cols.insert(all_cols.end(), cmpl.begin(), cmpl.end());
    Matrix basis_mat = Matrix::from_columns(all_cols, ni);
    Matrix value_mat(nj, ni);
    for (std::size_t c = 0; c < images.size(); ++c)
        for (std::size_t r = 0; r < nj; ++r)
            value_mat.at(r, c) = images[c][r];
    Matrix phi = value_mat * *inverse(basis_mat);
    return Gluing{dom, phi};
}

struct RelTable {
    std::size_t k;
    std::map<std::pair<std::size_t, std::size_t>, Subspace> rel; // key i<j

    std::optional<Subspace> get(std::size_t i, std::size_t j,
                                const std::vector<std::size_t>& dims) const {
        auto it = rel.find({std::min(i, j), std::max(i, j)});
        if (it == rel.end())
            return std::nullopt;
        if (i < j)
            return it->second;
        return swap_rel(it->second, dims[j], dims[i]);
    }
};

} // namespace

std::size_t GluedSpace::total_dim() const {
    return std::accumulate(components.begin(), components.end(), std::size_t(0));
}

const Gluing* GluedSpace::gluing(std::size_t i, std::size_t j) const {
    auto it = gluings.find({std::min(i, j), std::max(i, j)});
    return it == gluings.end() ? nullptr : &it->second;
}

std::optional<Subspace> GluedSpace::relation(std::size_t i, std::size_t j) const {
    auto it = gluings.find({std::min(i, j), std::max(i, j)});
    if (it == gluings.end())
        return std::nullopt;
    std::size_t lo = std::min(i, j), hi = std::max(i, j);
    Subspace g = graph_subspace(it->second, components[lo], components[hi]);
    if (i < j)
        return g;
    return swap_rel(g, components[lo], components[hi]);
}

NormalizeResult normalize_with_witness(const GluedSpace& g) {
    const std::size_t k = g.components.size();
    std::vector<std::size_t> dims = g.components;

    RelTable table{k, {}};
    for (const auto& [key, gl] : g.gluings) {
        auto [i, j] = key;
        if (i >= j || j >= k)
            throw GluedError("MalformedGluing", "bad component pair");
        if (gl.domain.ambient_dim() != dims[i] ||
            gl.phi.rows() != dims[j] || gl.phi.cols() != dims[i])
            throw GluedError("MalformedGluing", "gluing shape mismatch");
        if (intersect(kernel(gl.phi), gl.domain).dim() != 0)
            throw GluedError("NonInjectiveGluing", "phi not injective on its domain");
        table.rel.insert({key, graph_subspace(gl, dims[i], dims[j])});
    }

    // Ascending saturation: close the relation graphs under composition.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t l = 0; l < k; ++l) {
                    if (i == j || j == l || i == l)
                        continue;
                    auto rij = table.get(i, j, dims);
                    auto rjl = table.get(j, l, dims);
                    if (!rij || !rjl)
                        continue;
                    Subspace comp = compose_rel(*rij, *rjl, dims[i], dims[j], dims[l]);
                    auto key = std::make_pair(std::min(i, l), std::max(i, l));
                    Subspace comp_key = i < l ? comp : swap_rel(comp, dims[i], dims[l]);
                    auto it = table.rel.find(key);
                    if (it == table.rel.end()) {
                        table.rel.insert({key, comp_key});
                        changed = true;
                    } else {
                        Subspace merged = sum(it->second, comp_key);
                        if (!(merged == it->second)) {
                            it->second = merged;
                            changed = true;
                        }
                    }
                }
    }

    // A cycle composing to a non-identity map folds a component onto itself.
    for (const auto& [key, rel] : table.rel) {
        auto [i, j] = key;
        Subspace back = swap_rel(rel, dims[i], dims[j]);
        Subspace cyc_i = compose_rel(rel, back, dims[i], dims[j], dims[i]);
        Subspace cyc_j = compose_rel(back, rel, dims[j], dims[i], dims[j]);
        if (!diagonal_rel(dims[i]).includes(cyc_i) ||
            !diagonal_rel(dims[j]).includes(cyc_j))
            throw GluedError("SelfFolding", "gluing cycle is not the identity");
    }

    // Remove subsumed components: a full-domain gluing folds one component
    // entirely into the other (keep the lower index when both sides are full).
    std::vector<std::size_t> survivors(k);
    std::iota(survivors.begin(), survivors.end(), 0);
    std::vector<ComponentMap> proj(k);
    for (std::size_t i = 0; i < k; ++i)
        proj[i] = {i, Matrix::identity(dims[i])};
    std::vector<std::size_t> cur_dims = dims;

    for (;;) {
        std::size_t remove = cur_dims.size(), into = 0;
        Matrix fold_map;
        for (const auto& [key, rel] : table.rel) {
            auto [i, j] = key;
            Subspace dom_j = image(selection(cur_dims[i], cur_dims[j],
                                             cur_dims[i] + cur_dims[j]), rel);
            if (dom_j.is_full()) {
                remove = j;
                into = i;
                fold_map = gluing_from_graph(swap_rel(rel, cur_dims[i], cur_dims[j]),
                                             cur_dims[j], cur_dims[i]).phi;
                break;
            }
            Subspace dom_i = image(selection(0, cur_dims[i],
                                             cur_dims[i] + cur_dims[j]), rel);
            if (dom_i.is_full()) {
                remove = i;
                into = j;
                fold_map = gluing_from_graph(rel, cur_dims[i], cur_dims[j]).phi;
                break;
            }
        }
        if (remove == cur_dims.size())
            break;

        for (auto& p : proj) {
            if (p.target == remove)
                p = {into, fold_map * p.mat};
        }
        std::map<std::pair<std::size_t, std::size_t>, Subspace> next;
        auto shift = [remove](std::size_t c) { return c > remove ? c - 1 : c; };
        for (const auto& [key, rel] : table.rel) {
            auto [i, j] = key;
            if (i == remove || j == remove)
                continue;
            next.insert({{shift(i), shift(j)}, rel});
        }
        table.rel = std::move(next);
        for (auto& p : proj)
            p.target = shift(p.target);
        survivors.erase(survivors.begin() + static_cast<long>(remove));
        cur_dims.erase(cur_dims.begin() + static_cast<long>(remove));
    }

    NormalizeResult result;
    result.space.components = cur_dims;
    for (const auto& [key, rel] : table.rel)
        result.space.gluings.insert(
            {key, gluing_from_graph(rel, cur_dims[key.first], cur_dims[key.second])});
    result.projection = std::move(proj);
    result.survivors = std::move(survivors);
    return result;
}

GluedSpace normalize(const GluedSpace& g) {
    return normalize_with_witness(g).space;
}

bool point_eq(const GluedSpace& g, const Point& p, const Point& q) {
    if (p.component >= g.components.size() || q.component >= g.components.size() ||
        p.vector.size() != g.components[p.component] ||
        q.vector.size() != g.components[q.component])
        throw GluedError("MalformedPoint", "component index or vector length");
    if (p.component == q.component)
        return p.vector == q.vector;
    auto rel = g.relation(p.component, q.component);
    if (!rel)
        return false;
    return rel->contains(concat(p.vector, q.vector));
}

std::optional<Subspace> agreement_subspace(const GluedSpace& g,
                                           std::size_t ci, const Matrix& fi,
                                           std::size_t cj, const Matrix& fj) {
    if (ci >= g.components.size() || cj >= g.components.size() ||
        fi.rows() != g.components[ci] || fj.rows() != g.components[cj])
        throw GluedError("MalformedMap", "agreement_subspace shape mismatch");
    if (ci == cj)
        return kernel(hstack(fi, -fj));
    auto rel = g.relation(ci, cj);
    if (!rel)
        return std::nullopt;
    // Pairs whose images fall into the gluing relation.
    std::size_t di = fi.cols(), dj = fj.cols();
    Matrix block(fi.rows() + fj.rows(), di + dj);
    for (std::size_t r = 0; r < fi.rows(); ++r)
        for (std::size_t c = 0; c < di; ++c)
            block.at(r, c) = fi.at(r, c);
    for (std::size_t r = 0; r < fj.rows(); ++r)
        for (std::size_t c = 0; c < dj; ++c)
            block.at(fi.rows() + r, di + c) = fj.at(r, c);
    return preimage(block, *rel);
}

void morphism_check(const GluedMorphism& m) {
    if (m.assignment.size() != m.source.components.size())
        throw GluedError("MalformedMorphism", "assignment size mismatch");
    for (std::size_t i = 0; i < m.assignment.size(); ++i) {
        const auto& a = m.assignment[i];
        if (a.target >= m.target.components.size() ||
            a.mat.rows() != m.target.components[a.target] ||
            a.mat.cols() != m.source.components[i])
            throw GluedError("MalformedMorphism", "component map shape mismatch");
    }
    for (const auto& [key, gl] : m.source.gluings) {
        auto [i, j] = key;
        Subspace graph = graph_subspace(gl, m.source.components[i], m.source.components[j]);
        auto agree = agreement_subspace(m.target,
                                        m.assignment[i].target, m.assignment[i].mat,
                                        m.assignment[j].target, m.assignment[j].mat);
        if (!agree || !agree->includes(graph))
            throw GluedError("IncompatibleGluing",
                             "assignment disagrees on a glued pair");
    }
}

bool morphism_validate(const GluedMorphism& m) {
    try {
        morphism_check(m);
        return true;
    } catch (const GluedError&) {
        return false;
    }
}

GluedMorphism morphism_compose(const GluedMorphism& m2, const GluedMorphism& m1) {
    if (!(m1.target == m2.source))
        throw GluedError("CompositionMismatch", "target(m1) != source(m2)");
    GluedMorphism out;
    out.source = m1.source;
    out.target = m2.target;
    for (const auto& a : m1.assignment) {
        const auto& b = m2.assignment[a.target];
        out.assignment.push_back({b.target, b.mat * a.mat});
    }
    return out;
}

GluedMorphism morphism_identity(const GluedSpace& g) {
    GluedMorphism m;
    m.source = g;
    m.target = g;
    for (std::size_t i = 0; i < g.components.size(); ++i)
        m.assignment.push_back({i, Matrix::identity(g.components[i])});
    return m;
}

bool morphism_equal(const GluedMorphism& m, const GluedMorphism& n) {
    if (!(m.source == n.source) || !(m.target == n.target))
        return false;
    for (std::size_t i = 0; i < m.assignment.size(); ++i) {
        auto agree = agreement_subspace(m.target,
                                        m.assignment[i].target, m.assignment[i].mat,
                                        n.assignment[i].target, n.assignment[i].mat);
        if (!agree || !agree->includes(diagonal_rel(m.source.components[i])))
            return false;
    }
    return true;
}

bool is_mono(const GluedMorphism& m) {
    const auto& src = m.source;
    for (std::size_t i = 0; i < src.components.size(); ++i)
        for (std::size_t j = i; j < src.components.size(); ++j) {
            auto target_agree = agreement_subspace(m.target,
                                                   m.assignment[i].target, m.assignment[i].mat,
                                                   m.assignment[j].target, m.assignment[j].mat);
            if (!target_agree)
                continue;
            std::optional<Subspace> source_agree =
                i == j ? std::optional<Subspace>(diagonal_rel(src.components[i]))
                       : src.relation(i, j);
            // A non-bottom target agreement always holds at (0, 0); with the
            // sources unrelated this already collides two distinct points.
            if (!source_agree)
                return false;
            if (!source_agree->includes(*target_agree))
                return false;
        }
    return true;
}

bool is_epi(const GluedMorphism& m) {
    for (std::size_t e = 0; e < m.target.components.size(); ++e) {
        bool covered = false;
        for (std::size_t d = 0; d < m.assignment.size() && !covered; ++d)
            if (m.assignment[d].target == e &&
                rank(m.assignment[d].mat) == m.target.components[e])
                covered = true;
        if (!covered)
            return false;
    }
    return true;
}

SubobjectBuild build_glued_sub(const GluedSpace& x,
                               const std::vector<std::pair<std::size_t, Matrix>>& items) {
    GluedSpace raw;
    for (const auto& [c, b] : items)
        raw.components.push_back(b.cols());
    for (std::size_t i = 0; i < items.size(); ++i)
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            auto agree = agreement_subspace(x, items[i].first, items[i].second,
                                            items[j].first, items[j].second);
            if (!agree)
                continue;
            raw.gluings.insert({{i, j}, gluing_from_graph(*agree, raw.components[i],
                                                          raw.components[j])});
        }
    NormalizeResult norm = normalize_with_witness(raw);

    SubobjectBuild out;
    out.mono.source = norm.space;
    out.mono.target = x;
    for (std::size_t k = 0; k < norm.space.components.size(); ++k)
        out.mono.assignment.push_back(
            {items[norm.survivors[k]].first, items[norm.survivors[k]].second});
    out.fold = norm.projection;
    return out;
}

Factorization factor(const GluedMorphism& m) {
    morphism_check(m);
    std::vector<std::pair<std::size_t, Matrix>> items;
    std::vector<Matrix> coords; // source coordinates in the image basis
    for (std::size_t i = 0; i < m.assignment.size(); ++i) {
        const auto& a = m.assignment[i];
        Subspace img = image(a.mat, Subspace::full(a.mat.cols()));
        Matrix incl = img.inclusion();
        items.push_back({a.target, incl});
        coords.push_back(*solve(incl, a.mat));
    }
    SubobjectBuild sub = build_glued_sub(m.target, items);
    Factorization f;
    f.image = sub.mono.source;
    f.mono = sub.mono;
    f.epi.source = m.source;
    f.epi.target = f.image;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& fold = sub.fold[i];
        f.epi.assignment.push_back({fold.target, fold.mat * coords[i]});
    }
    return f;
}

GluedMorphism subobject_from_families(const GluedSpace& x,
                                      const std::vector<SubspaceFamily>& families) {
    if (families.size() != x.components.size())
        throw GluedError("MalformedFamilies", "one family per component expected");
    std::vector<std::pair<std::size_t, Matrix>> items;
    for (std::size_t c = 0; c < families.size(); ++c) {
        if (families[c].ambient_dim() != x.components[c])
            throw GluedError("MalformedFamilies", "family ambient mismatch");
        for (const auto& s : families[c].members())
            items.push_back({c, s.inclusion()});
    }
    return build_glued_sub(x, items).mono;
}

std::vector<SubspaceFamily> image_families(const GluedMorphism& mono) {
    const GluedSpace& x = mono.target;
    std::vector<std::vector<Subspace>> members(x.components.size());
    for (const auto& a : mono.assignment) {
        Subspace img = image(a.mat, Subspace::full(a.mat.cols()));
        members[a.target].push_back(img);
        // points equal to image points through gluings of the codomain
        for (std::size_t e = 0; e < x.components.size(); ++e) {
            if (e == a.target)
                continue;
            auto rel = x.relation(a.target, e);
            if (!rel)
                continue;
            Subspace restricted =
                intersect(*rel, product_subspace(img, Subspace::full(x.components[e])));
            Subspace transported =
                image(selection(x.components[a.target], x.components[e],
                                x.components[a.target] + x.components[e]),
                      restricted);
            members[e].push_back(transported);
        }
    }
    std::vector<SubspaceFamily> fams;
    for (std::size_t c = 0; c < x.components.size(); ++c)
        fams.push_back(SubspaceFamily::antichain_reduce(std::move(members[c]),
                                                        x.components[c]));
    return fams;
}

GluedMorphism subobject_intersect(const GluedMorphism& a, const GluedMorphism& b) {
    if (!(a.target == b.target))
        throw GluedError("CompositionMismatch", "subobjects of different objects");
    if (!is_mono(a) || !is_mono(b))
        throw GluedError("NotMono", "subobject_intersect expects monos");
    auto fa = image_families(a);
    auto fb = image_families(b);
    std::vector<SubspaceFamily> fams;
    for (std::size_t c = 0; c < fa.size(); ++c) {
        std::vector<Subspace> members;
        for (const auto& s : fa[c].members())
            for (const auto& t : fb[c].members())
                members.push_back(intersect(s, t));
        fams.push_back(SubspaceFamily::antichain_reduce(std::move(members),
                                                        a.target.components[c]));
    }
    return subobject_from_families(a.target, fams);
}

GluedMorphism subobject_preimage(const GluedMorphism& s, const GluedMorphism& m) {
    if (!(s.target == m.target))
        throw GluedError("CompositionMismatch", "preimage: codomain mismatch");
    if (!is_mono(s))
        throw GluedError("NotMono", "subobject_preimage expects a mono");
    auto fs = image_families(s);
    std::vector<SubspaceFamily> fams;
    for (std::size_t i = 0; i < m.source.components.size(); ++i) {
        const auto& a = m.assignment[i];
        std::vector<Subspace> members;
        for (const auto& t : fs[a.target].members())
            members.push_back(preimage(a.mat, t));
        fams.push_back(SubspaceFamily::antichain_reduce(std::move(members),
                                                        m.source.components[i]));
    }
    return subobject_from_families(m.source, fams);
}

GluedSpace embed_vec(std::size_t dim) {
    GluedSpace g;
    g.components.push_back(dim);
    return g;
}

GluedSpace embed_set(std::size_t k) {
    GluedSpace g;
    g.components.assign(k, 0);
    return g;
}

} // namespace gluemin
