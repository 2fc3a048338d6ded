#include "gluemin/glued_automaton.hpp"
#include "gluemin/iso_search.hpp"

#include <deque>
#include <set>

namespace gluemin {

namespace {

Matrix blockdiag(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            m.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            m.at(a.rows() + r, a.cols() + c) = b.at(r, c);
    return m;
}

Subspace swap_pair(const Subspace& r, std::size_t a, std::size_t b) {
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

} // namespace

const GluedMorphism& GluedAutomaton::delta(const std::string& symbol) const {
    auto it = transitions.find(symbol);
    if (it == transitions.end())
        throw GluedError("UnknownSymbol", symbol);
    return it->second;
}

void auto_check(const GluedAutomaton& a) {
    if (a.alphabet.empty())
        throw GluedError("MalformedAutomaton", "empty alphabet");
    if (a.profile == Profile::set && a.set_size == 0)
        throw GluedError("MalformedAutomaton", "set profile needs set_size >= 1");
    if (a.initial.component >= a.states.components.size() ||
        a.initial.vector.size() != a.states.components[a.initial.component])
        throw GluedError("MalformedAutomaton", "initial point shape");
    if (!(normalize(a.states) == a.states))
        throw GluedError("MalformedAutomaton", "state space not in normal form");
    if (!(a.final_map.source == a.states) || !(a.final_map.target == a.output_space()))
        throw GluedError("MalformedAutomaton", "final morphism endpoints");
    morphism_check(a.final_map);
    for (const auto& sym : a.alphabet) {
        const GluedMorphism& d = a.delta(sym);
        if (!(d.source == a.states) || !(d.target == a.states))
            throw GluedError("MalformedAutomaton", "transition endpoints for " + sym);
        morphism_check(d);
    }
}

bool auto_validate(const GluedAutomaton& a) {
    try {
        auto_check(a);
        return true;
    } catch (const GluedError&) {
        return false;
    }
}

Point auto_eval(const GluedAutomaton& a, const std::vector<std::string>& word) {
    Point cur = a.initial;
    for (const auto& sym : word) {
        const auto& cm = a.delta(sym).assignment[cur.component];
        cur = {cm.target, cm.mat.apply(cur.vector)};
    }
    const auto& fin = a.final_map.assignment[cur.component];
    return {fin.target, fin.mat.apply(cur.vector)};
}

Rational auto_eval_weighted(const GluedAutomaton& a,
                            const std::vector<std::string>& word) {
    if (a.profile != Profile::weighted)
        throw GluedError("ProfileMismatch", "weighted evaluation of a set automaton");
    return auto_eval(a, word).vector[0];
}

WFA linearize(const GluedAutomaton& a) {
    if (a.profile != Profile::weighted)
        throw GluedError("ProfileMismatch", "linearize needs the weighted profile");
    const auto& dims = a.states.components;
    std::vector<std::size_t> offset(dims.size() + 1, 0);
    for (std::size_t i = 0; i < dims.size(); ++i)
        offset[i + 1] = offset[i] + dims[i];
    std::size_t n = offset.back();

    WFA w;
    w.alphabet = a.alphabet;
    w.dim = n;
    w.initial.assign(n, 0);
    for (std::size_t c = 0; c < a.initial.vector.size(); ++c)
        w.initial[offset[a.initial.component] + c] = a.initial.vector[c];
    w.final_row.assign(n, 0);
    for (std::size_t i = 0; i < dims.size(); ++i) {
        const auto& fin = a.final_map.assignment[i];
        for (std::size_t c = 0; c < dims[i]; ++c)
            w.final_row[offset[i] + c] = fin.mat.at(0, c);
    }
    for (const auto& sym : a.alphabet) {
        Matrix m(n, n);
        const auto& d = a.delta(sym);
        for (std::size_t i = 0; i < dims.size(); ++i) {
            const auto& cm = d.assignment[i];
            for (std::size_t r = 0; r < cm.mat.rows(); ++r)
                for (std::size_t c = 0; c < cm.mat.cols(); ++c)
                    m.at(offset[cm.target] + r, offset[i] + c) = cm.mat.at(r, c);
        }
        w.transitions.emplace(sym, std::move(m));
    }
    return w;
}

namespace {

// Finds a component of the subobject containing the points P(x) of ambient
// component c, together with the coordinate change: mono_k . M == P pointwise.
std::optional<std::pair<std::size_t, Matrix>> locate_in_sub(
    const GluedMorphism& mono, std::size_t c, const Matrix& p) {
    const GluedSpace& x = mono.target;
    for (std::size_t k = 0; k < mono.assignment.size(); ++k) {
        std::size_t e = mono.assignment[k].target;
        const Matrix& bk = mono.assignment[k].mat;
        if (e == c) {
            auto m = solve(bk, p);
            if (m && bk * *m == p)
                return std::make_pair(k, *m);
        } else if (auto rel = x.relation(c, e)) {
            // transport P through the gluing when its image lies in the domain
            Matrix rel_cols = rel->basis_rows().transpose();
            Matrix rel_top(x.components[c], rel->dim()), rel_bot(x.components[e], rel->dim());
            for (std::size_t cc = 0; cc < rel->dim(); ++cc) {
                for (std::size_t r = 0; r < x.components[c]; ++r)
                    rel_top.at(r, cc) = rel_cols.at(r, cc);
                for (std::size_t r = 0; r < x.components[e]; ++r)
                    rel_bot.at(r, cc) = rel_cols.at(x.components[c] + r, cc);
            }
            auto alpha = solve(rel_top, p);
            if (!alpha || !(rel_top * *alpha == p))
                continue;
            Matrix q = rel_bot * *alpha; // the transported P
            auto m = solve(bk, q);
            if (m && bk * *m == q)
                return std::make_pair(k, *m);
        }
    }
    return std::nullopt;
}

} // namespace

ReachResult reach(const GluedAutomaton& a, std::size_t budget) {
    if (budget < 1)
        throw GluedError("BadBudget", "reach budget must be >= 1");
    auto_check(a);
    const auto& dims = a.states.components;
    const std::size_t k = dims.size();
    std::vector<std::vector<Subspace>> fams(k);
    std::vector<bool> collapsed(k, false);
    bool exact = true;

    auto covered = [&](std::size_t c, const Subspace& s) {
        for (const auto& m : fams[c])
            if (m.includes(s))
                return true;
        for (std::size_t c2 = 0; c2 < k; ++c2) {
            if (c2 == c)
                continue;
            auto rel = a.states.relation(c2, c);
            if (!rel)
                continue;
            for (const auto& m : fams[c2]) {
                // points of c glued to a recorded point of m
                Subspace restricted =
                    intersect(*rel, product_subspace(m, Subspace::full(dims[c])));
                Subspace transported =
                    image(hstack(Matrix::zero(dims[c], dims[c2]), Matrix::identity(dims[c])),
                          restricted);
                if (transported.includes(s))
                    return true;
            }
        }
        return false;
    };

    auto insert = [&](std::size_t c, const Subspace& s) {
        if (collapsed[c]) {
            Subspace merged = sum(fams[c][0], s);
            if (merged == fams[c][0])
                return false;
            fams[c][0] = merged;
            return true;
        }
        if (covered(c, s))
            return false;
        std::vector<Subspace> members = fams[c];
        members.push_back(s);
        SubspaceFamily reduced = SubspaceFamily::antichain_reduce(members, dims[c]);
        if (reduced.size() > budget) {
            fams[c] = widen(reduced).members();
            collapsed[c] = true;
            exact = false;
        } else {
            fams[c] = reduced.members();
        }
        return true;
    };

    insert(a.initial.component,
           Subspace::span({a.initial.vector}, dims[a.initial.component]));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t c = 0; c < k; ++c) {
            std::vector<Subspace> snapshot = fams[c];
            for (const auto& s : snapshot)
                for (const auto& sym : a.alphabet) {
                    const auto& cm = a.delta(sym).assignment[c];
                    changed |= insert(cm.target, image(cm.mat, s));
                }
        }
    }

    std::vector<SubspaceFamily> families;
    for (std::size_t c = 0; c < k; ++c)
        families.push_back(SubspaceFamily::antichain_reduce(fams[c], dims[c]));

    std::vector<std::pair<std::size_t, Matrix>> items;
    for (std::size_t c = 0; c < k; ++c)
        for (const auto& s : families[c].members())
            items.push_back({c, s.inclusion()});
    SubobjectBuild sub = build_glued_sub(a.states, items);

    ReachResult out;
    out.exact = exact;
    out.families = families;
    out.embedding = sub.mono;
    GluedAutomaton& r = out.automaton;
    r.alphabet = a.alphabet;
    r.profile = a.profile;
    r.set_size = a.set_size;
    r.states = sub.mono.source;

    auto init_loc = locate_in_sub(sub.mono, a.initial.component,
                                  Matrix::from_columns({a.initial.vector},
                                                       dims[a.initial.component]));
    if (!init_loc)
        throw GluedError("Internal", "reach lost the initial point");
    r.initial = {init_loc->first, init_loc->second.col(0)};

    r.final_map = morphism_compose(a.final_map, sub.mono);
    for (const auto& sym : a.alphabet) {
        const GluedMorphism& d = a.delta(sym);
        GluedMorphism rd;
        rd.source = r.states;
        rd.target = r.states;
        for (std::size_t kk = 0; kk < r.states.components.size(); ++kk) {
            std::size_t c = sub.mono.assignment[kk].target;
            const Matrix& bk = sub.mono.assignment[kk].mat;
            const auto& cm = d.assignment[c];
            auto loc = locate_in_sub(sub.mono, cm.target, cm.mat * bk);
            if (!loc)
                throw GluedError("Internal", "reach image not covered");
            rd.assignment.push_back({loc->first, loc->second});
        }
        r.transitions.emplace(sym, std::move(rd));
    }
    return out;
}

ObsResult obs(const GluedAutomaton& a) {
    auto_check(a);
    const auto& dims = a.states.components;
    const std::size_t k = dims.size();
    GluedSpace out_space = a.output_space();

    // greatest fixpoint of the pairwise observational agreement relations
    std::map<std::pair<std::size_t, std::size_t>, std::optional<Subspace>> rel;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j)
            rel[{i, j}] = agreement_subspace(out_space,
                                             a.final_map.assignment[i].target,
                                             a.final_map.assignment[i].mat,
                                             a.final_map.assignment[j].target,
                                             a.final_map.assignment[j].mat);
    auto get = [&](std::size_t i, std::size_t j) -> std::optional<Subspace> {
        auto& r = rel[{std::min(i, j), std::max(i, j)}];
        if (!r || i <= j)
            return r;
        return swap_pair(*r, dims[j], dims[i]);
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [key, r] : rel) {
            if (!r)
                continue;
            auto [i, j] = key;
            for (const auto& sym : a.alphabet) {
                const auto& ci = a.delta(sym).assignment[i];
                const auto& cj = a.delta(sym).assignment[j];
                auto target_rel = get(ci.target, cj.target);
                if (!target_rel) {
                    r = std::nullopt;
                    changed = true;
                    break;
                }
                Subspace pre = preimage(blockdiag(ci.mat, cj.mat), *target_rel);
                Subspace refined = intersect(*r, pre);
                if (!(refined == *r)) {
                    r = refined;
                    changed = true;
                }
            }
        }
    }

    // null spaces and quotient coordinates per component
    std::vector<Subspace> null_spaces;
    std::vector<Matrix> q(k), sec(k);
    std::vector<std::size_t> qdims(k);
    for (std::size_t i = 0; i < k; ++i) {
        Matrix embed0 = vstack(Matrix::identity(dims[i]), Matrix::zero(dims[i], dims[i]));
        Subspace ni = preimage(embed0, *rel[{i, i}]);
        null_spaces.push_back(ni);
        std::vector<Vec> cols = complement_basis(ni);
        qdims[i] = cols.size();
        sec[i] = Matrix::from_columns(cols, dims[i]);
        std::vector<Vec> all = cols;
        for (const auto& b : ni.basis())
            all.push_back(b);
        Matrix full_inv = *inverse(Matrix::from_columns(all, dims[i]));
        Matrix qi(qdims[i], dims[i]);
        for (std::size_t r = 0; r < qdims[i]; ++r)
            for (std::size_t c = 0; c < dims[i]; ++c)
                qi.at(r, c) = full_inv.at(r, c);
        q[i] = qi;
    }

    GluedSpace raw;
    raw.components = qdims;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const auto& r = rel[{i, j}];
            if (!r)
                continue;
            Subspace graph = image(blockdiag(q[i], q[j]), *r);
            // canonical (domain, phi) form of the quotient relation
            Matrix cols = graph.basis_rows().transpose();
            Matrix top(qdims[i], graph.dim()), bot(qdims[j], graph.dim());
            for (std::size_t cc = 0; cc < graph.dim(); ++cc) {
                for (std::size_t rr = 0; rr < qdims[i]; ++rr)
                    top.at(rr, cc) = cols.at(rr, cc);
                for (std::size_t rr = 0; rr < qdims[j]; ++rr)
                    bot.at(rr, cc) = cols.at(qdims[i] + rr, cc);
            }
            Subspace dom = image(top, Subspace::full(graph.dim()));
            std::vector<Vec> dom_basis = dom.basis();
            std::vector<Vec> images;
            for (const auto& u : dom_basis) {
                auto alpha = solve(top, Matrix::from_columns({u}, qdims[i]));
                images.push_back(bot.apply(alpha->col(0)));
            }
            std::vector<Vec> cmpl = complement_basis(dom);
            std::vector<Vec> all_cols = dom_basis;
            all_cols.insert(all_cols.end(), cmpl.begin(), cmpl.end());
            Matrix value(qdims[j], qdims[i]);
            for (std::size_t cc = 0; cc < images.size(); ++cc)
                for (std::size_t rr = 0; rr < qdims[j]; ++rr)
                    value.at(rr, cc) = images[cc][rr];
            Matrix phi = value * *inverse(Matrix::from_columns(all_cols, qdims[i]));
            raw.gluings.insert({{i, j}, Gluing{dom, phi}});
        }

    NormalizeResult norm = normalize_with_witness(raw);

    ObsResult out;
    GluedAutomaton& o = out.automaton;
    o.alphabet = a.alphabet;
    o.profile = a.profile;
    o.set_size = a.set_size;
    o.states = norm.space;

    out.projection.source = a.states;
    out.projection.target = o.states;
    for (std::size_t i = 0; i < k; ++i)
        out.projection.assignment.push_back(
            {norm.projection[i].target, norm.projection[i].mat * q[i]});

    o.initial = {out.projection.assignment[a.initial.component].target,
                 out.projection.assignment[a.initial.component].mat.apply(a.initial.vector)};

    o.final_map.source = o.states;
    o.final_map.target = out_space;
    o.final_map.assignment.resize(o.states.components.size());
    for (const auto& sym : a.alphabet) {
        GluedMorphism od;
        od.source = o.states;
        od.target = o.states;
        od.assignment.resize(o.states.components.size());
        o.transitions.emplace(sym, std::move(od));
    }
    for (std::size_t kk = 0; kk < o.states.components.size(); ++kk) {
        std::size_t i = norm.survivors[kk];
        o.final_map.assignment[kk] = {a.final_map.assignment[i].target,
                                      a.final_map.assignment[i].mat * sec[i]};
        for (const auto& sym : a.alphabet) {
            const auto& cm = a.delta(sym).assignment[i];
            const auto& p = out.projection.assignment[cm.target];
            o.transitions.at(sym).assignment[kk] = {p.target, p.mat * cm.mat * sec[i]};
        }
    }
    return out;
}

MinimizeResult minimize(const GluedAutomaton& a, std::size_t budget) {
    ReachResult r = reach(a, budget);
    ObsResult o = obs(r.automaton);
    return {o.automaton, r.exact};
}

namespace {

Point canonical_point(const GluedSpace& g, const Point& p) {
    for (std::size_t c = 0; c < p.component; ++c) {
        auto rel = g.relation(p.component, c);
        if (!rel)
            continue;
        // transport p into component c if the gluing covers it
        Matrix cols = rel->basis_rows().transpose();
        Matrix top(g.components[p.component], rel->dim());
        Matrix bot(g.components[c], rel->dim());
        for (std::size_t cc = 0; cc < rel->dim(); ++cc) {
            for (std::size_t rr = 0; rr < g.components[p.component]; ++rr)
                top.at(rr, cc) = cols.at(rr, cc);
            for (std::size_t rr = 0; rr < g.components[c]; ++rr)
                bot.at(rr, cc) = cols.at(g.components[p.component] + rr, cc);
        }
        auto alpha = solve(top, Matrix::from_columns({p.vector}, p.vector.size()));
        if (alpha && top * *alpha == Matrix::from_columns({p.vector}, p.vector.size()))
            return {c, bot.apply(alpha->col(0))};
    }
    return p;
}

} // namespace

std::optional<GluedMorphism> auto_iso(const GluedAutomaton& a, const GluedAutomaton& b) {
    if (a.alphabet != b.alphabet || a.profile != b.profile || a.set_size != b.set_size)
        throw GluedError("ProfileMismatch", "auto_iso inputs");
    auto_check(a);
    auto_check(b);

    auto extra = [&](const std::vector<std::size_t>& sigma, IsoSystem& sys) {
        const GluedSpace& sb = b.states;
        // initial point correspondence
        {
            std::size_t ca = sigma[a.initial.component];
            const Point& pb = b.initial;
            Matrix e = sys.coeff(a.initial.component, a.initial.vector);
            if (ca == pb.component) {
                sys.add_equal(e, pb.vector);
            } else if (auto r = sb.relation(ca, pb.component)) {
                Matrix zero_lower = Matrix::zero(sb.components[pb.component], sys.nvars());
                sys.add_membership(vstack(e, zero_lower),
                                   concat(Vec(e.rows()), pb.vector), *r);
            } else {
                return false;
            }
        }
        // transition and final commutation, per component and letter
        for (std::size_t i = 0; i < a.states.components.size(); ++i) {
            for (const auto& sym : a.alphabet) {
                const auto& ca = a.delta(sym).assignment[i];
                const auto& cb = b.delta(sym).assignment[sigma[i]];
                std::size_t lhs_comp = sigma[ca.target];
                std::size_t rhs_comp = cb.target;
                for (std::size_t c = 0; c < a.states.components[i]; ++c) {
                    Vec e_c(a.states.components[i]);
                    e_c[c] = 1;
                    Matrix lhs = sys.coeff(ca.target, ca.mat.col(c));
                    Matrix rhs = sys.coeff(i, cb.mat, e_c);
                    if (lhs_comp == rhs_comp) {
                        sys.add_equal(lhs, Vec(lhs.rows()), rhs, Vec(rhs.rows()));
                    } else if (auto r = sb.relation(lhs_comp, rhs_comp)) {
                        sys.add_membership(vstack(lhs, rhs),
                                           Vec(lhs.rows() + rhs.rows()), *r);
                    } else {
                        return false;
                    }
                }
            }
            const auto& fa = a.final_map.assignment[i];
            const auto& fb = b.final_map.assignment[sigma[i]];
            if (fa.target != fb.target)
                return false;
            for (std::size_t c = 0; c < a.states.components[i]; ++c) {
                Vec e_c(a.states.components[i]);
                e_c[c] = 1;
                Matrix lhs = sys.coeff(i, fb.mat, e_c);
                sys.add_equal(lhs, fa.mat.col(c));
            }
        }
        return true;
    };

    auto accept = [&](const GluedMorphism& h) {
        if (!morphism_validate(h))
            return false;
        GluedMorphism inv;
        inv.source = b.states;
        inv.target = a.states;
        inv.assignment.resize(h.assignment.size());
        for (std::size_t c = 0; c < h.assignment.size(); ++c) {
            auto m = inverse(h.assignment[c].mat);
            if (!m)
                return false;
            inv.assignment[h.assignment[c].target] = {c, *m};
        }
        if (!morphism_validate(inv))
            return false;
        // semantic commutation checks
        if (!point_eq(b.states,
                      {h.assignment[a.initial.component].target,
                       h.assignment[a.initial.component].mat.apply(a.initial.vector)},
                      b.initial))
            return false;
        if (!morphism_equal(morphism_compose(b.final_map, h), a.final_map))
            return false;
        for (const auto& sym : a.alphabet)
            if (!morphism_equal(morphism_compose(b.delta(sym), h),
                                morphism_compose(h, a.delta(sym))))
                return false;
        return true;
    };

    return find_iso(a.states, b.states, extra, accept);
}

bool auto_equiv(const GluedAutomaton& a, const GluedAutomaton& b) {
    if (a.alphabet != b.alphabet || a.profile != b.profile || a.set_size != b.set_size)
        throw GluedError("ProfileMismatch", "auto_equiv inputs");
    if (a.profile == Profile::weighted)
        return wfa_equiv(linearize(a), linearize(b));

    // set profile: synchronized exploration of reachable configuration pairs
    auto_check(a);
    auto_check(b);
    using Key = std::pair<std::pair<std::size_t, Vec>, std::pair<std::size_t, Vec>>;
    auto key_of = [&](const Point& pa, const Point& pb) -> Key {
        Point ca = canonical_point(a.states, pa);
        Point cb = canonical_point(b.states, pb);
        return {{ca.component, ca.vector}, {cb.component, cb.vector}};
    };
    std::set<Key> seen;
    std::deque<std::pair<Point, Point>> queue;
    queue.push_back({a.initial, b.initial});
    seen.insert(key_of(a.initial, b.initial));
    std::size_t steps = 0;
    while (!queue.empty()) {
        if (++steps > 100000)
            throw GluedError("Diverged", "set-profile equivalence exploration too large");
        auto [pa, pb] = queue.front();
        queue.pop_front();
        const auto& fa = a.final_map.assignment[pa.component];
        const auto& fb = b.final_map.assignment[pb.component];
        if (fa.target != fb.target)
            return false;
        for (const auto& sym : a.alphabet) {
            const auto& ca = a.delta(sym).assignment[pa.component];
            const auto& cb = b.delta(sym).assignment[pb.component];
            Point na{ca.target, ca.mat.apply(pa.vector)};
            Point nb{cb.target, cb.mat.apply(pb.vector)};
            if (seen.insert(key_of(na, nb)).second)
                queue.push_back({na, nb});
        }
    }
    return true;
}

GluedAutomaton import_dfa(std::size_t states, std::size_t init,
                          const std::vector<std::string>& alphabet,
                          const std::map<std::string, std::vector<std::size_t>>& table,
                          const std::vector<bool>& accepting) {
    if (init >= states || accepting.size() != states)
        throw GluedError("MalformedTable", "dfa shape");
    GluedAutomaton a;
    a.alphabet = alphabet;
    a.profile = Profile::set;
    a.set_size = 2;
    a.states = embed_set(states);
    a.initial = {init, {}};
    a.final_map.source = a.states;
    a.final_map.target = a.output_space();
    for (std::size_t s = 0; s < states; ++s)
        a.final_map.assignment.push_back({accepting[s] ? std::size_t(1) : std::size_t(0),
                                          Matrix(0, 0)});
    for (const auto& sym : alphabet) {
        auto it = table.find(sym);
        if (it == table.end() || it->second.size() != states)
            throw GluedError("MalformedTable", "dfa transitions for " + sym);
        GluedMorphism d;
        d.source = a.states;
        d.target = a.states;
        for (std::size_t s = 0; s < states; ++s) {
            if (it->second[s] >= states)
                throw GluedError("MalformedTable", "dfa target out of range");
            d.assignment.push_back({it->second[s], Matrix(0, 0)});
        }
        a.transitions.emplace(sym, std::move(d));
    }
    return a;
}

GluedAutomaton import_duvs(const DuvsSpec& spec) {
    GluedAutomaton a;
    a.alphabet = spec.alphabet;
    a.profile = Profile::weighted;
    for (const auto& c : spec.components)
        a.states.components.push_back(c.dim);
    a.initial = spec.initial;
    a.final_map.source = a.states;
    a.final_map.target = a.output_space();
    for (const auto& c : spec.components) {
        if (c.final_row.size() != c.dim)
            throw GluedError("MalformedTable", "duvs final row length");
        a.final_map.assignment.push_back(
            {0, Matrix::from_rows({c.final_row}, c.dim)});
    }
    for (const auto& sym : spec.alphabet) {
        auto it = spec.transitions.find(sym);
        if (it == spec.transitions.end() || it->second.size() != spec.components.size())
            throw GluedError("MalformedTable", "duvs transitions for " + sym);
        GluedMorphism d;
        d.source = a.states;
        d.target = a.states;
        d.assignment = it->second;
        a.transitions.emplace(sym, std::move(d));
    }
    auto_check(a);
    return a;
}

std::vector<std::size_t> moore_refine(const GluedAutomaton& a) {
    if (a.profile != Profile::set)
        throw GluedError("ProfileMismatch", "moore_refine needs the set profile");
    for (auto d : a.states.components)
        if (d != 0)
            throw GluedError("ProfileMismatch", "moore_refine needs 0-dimensional states");
    std::size_t n = a.states.components.size();
    std::vector<std::size_t> block(n);
    for (std::size_t s = 0; s < n; ++s)
        block[s] = a.final_map.assignment[s].target;
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> index;
        std::vector<std::size_t> next(n);
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<std::size_t> sig{block[s]};
            for (const auto& sym : a.alphabet)
                sig.push_back(block[a.delta(sym).assignment[s].target]);
            auto [it, fresh] = index.insert({sig, index.size()});
            next[s] = it->second;
        }
        if (next == block)
            return block;
        block = next;
    }
}

} // namespace gluemin
