#include "gluemin/wfa.hpp"

#include <deque>
#include <stdexcept>

namespace gluemin {

const Matrix& WFA::delta(const std::string& symbol) const {
    auto it = transitions.find(symbol);
    if (it == transitions.end())
        throw std::invalid_argument("unknown symbol: " + symbol);
    return it->second;
}

void WFA::validate() const {
    if (alphabet.empty())
        throw std::invalid_argument("WFA: empty alphabet");
    if (initial.size() != dim || final_row.size() != dim)
        throw std::invalid_argument("WFA: initial/final length != dim");
    for (const auto& s : alphabet) {
        const Matrix& m = delta(s);
        if (m.rows() != dim || m.cols() != dim)
            throw std::invalid_argument("WFA: transition not dim x dim for " + s);
    }
}

Rational wfa_eval(const WFA& a, const std::vector<std::string>& word) {
    Vec state = a.initial;
    for (const auto& sym : word)
        state = a.delta(sym).apply(state);
    Rational out = 0;
    for (std::size_t i = 0; i < a.dim; ++i)
        out += a.final_row[i] * state[i];
    return out;
}

namespace {

// Worklist closure of seed vectors under the given maps; returns the raw
// inserted vectors (alphabet order, FIFO), so bases are reproducible.
std::vector<Vec> reachable_basis(const std::vector<Vec>& seeds,
                                 const std::vector<std::string>& alphabet,
                                 const std::map<std::string, Matrix>& maps,
                                 bool right_multiply) {
    std::size_t n = seeds.empty() ? 0 : seeds.front().size();
    Subspace span = Subspace::zero(n);
    std::vector<Vec> basis;
    std::deque<Vec> queue;
    auto insert = [&](const Vec& v) {
        if (span.contains(v))
            return;
        std::vector<Vec> gen = span.basis();
        gen.push_back(v);
        span = Subspace::span(gen, n);
        basis.push_back(v);
        queue.push_back(v);
    };
    for (const auto& s : seeds)
        insert(s);
    while (!queue.empty()) {
        Vec v = queue.front();
        queue.pop_front();
        for (const auto& sym : alphabet) {
            const Matrix& m = maps.at(sym);
            insert(right_multiply ? m.transpose().apply(v) : m.apply(v));
        }
    }
    return basis;
}

} // namespace

WFA forward_reduce(const WFA& a) {
    a.validate();
    std::vector<Vec> basis = reachable_basis({a.initial}, a.alphabet, a.transitions, false);
    if (is_zero_vec(a.initial))
        basis.clear();
    std::size_t k = basis.size();
    Matrix r = Matrix::from_columns(basis, a.dim);
    WFA out;
    out.alphabet = a.alphabet;
    out.dim = k;
    for (const auto& sym : a.alphabet) {
        auto sol = solve(r, a.delta(sym) * r);
        out.transitions.emplace(sym, *sol); // closure guarantees consistency
    }
    auto i = solve(r, Matrix::from_columns({a.initial}, a.dim));
    out.initial = i->col(0);
    Matrix f = Matrix::from_rows({a.final_row}, a.dim) * r;
    out.final_row = f.row(0);
    return out;
}

WFA backward_reduce(const WFA& a) {
    a.validate();
    std::vector<Vec> rows = reachable_basis({a.final_row}, a.alphabet, a.transitions, true);
    if (is_zero_vec(a.final_row))
        rows.clear();
    std::size_t k = rows.size();
    Matrix s = Matrix::from_rows(rows, a.dim);
    WFA out;
    out.alphabet = a.alphabet;
    out.dim = k;
    for (const auto& sym : a.alphabet) {
        // A'_a S = S A_a
        auto sol = solve(s.transpose(), (s * a.delta(sym)).transpose());
        out.transitions.emplace(sym, sol->transpose());
    }
    out.initial = s.apply(a.initial);
    auto f = solve(s.transpose(), Matrix::from_columns({a.final_row}, a.dim));
    out.final_row = f->col(0);
    return out;
}

WFA wfa_minimize(const WFA& a) {
    return backward_reduce(forward_reduce(a));
}

bool wfa_equiv(const WFA& a, const WFA& b) {
    if (a.alphabet != b.alphabet)
        throw std::invalid_argument("wfa_equiv: alphabet mismatch");
    a.validate();
    b.validate();
    // Difference automaton: initial (i_a, -i_b); the languages agree iff the
    // joint final functional vanishes on its reachable span.
    std::size_t n = a.dim + b.dim;
    std::map<std::string, Matrix> maps;
    for (const auto& sym : a.alphabet) {
        Matrix m(n, n);
        const Matrix &ma = a.delta(sym), &mb = b.delta(sym);
        for (std::size_t r = 0; r < a.dim; ++r)
            for (std::size_t c = 0; c < a.dim; ++c)
                m.at(r, c) = ma.at(r, c);
        for (std::size_t r = 0; r < b.dim; ++r)
            for (std::size_t c = 0; c < b.dim; ++c)
                m.at(a.dim + r, a.dim + c) = mb.at(r, c);
        maps.emplace(sym, std::move(m));
    }
    Vec init = a.initial;
    for (const auto& x : b.initial)
        init.push_back(-x);
    Vec fin = concat(a.final_row, b.final_row);
    if (is_zero_vec(init)) {
        // nothing reachable; languages agree iff both are the zero language,
        // which this encodes as well (empty reachable span)
        return true;
    }
    for (const auto& v : reachable_basis({init}, a.alphabet, maps, false)) {
        Rational dot = 0;
        for (std::size_t i = 0; i < n; ++i)
            dot += fin[i] * v[i];
        if (dot != 0)
            return false;
    }
    return true;
}

} // namespace gluemin
