#pragma once

#include "gluemin/glued_automaton.hpp"

// The running examples: the doubling-weight language over {a,b,c}, its three
// machine presentations, the rotation automaton, and small DFAs.
namespace corpus {

using namespace gluemin;

// l(u) = 2^{#a} when u has an even number of b's and no c, else 0.
inline Rational language_value(const std::string& word) {
    std::size_t as = 0, bs = 0;
    for (char c : word) {
        if (c == 'a')
            ++as;
        else if (c == 'b')
            ++bs;
        else
            return 0;
    }
    if (bs % 2 != 0)
        return 0;
    Rational v = 1;
    for (std::size_t i = 0; i < as; ++i)
        v *= 2;
    return v;
}

inline std::vector<std::string> letters(const std::string& word) {
    std::vector<std::string> out;
    for (char c : word)
        out.push_back(std::string(1, c));
    return out;
}

// All words over {a,b,c} of length <= max_len (364 for max_len = 5).
inline std::vector<std::string> all_words(std::size_t max_len) {
    std::vector<std::string> out{""};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (char c : {'a', 'b', 'c'})
                out.push_back(out[i] + c);
        begin = end;
    }
    return out;
}

inline WFA a_vec() {
    WFA a;
    a.alphabet = {"a", "b", "c"};
    a.dim = 2;
    a.initial = {1, 0};
    a.final_row = {1, 0};
    a.transitions.emplace("a", Matrix{{2, 0}, {0, 2}});
    a.transitions.emplace("b", Matrix{{0, 1}, {1, 0}});
    a.transitions.emplace("c", Matrix{{0, 0}, {0, 0}});
    return a;
}

inline GluedAutomaton a_vec_glued() {
    GluedAutomaton g;
    WFA w = a_vec();
    g.alphabet = w.alphabet;
    g.profile = Profile::weighted;
    g.states = embed_vec(2);
    g.initial = {0, w.initial};
    g.final_map.source = g.states;
    g.final_map.target = g.output_space();
    g.final_map.assignment = {{0, Matrix::from_rows({w.final_row}, 2)}};
    for (const auto& [sym, m] : w.transitions) {
        GluedMorphism d;
        d.source = g.states;
        d.target = g.states;
        d.assignment = {{0, m}};
        g.transitions.emplace(sym, d);
    }
    return g;
}

// delta_c policy for the duvs machine: where the zeroed value lands.
enum class CVariant { keep, swap, to_even, to_odd };

inline GluedAutomaton a_duvs(CVariant variant = CVariant::keep) {
    DuvsSpec spec;
    spec.alphabet = {"a", "b", "c"};
    spec.components = {{1, {1}}, {1, {0}}}; // even (final x), odd (final 0)
    spec.initial = {0, {1}};
    Matrix two{{2}}, one{{1}}, zero{{0}};
    spec.transitions["a"] = {{0, two}, {1, two}};
    spec.transitions["b"] = {{1, one}, {0, one}};
    switch (variant) {
    case CVariant::keep:
        spec.transitions["c"] = {{0, zero}, {1, zero}};
        break;
    case CVariant::swap:
        spec.transitions["c"] = {{1, zero}, {0, zero}};
        break;
    case CVariant::to_even:
        spec.transitions["c"] = {{0, zero}, {0, zero}};
        break;
    case CVariant::to_odd:
        spec.transitions["c"] = {{1, zero}, {1, zero}};
        break;
    }
    return import_duvs(spec);
}

// Single 2-dimensional component rotating by the rational angle with
// cos = 3/5, sin = 4/5; the rotation has infinite order.
inline GluedAutomaton rotation() {
    GluedAutomaton g;
    g.alphabet = {"r"};
    g.profile = Profile::weighted;
    g.states = embed_vec(2);
    g.initial = {0, {1, 0}};
    g.final_map.source = g.states;
    g.final_map.target = g.output_space();
    g.final_map.assignment = {{0, Matrix{{1, 0}}}};
    GluedMorphism d;
    d.source = g.states;
    d.target = g.states;
    d.assignment = {{0, Matrix{{Rational(3, 5), Rational(-4, 5)},
                               {Rational(4, 5), Rational(3, 5)}}}};
    g.transitions.emplace("r", d);
    return g;
}

inline Matrix rotation_matrix() {
    return Matrix{{Rational(3, 5), Rational(-4, 5)},
                  {Rational(4, 5), Rational(3, 5)}};
}

// Four states over {a,b}; states 2 and 3 are interchangeable, so the
// minimal automaton has three states.
inline GluedAutomaton dfa4() {
    return import_dfa(4, 0, {"a", "b"},
                      {{"a", {1, 2, 3, 2}}, {"b", {0, 3, 0, 0}}},
                      {false, true, false, false});
}

// The minimal hybrid machine for l: two lines glued at the origin.
inline GluedAutomaton two_lines() {
    GluedAutomaton g;
    g.alphabet = {"a", "b", "c"};
    g.profile = Profile::weighted;
    g.states.components = {1, 1};
    g.states.gluings.insert({{0, 1}, Gluing{Subspace::zero(1), Matrix{{0}}}});
    g.initial = {0, {1}};
    g.final_map.source = g.states;
    g.final_map.target = g.output_space();
    g.final_map.assignment = {{0, Matrix{{1}}}, {0, Matrix{{0}}}};
    auto endo = [&](ComponentMap m0, ComponentMap m1) {
        GluedMorphism d;
        d.source = g.states;
        d.target = g.states;
        d.assignment = {std::move(m0), std::move(m1)};
        return d;
    };
    g.transitions.emplace("a", endo({0, Matrix{{2}}}, {1, Matrix{{2}}}));
    g.transitions.emplace("b", endo({1, Matrix{{1}}}, {0, Matrix{{1}}}));
    g.transitions.emplace("c", endo({0, Matrix{{0}}}, {1, Matrix{{0}}}));
    return g;
}

} // namespace corpus
