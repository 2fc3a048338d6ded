#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gluemin/wfa.hpp"
#include "support/corpus.hpp"
#include "support/gen.hpp"

using namespace gluemin;

TEST_CASE("evaluation of the running example") {
    WFA a = corpus::a_vec();
    CHECK(wfa_eval(a, {}) == 1);
    CHECK(wfa_eval(a, corpus::letters("bb")) == 1);
    CHECK(wfa_eval(a, corpus::letters("ab")) == 0);
    CHECK(wfa_eval(a, corpus::letters("abba")) == 4);
    CHECK(wfa_eval(a, corpus::letters("c")) == 0);
    CHECK_THROWS(wfa_eval(a, {"d"}));
}

TEST_CASE("evaluation matches the closed formula on short words") {
    WFA a = corpus::a_vec();
    for (const auto& w : corpus::all_words(4))
        CHECK(wfa_eval(a, corpus::letters(w)) == corpus::language_value(w));
}

TEST_CASE("forward reduction") {
    WFA a = corpus::a_vec();
    CHECK(forward_reduce(a).dim == 2);

    WFA unreachable;
    unreachable.alphabet = {"a"};
    unreachable.dim = 2;
    unreachable.initial = {0, 0};
    unreachable.final_row = {1, 1};
    unreachable.transitions.emplace("a", Matrix::identity(2));
    CHECK(forward_reduce(unreachable).dim == 0);
}

TEST_CASE("block with an unreachable summand shrinks") {
    // a_vec plus a third coordinate never touched by the initial vector
    WFA a;
    a.alphabet = {"a", "b", "c"};
    a.dim = 3;
    a.initial = {1, 0, 0};
    a.final_row = {1, 0, 1};
    a.transitions.emplace("a", Matrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 1}});
    a.transitions.emplace("b", Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    a.transitions.emplace("c", Matrix::zero(3, 3));
    WFA r = forward_reduce(a);
    CHECK(r.dim == 2);
    for (const auto& w : corpus::all_words(3))
        CHECK(wfa_eval(r, corpus::letters(w)) == wfa_eval(a, corpus::letters(w)));
}

TEST_CASE("minimization of the running example") {
    WFA m = wfa_minimize(corpus::a_vec());
    CHECK(m.dim == 2);
    for (const auto& w : corpus::all_words(4))
        CHECK(wfa_eval(m, corpus::letters(w)) == corpus::language_value(w));
}

TEST_CASE("zero language minimizes to dimension zero") {
    WFA a = corpus::a_vec();
    a.final_row = {0, 0};
    CHECK(wfa_minimize(a).dim == 0);
    CHECK(wfa_eval(wfa_minimize(a), corpus::letters("ab")) == 0);
}

TEST_CASE("equivalence") {
    WFA a = corpus::a_vec();
    CHECK(wfa_equiv(a, a));
    WFA doubled = a;
    doubled.final_row = {2, 0};
    CHECK(!wfa_equiv(a, doubled));
    WFA other = corpus::a_vec();
    other.alphabet = {"a", "b"};
    other.transitions.erase("c");
    CHECK_THROWS(wfa_equiv(a, other));
}

TEST_CASE("language preservation on random automata") {
    gen::Rng rng(23);
    for (int i = 0; i < 20; ++i) {
        WFA a = gen::wfa(rng, rng.below(4) + 1, 2);
        WFA m = wfa_minimize(a);
        CHECK(m.dim <= a.dim);
        std::vector<std::string> words{""};
        std::size_t begin = 0;
        for (std::size_t len = 1; len <= 2 * a.dim + 2; ++len) {
            std::size_t end = words.size();
            for (std::size_t k = begin; k < end; ++k)
                for (const auto& sym : a.alphabet)
                    words.push_back(words[k] + sym);
            begin = end;
        }
        for (const auto& w : words)
            CHECK(wfa_eval(m, corpus::letters(w)) == wfa_eval(a, corpus::letters(w)));
    }
}

TEST_CASE("independent minimizations of equivalent machines agree") {
    gen::Rng rng(29);
    for (int i = 0; i < 15; ++i) {
        WFA a = gen::wfa(rng, rng.below(3) + 1, 2);
        // change of basis gives an equivalent machine
        Matrix p = gen::invertible(rng, a.dim);
        Matrix pinv = *inverse(p);
        WFA b = a;
        b.initial = p.apply(a.initial);
        Vec fr(a.dim);
        for (std::size_t c = 0; c < a.dim; ++c)
            for (std::size_t k = 0; k < a.dim; ++k)
                fr[c] += a.final_row[k] * pinv.at(k, c);
        b.final_row = fr;
        for (auto& [sym, m] : b.transitions)
            m = p * a.transitions.at(sym) * pinv;
        CHECK(wfa_equiv(a, b));
        WFA ma = wfa_minimize(a), mb = wfa_minimize(b);
        CHECK(ma.dim == mb.dim);
        CHECK(wfa_equiv(ma, mb));
    }
}

TEST_CASE("wfa_equiv agrees with brute-force enumeration") {
    gen::Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        WFA a = gen::wfa(rng, rng.below(3) + 1, 2);
        WFA b = rng.below(2) ? gen::wfa(rng, rng.below(3) + 1, 2) : wfa_minimize(a);
        bool brute = true;
        std::vector<std::string> words{""};
        std::size_t begin = 0;
        for (std::size_t len = 1; len <= a.dim + b.dim; ++len) {
            std::size_t end = words.size();
            for (std::size_t k = begin; k < end; ++k)
                for (const auto& sym : a.alphabet)
                    words.push_back(words[k] + sym);
            begin = end;
        }
        for (const auto& w : words)
            brute = brute &&
                    wfa_eval(a, corpus::letters(w)) == wfa_eval(b, corpus::letters(w));
        CHECK(wfa_equiv(a, b) == brute);
    }
}
