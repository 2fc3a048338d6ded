#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gluemin/subspace.hpp"
#include "support/gen.hpp"

using namespace gluemin;

TEST_CASE("span canonicalizes") {
    Subspace s = Subspace::span({{2, 4}, {1, 2}}, 2);
    Subspace t = Subspace::span({{1, 2}}, 2);
    CHECK(s == t);
    CHECK(s.dim() == 1);
    CHECK(s.basis() == std::vector<Vec>{{1, 2}});
    CHECK(Subspace::zero(3).is_zero());
    CHECK(Subspace::full(3).is_full());
}

TEST_CASE("containment and coordinates") {
    Subspace s = Subspace::span({{1, 0, 1}, {0, 1, 0}}, 3);
    CHECK(s.contains({2, 3, 2}));
    CHECK(!s.contains({1, 0, 0}));
    auto c = s.coordinates({2, 3, 2});
    REQUIRE(c);
    CHECK(*c == Vec{2, 3});
    CHECK(!s.coordinates({0, 0, 1}));
    CHECK(s.includes(Subspace::span({{1, 1, 1}}, 3)));
    CHECK(!s.includes(Subspace::full(3)));
}

TEST_CASE("sum and intersection on a concrete pair") {
    Subspace x = Subspace::span({{1, 0}}, 2);
    Subspace y = Subspace::span({{0, 1}}, 2);
    CHECK(sum(x, y) == Subspace::full(2));
    CHECK(intersect(x, y) == Subspace::zero(2));
    Subspace d = Subspace::span({{1, 1}}, 2);
    CHECK(intersect(sum(x, y), d) == d);
}

TEST_CASE("image, preimage, kernel") {
    Matrix swap{{0, 1}, {1, 0}};
    Subspace x = Subspace::span({{1, 0}}, 2);
    CHECK(image(swap, x) == Subspace::span({{0, 1}}, 2));
    CHECK(preimage(swap, x) == Subspace::span({{0, 1}}, 2));

    Matrix proj{{1, 0}};
    CHECK(kernel(proj) == Subspace::span({{0, 1}}, 2));
    CHECK(kernel(Matrix::zero(1, 2)) == Subspace::full(2));
    CHECK(preimage(proj, Subspace::zero(1)) == Subspace::span({{0, 1}}, 2));
    CHECK(image(Matrix::zero(2, 2), Subspace::full(2)) == Subspace::zero(2));
}

TEST_CASE("product subspace and complement") {
    Subspace x = Subspace::span({{1, 2}}, 2);
    Subspace y = Subspace::span({{1}}, 1);
    Subspace p = product_subspace(x, y);
    CHECK(p.ambient_dim() == 3);
    CHECK(p.dim() == 2);
    CHECK(p.contains({1, 2, 0}));
    CHECK(p.contains({0, 0, 5}));
    CHECK(!p.contains({1, 0, 0}));

    auto cmpl = complement_basis(x);
    REQUIRE(cmpl.size() == 1);
    Subspace whole = sum(x, Subspace::span(cmpl, 2));
    CHECK(whole.is_full());
}

TEST_CASE("lattice laws on random subspaces") {
    gen::Rng rng(3);
    for (int i = 0; i < 60; ++i) {
        std::size_t n = rng.below(4) + 1;
        Subspace a = gen::subspace(rng, n, 3);
        Subspace b = gen::subspace(rng, n, 3);
        Subspace c = gen::subspace(rng, n, 3);
        CHECK(sum(a, b) == sum(b, a));
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(sum(a, sum(b, c)) == sum(sum(a, b), c));
        CHECK(intersect(a, intersect(b, c)) == intersect(intersect(a, b), c));
        CHECK(sum(a, a) == a);
        CHECK(intersect(a, a) == a);
        // absorption
        CHECK(sum(a, intersect(a, b)) == a);
        CHECK(intersect(a, sum(a, b)) == a);
        // dimension formula
        CHECK(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
    }
}

TEST_CASE("image/preimage adjunction on random data") {
    gen::Rng rng(11);
    for (int i = 0; i < 40; ++i) {
        std::size_t n = rng.below(3) + 1, m = rng.below(3) + 1;
        Matrix f = gen::matrix(rng, m, n);
        Subspace s = gen::subspace(rng, n, 2);
        Subspace t = gen::subspace(rng, m, 2);
        CHECK(t.includes(image(f, s)) == preimage(f, t).includes(s));
        CHECK(image(f, preimage(f, t)) == intersect(t, image(f, Subspace::full(n))));
        CHECK(preimage(f, Subspace::zero(m)) == kernel(f));
        // rank-nullity through the subspace layer
        CHECK(image(f, Subspace::full(n)).dim() + kernel(f).dim() == n);
    }
}

TEST_CASE("canonical ordering is total and consistent") {
    gen::Rng rng(19);
    for (int i = 0; i < 30; ++i) {
        Subspace a = gen::subspace(rng, 3, 2);
        Subspace b = gen::subspace(rng, 3, 2);
        CHECK(((a < b) || (b < a) || (a == b)));
        if (a == b)
            CHECK((a <=> b) == std::weak_ordering::equivalent);
    }
}
