#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gluemin/family.hpp"
#include "support/gen.hpp"

using namespace gluemin;

TEST_CASE("antichain reduction drops included members") {
    Subspace x = Subspace::span({{1, 0}}, 2);
    Subspace y = Subspace::span({{0, 1}}, 2);
    auto f = SubspaceFamily::antichain_reduce({x, y, x, Subspace::zero(2)}, 2);
    CHECK(f.size() == 2);
    auto g = SubspaceFamily::antichain_reduce({x, Subspace::full(2)}, 2);
    CHECK(g.size() == 1);
    CHECK(g.members()[0] == Subspace::full(2));
    CHECK(SubspaceFamily::antichain_reduce({}, 2).empty());
}

TEST_CASE("union containment uses the one-member criterion") {
    Subspace x = Subspace::span({{1, 0}}, 2);
    Subspace y = Subspace::span({{0, 1}}, 2);
    auto f = SubspaceFamily::antichain_reduce({x, y}, 2);
    CHECK(f.union_includes_subspace(x));
    CHECK(f.union_includes_subspace(Subspace::zero(2)));
    // the diagonal lies in the union of spans pointwise-nowhere
    CHECK(!f.union_includes_subspace(Subspace::span({{1, 1}}, 2)));
    CHECK(!f.union_includes_subspace(Subspace::full(2)));
}

TEST_CASE("family equality is structural on the normal form") {
    Subspace x = Subspace::span({{1, 0}}, 2);
    Subspace y = Subspace::span({{0, 1}}, 2);
    auto f = SubspaceFamily::antichain_reduce({x, y}, 2);
    auto g = SubspaceFamily::antichain_reduce({y, x, x}, 2);
    CHECK(family_equal(f, g));
    auto h = SubspaceFamily::antichain_reduce({x}, 2);
    CHECK(!family_equal(f, h));
}

TEST_CASE("minimal cover of points") {
    auto f = minimal_cover_points({{1, 0}, {2, 0}, {0, 3}}, 2);
    CHECK(f.size() == 2);
    CHECK(f.union_includes_subspace(Subspace::span({{1, 0}}, 2)));
    CHECK(f.union_includes_subspace(Subspace::span({{0, 1}}, 2)));

    auto z = minimal_cover_points({{0, 0}}, 2);
    CHECK(z.size() == 1);
    CHECK(z.members()[0].is_zero());
}

TEST_CASE("widen collapses to the sum") {
    Subspace x = Subspace::span({{1, 0}}, 2);
    Subspace y = Subspace::span({{0, 1}}, 2);
    auto f = SubspaceFamily::antichain_reduce({x, y}, 2);
    auto w = widen(f);
    CHECK(w.size() == 1);
    CHECK(w.members()[0] == Subspace::full(2));
    CHECK(w.union_includes_family(f));
}

TEST_CASE("antichain covers with equal unions coincide") {
    gen::Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        std::size_t n = rng.below(4) + 1;
        std::vector<Subspace> members;
        std::size_t count = rng.below(4) + 1;
        for (std::size_t k = 0; k < count; ++k)
            members.push_back(gen::subspace(rng, n, 2));
        auto f = SubspaceFamily::antichain_reduce(members, n);
        // shuffle and duplicate, then reduce again
        std::vector<Subspace> again;
        for (std::size_t k = members.size(); k-- > 0;) {
            again.push_back(members[k]);
            again.push_back(members[k]);
        }
        auto g = SubspaceFamily::antichain_reduce(again, n);
        CHECK(f == g);
        CHECK(f.union_includes_family(g));
        CHECK(g.union_includes_family(f));
    }
}
