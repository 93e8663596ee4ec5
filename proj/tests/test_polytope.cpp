#include <doctest.h>

#include "lrc/polytope.hpp"

using namespace lrc;

namespace {
std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
}  // namespace

TEST_CASE("simplex cardinalities") {
    CHECK(simplex(2, 6).size() == 28);
    CHECK(simplex(2, 0).size() == 1);
    CHECK(simplex(3, 2).size() == 10);
    for (std::uint32_t m = 1; m <= 4; ++m)
        for (std::uint32_t l = 0; l <= 10; ++l) CHECK(simplex(m, l).size() == choose(m + l, m));
}

TEST_CASE("hypercube cardinalities") {
    CHECK(hypercube({2, 2}).size() == 4);
    CHECK(hypercube({6, 5}).size() == 30);
    CHECK(hypercube({3, 5}).size() == 15);
    CHECK_THROWS_AS(hypercube({2, 0}), InvalidArgument);
}

TEST_CASE("weighted polytopes") {
    SUBCASE("Klein P(6): 3a + 5b <= 6, b <= 1") {
        auto p = weighted_polytope({3, 5}, 6, 1, 1);
        CHECK(p.size() == 4);
        CHECK(p.contains({0, 0}));
        CHECK(p.contains({1, 0}));
        CHECK(p.contains({2, 0}));
        CHECK(p.contains({0, 1}));
    }
    SUBCASE("elliptic cap on the first coordinate, l = 6") {
        auto p = weighted_polytope({2, 3}, 6, 0, 1);
        CHECK(p.size() == 5);
    }
    SUBCASE("elliptic count formula |P(l)| = l - floor((l-1)/3) for l = 1..20") {
        for (std::uint64_t l = 1; l <= 20; ++l) {
            auto p = weighted_polytope({2, 3}, l, 0, 1);
            CHECK(p.size() == l - (l - 1) / 3);
        }
    }
    SUBCASE("l = 0 keeps only the origin") {
        auto p = weighted_polytope({3, 5}, 0, 1, 1);
        REQUIRE(p.size() == 1);
        CHECK(p.contains({0, 0}));
    }
}

TEST_CASE("remove_points") {
    auto h = hypercube({2, 2});
    SUBCASE("drop one point") {
        auto r = remove_points(h, {{1, 1}});
        CHECK(r.result.size() == 3);
        CHECK(r.absent.empty());
    }
    SUBCASE("RM example: simplex(2,6) minus two corners") {
        auto r = remove_points(simplex(2, 6), {{0, 6}, {6, 0}});
        CHECK(r.result.size() == 26);
    }
    SUBCASE("empty drop list is the identity") {
        auto r = remove_points(h, {});
        CHECK(r.result == h);
    }
    SUBCASE("absent points are reported, not errors") {
        auto r = remove_points(h, {{5, 5}, {1, 1}});
        CHECK(r.result.size() == 3);
        REQUIRE(r.absent.size() == 1);
        CHECK(r.absent[0] == LatticePoint{5, 5});
    }
    SUBCASE("remove then re-add restores the set") {
        auto r = remove_points(h, {{0, 1}, {1, 0}});
        CHECK(r.result.with_points({{0, 1}, {1, 0}}) == h);
    }
}

TEST_CASE("i_degree") {
    SUBCASE("H(2,5) drops lower the axis-2 degree from 4 to 3") {
        auto p = hypercube({2, 5});
        CHECK(p.i_degree(1) == 4);
        auto r = remove_points(p, {{1, 4}, {0, 4}, {1, 3}, {1, 2}});
        CHECK(r.result.i_degree(1) == 3);  // locality drops from 5 to 4
    }
    SUBCASE("origin polytope") {
        Polytope origin(2, {{0, 0}});
        CHECK(origin.i_degree(0) == 0);
        CHECK(origin.i_degree(1) == 0);
    }
    SUBCASE("simplex(4) has degree 4 on both axes") {
        auto p = simplex(2, 4);
        CHECK(p.i_degree(0) == 4);
        CHECK(p.i_degree(1) == 4);
    }
    SUBCASE("empty polytope rejected") {
        Polytope empty(2, {});
        CHECK_THROWS_AS(empty.i_degree(0), InvalidArgument);
    }
}

TEST_CASE("monomial basis in graded-lex order") {
    auto klein = weighted_polytope({3, 5}, 6, 1, 1);
    auto basis = klein.monomial_basis();
    REQUIRE(basis.size() == 4);
    CHECK(basis[0].e == std::vector<std::uint32_t>{0, 0});

    Polytope origin(3, {{0, 0, 0}});
    CHECK(origin.monomial_basis().size() == 1);

    CHECK(simplex(2, 6).monomial_basis().size() == 28);

    // graded-lex: degree first, then lexicographic
    auto s = simplex(2, 2).monomial_basis();
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i - 1] < s[i]);
}

TEST_CASE("product polytope") {
    auto a = hypercube({2, 2});
    auto b = hypercube({3});
    auto p = a.product(b);
    CHECK(p.dim() == 3);
    CHECK(p.size() == 12);
}
