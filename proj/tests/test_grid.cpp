#include <doctest.h>

#include "lrc/analysis.hpp"
#include "lrc/grid.hpp"

using namespace lrc;

TEST_CASE("affine variety grids") {
    auto f = FieldSpec::make(7);
    auto g = affine_variety_grid(f, {2, 3});
    auto pts = grid_points(g);
    CHECK(pts.size() == 6);
    for (const auto& P : pts) {
        CHECK(P[0].pow(2) == f->one());
        CHECK(P[1].pow(3) == f->one());
    }
    CHECK_THROWS_AS(affine_variety_grid(f, {4}), InvalidArgument);  // 4 does not divide 6
}

TEST_CASE("toric and Reed-Muller grids") {
    auto f = FieldSpec::make(7);
    CHECK(grid_points(toric_grid(f, 2)).size() == 36);
    CHECK(grid_points(reed_muller_grid(f, 2)).size() == 49);
}

TEST_CASE("Table 1 row 1: H(2,2) minus (1,1) on the (2,3) grid is [6,3,3] r=2 optimal") {
    auto f = FieldSpec::make(7);
    auto g = affine_variety_grid(f, {2, 3});
    auto shape = remove_points(hypercube({2, 2}), {{1, 1}}).result;
    auto bp = grid_blueprint(g, shape, 1);
    CHECK(bp.locality == 2);
    validate_blueprint(bp);
    auto code = code_from_blueprint(bp);
    CHECK(code.n == 6);
    CHECK(code.k == 3);
    auto d = min_distance_exhaustive(code);
    CHECK(d.lo == 3);
    CHECK(bound_report(code, bp.locality, d.lo).classification == OptClass::optimal);
}

TEST_CASE("grid blueprint preconditions") {
    auto f = FieldSpec::make(7);
    auto g = affine_variety_grid(f, {2, 3});
    // axis-2 degree 2 = n_2 - 1 is too large: interpolation cannot recover
    CHECK_THROWS_AS(grid_blueprint(g, hypercube({2, 3}), 1), InvalidArgument);
}

TEST_CASE("rm_distance_bound") {
    auto f = FieldSpec::make(7);
    CHECK(rm_distance_bound(simplex(2, 6), 2, 7, 49) == 7);
    CHECK(rm_distance_bound(simplex(2, 5), 2, 7, 49) == 14);
    CHECK(rm_distance_bound(Polytope(2, {{0, 0}}), 2, 7, 49) == 49);  // l = 0: full weight
    // on a subset the bound may be vacuous
    CHECK(rm_distance_bound(simplex(2, 6), 2, 7, 36) == -6);
}

TEST_CASE("product proposition: d = d1 * d2, validated exhaustively") {
    auto f = FieldSpec::make(7);
    // two [3,2,2] Reed-Solomon components on the cube-root axis
    auto g1 = affine_variety_grid(f, {3});
    Polytope line(1, {{0}, {1}});
    auto c1 = measure(grid_evaluation_matrix(g1, line));
    CHECK(c1.n == 3);
    CHECK(c1.k == 2);
    auto d1 = min_distance_exhaustive(c1);
    CHECK(d1.lo == 2);

    auto gp = product_grid(g1, g1);
    auto shape = line.product(line);
    auto cp = measure(grid_evaluation_matrix(gp, shape));
    CHECK(cp.n == 9);
    CHECK(cp.k == 4);
    auto dp = min_distance_exhaustive(cp);  // oracle: all 7^4 codewords
    CHECK(dp.lo == product_distance(d1.lo, d1.lo));
    CHECK(dp.lo == 4);

    SUBCASE("times a d = 1 full-space component leaves d unchanged") {
        CHECK(product_distance(dp.lo, 1) == dp.lo);
    }
}

TEST_CASE("hypercube corollary") {
    auto f = FieldSpec::make(7);
    SUBCASE("formula on a 2 x 3 grid with H(2,2)") {
        CHECK(hypercube_distance({2, 3}, {2, 2}) == 2);
        auto g = affine_variety_grid(f, {2, 3});
        auto c = measure(grid_evaluation_matrix(g, hypercube({2, 2})));
        auto d = min_distance_exhaustive(c);
        CHECK(d.lo == 2);
    }
    SUBCASE("injectivity: rank equals the shape size when l_i <= n_i") {
        auto g = affine_variety_grid(f, {3, 6});
        auto c = measure(grid_evaluation_matrix(g, hypercube({3, 4})));
        CHECK(c.k == 12);
        CHECK(c.injective());
    }
    SUBCASE("exhaustive check on several boxes") {
        for (auto ls : std::vector<std::vector<std::uint32_t>>{{1, 2}, {2, 3}, {3, 2}}) {
            auto g = affine_variety_grid(f, {3, 3});
            auto c = measure(grid_evaluation_matrix(g, hypercube(ls)));
            auto d = min_distance_exhaustive(c);
            CHECK(d.lo == hypercube_distance({3, 3}, ls));
        }
    }
}

TEST_CASE("capability profile") {
    auto f = FieldSpec::make(7);
    auto g = toric_grid(f, 2);
    SUBCASE("toric simplex S1 = simplex(4) minus corners: corrects 2 erasures") {
        auto shape = remove_points(simplex(2, 4), {{4, 0}, {0, 4}}).result;
        auto cp = capability_profile(shape, g, 0);
        CHECK(cp.r == 5);      // n_i - 1
        CHECK(cp.rho == 3);    // i-degree 3 = 6 - 3, corrects rho - 1 = 2
        // blueprint view: locality 4, two erasures per fibre
        auto bp = grid_blueprint(g, shape, 0);
        CHECK(bp.locality == 4);
        CHECK(bp.capability == 2);
    }
    SUBCASE("i-degree = n_i - 2 gives rho = 2") {
        auto cp = capability_profile(hypercube({5, 5}), g, 0);
        CHECK(cp.rho == 2);
    }
    SUBCASE("i-degree = n_i - 1 gives rho = 1 and plain locality n_i - 1") {
        auto cp = capability_profile(hypercube({6, 6}), g, 0);
        CHECK(cp.rho == 1);
        CHECK(cp.r == 5);
    }
}

TEST_CASE("multi-erasure recovery on the toric S1 code") {
    auto f = FieldSpec::make(7);
    auto g = toric_grid(f, 2);
    auto shape = remove_points(simplex(2, 4), {{4, 0}, {0, 4}}).result;
    auto bp = grid_blueprint(g, shape, 0);
    validate_blueprint(bp);
    CHECK(bp.availability.size() == 1);  // the other axis
    auto code = code_from_blueprint(bp);
    CHECK(code.n == 36);
    CHECK(code.k == 13);
    auto profile = profile_of(bp);
    CHECK(profile.availability() == 2);
    auto check = verify_recovery(code, profile, 400, 99);  // randomized: 7^13 codewords
    CHECK(check.pass);
}

TEST_CASE("availability profile") {
    auto f = FieldSpec::make(7);
    SUBCASE("RM shape with both degrees q-2: two disjoint recovering sets") {
        auto g = reed_muller_grid(f, 2);
        auto shape = remove_points(simplex(2, 6), {{0, 6}, {6, 0}, {1, 1}}).result;
        auto av = availability_profile(shape, g);
        REQUIRE(av.size() == 2);
        CHECK(av[0].second == 6);
        CHECK(av[1].second == 6);
    }
    SUBCASE("hypercube H(q-1,...,q-1) sub-polytopes reach m sets") {
        auto g = reed_muller_grid(f, 3);
        auto av = availability_profile(hypercube({6, 6, 6}), g);
        CHECK(av.size() == 3);
    }
    SUBCASE("single-variable shape has one set") {
        auto g = reed_muller_grid(f, 1);
        auto av = availability_profile(Polytope(1, {{0}, {1}, {2}}), g);
        CHECK(av.size() == 1);
    }
}

TEST_CASE("RM checksum: axis-m fibre sums vanish for degrees <= q-2") {
    auto f = FieldSpec::make(7);
    auto g = reed_muller_grid(f, 2);
    auto bp = grid_blueprint(g, simplex(2, 5), 1);
    CHECK(bp.mode == RecoveryMode::checksum);
    CHECK(bp.locality == 6);
    validate_blueprint(bp);  // exhaustive basis x fibre checksum validation

    // availability on the other axis, also checksum
    REQUIRE(bp.availability.size() == 1);
    CHECK(bp.availability[0].mode == RecoveryMode::checksum);
}

TEST_CASE("grid exponent reduction respects axis orders") {
    auto f = FieldSpec::make(7);
    SUBCASE("roots-of-unity axis reduces mod n_i") {
        auto g = affine_variety_grid(f, {2, 3});
        // x^2 reduces to 1 on the order-2 axis, x^3 to x^0 = 1 on axis 2
        auto r = reduce_shape_for_grid(Polytope(2, {{2, 3}}), g);
        CHECK(r.contains({0, 0}));
    }
    SUBCASE("full-field axis reduces into [1, q-1]") {
        auto g = reed_muller_grid(f, 1);
        auto r = reduce_shape_for_grid(Polytope(1, {{7}}), g);
        CHECK(r.contains({1}));  // x^7 = x pointwise, never to x^0
        auto r6 = reduce_shape_for_grid(Polytope(1, {{12}}), g);
        CHECK(r6.contains({6}));  // x^12 = x^6 pointwise (0 at 0), never to 1
    }
    SUBCASE("reduced duplicate exponents merge; the code is unchanged") {
        auto g = affine_variety_grid(f, {3, 3});
        Polytope a(2, {{1, 0}, {4, 0}, {0, 1}});  // x^4 = x on 3rd roots
        Polytope b(2, {{1, 0}, {0, 1}});
        auto ca = measure(grid_evaluation_matrix(g, a));
        auto cb = measure(grid_evaluation_matrix(g, b));
        CHECK(ca.k == cb.k);
        CHECK(ca.n == cb.n);
    }
}
