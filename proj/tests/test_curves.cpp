#include <doctest.h>

#include <set>

#include "lrc/analysis.hpp"
#include "lrc/curves.hpp"

using namespace lrc;

TEST_CASE("curve points satisfy their equations exactly") {
    for (auto curve : {klein_curve(), hermitian_curve(3),
                       elliptic_curve(FieldSpec::make(13), FieldSpec::make(13)->from_packed(4))}) {
        for (const auto& P : rational_points(curve)) CHECK(curve.equation.evaluate(P).is_zero());
    }
}

TEST_CASE("Klein quartic over GF(8)") {
    auto curve = klein_curve();
    auto pts = rational_points(curve);
    CHECK(pts.size() == 22);  // 24 rational points minus the two at infinity
    CHECK(curve.infinite_points == 2);

    auto bp = klein_blueprint(6);
    CHECK(bp.points.size() == 21);
    CHECK(bp.locality == 2);
    CHECK(bp.fibres.fibres.size() == 7);
    for (const auto& f : bp.fibres.fibres) CHECK(f.distinct_nodes == 3);
    validate_blueprint(bp);

    auto code = code_from_blueprint(bp);
    CHECK(code.n == 21);
    CHECK(code.k == 4);
    CHECK(*bp.distance_lb == 15);  // Goppa: d >= n - 6

    SUBCASE("l = 1 gives the constants-only code") {
        auto bp1 = klein_blueprint(1);
        auto c1 = code_from_blueprint(bp1);
        CHECK(c1.k == 1);
        auto d = min_distance_bz(c1);
        CHECK(d.exact);
        CHECK(d.lo == 21);
    }
    SUBCASE("P(20) minus (6,0) has dimension 12") {
        auto bp2 = klein_blueprint(20, {{6, 0}});
        auto c2 = code_from_blueprint(bp2);
        CHECK(c2.k == 12);
    }
    SUBCASE("dimension injectivity for every l < n: dim = |P(l)|") {
        // the paper's injectivity criterion: l < n makes ev injective on L(lQ)
        for (std::uint32_t l = 1; l <= 20; ++l) {
            auto b = klein_blueprint(l);
            auto c = code_from_blueprint(b);
            CHECK(c.injective());
            CHECK(c.k == b.basis.size());
        }
    }
    SUBCASE("l out of range") {
        CHECK_THROWS_AS(klein_blueprint(0), InvalidArgument);
        CHECK_THROWS_AS(klein_blueprint(21), InvalidArgument);
    }
}

TEST_CASE("elliptic y^2 = x^3 + 4 over GF(13)") {
    auto f = FieldSpec::make(13);
    auto B = f->from_packed(4);
    auto curve = elliptic_curve(f, B);
    auto pts = rational_points(curve);
    CHECK(pts.size() == 20);  // the maximum possible
    std::set<std::pair<std::uint32_t, std::uint32_t>> got;
    for (const auto& P : pts) got.insert({P[0].packed(), P[1].packed()});
    CHECK(got.count({7, 3}));
    CHECK(got.count({7, 10}));
    CHECK(got.count({0, 2}));
    CHECK(got.count({0, 11}));

    auto bp = elliptic_blueprint(f, B, 6);
    CHECK(bp.points.size() == 18);  // (0, +-2) dropped
    CHECK(bp.locality == 2);
    CHECK(bp.fibres.fibres.size() == 6);
    validate_blueprint(bp);
    auto code = code_from_blueprint(bp);
    CHECK(code.k == 5);  // 6 - floor(5/3)

    SUBCASE("fibre x-values sum to zero (sigma_1 of x^3 = c)") {
        for (const auto& fib : bp.fibres.fibres) {
            FieldElement s = f->zero();
            for (auto i : fib.members) s += bp.fibres.nodes[i];
            CHECK(s.is_zero());
        }
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(elliptic_blueprint(FieldSpec::make(11), FieldSpec::make(11)->one(), 3),
                        InvalidArgument);  // 11 = 2 mod 3
        CHECK_THROWS_AS(elliptic_blueprint(f, f->zero(), 3), InvalidArgument);
        CHECK_THROWS_AS(elliptic_blueprint(f, B, 18), InvalidArgument);  // l >= n
    }
}

TEST_CASE("elliptic twist identities for q = 7") {
    auto S = elliptic_twist_counts(FieldSpec::make(7));
    REQUIRE(S.size() == 6);
    CHECK(S[0] == -S[3]);
    CHECK(S[1] == -S[4]);
    CHECK(S[2] == -S[5]);
    CHECK(S[0] * S[0] + S[1] * S[1] + S[2] * S[2] == 6 * 7);
}

TEST_CASE("Hermitian curves: q^3 affine points") {
    CHECK(rational_points(hermitian_curve(2)).size() == 8);
    CHECK(rational_points(hermitian_curve(3)).size() == 27);
}

TEST_CASE("Hermitian blueprints over GF(9)") {
    auto bp = hermitian_blueprint(3, HermitianShape::rectangular, 2);
    CHECK(bp.points.size() == 27);
    CHECK(bp.locality == 2);
    CHECK(bp.mode == RecoveryMode::checksum);
    CHECK(bp.fibres.fibres.size() == 9);
    for (const auto& f : bp.fibres.fibres) CHECK(f.members.size() == 3);
    validate_blueprint(bp);  // includes: every basis fibre sum is zero

    auto code = code_from_blueprint(bp);
    CHECK(code.k == 6);  // (l+1) * r = 3 * 2

    SUBCASE("recovery by one addition equals re-encoding") {
        auto profile = profile_of(bp);
        auto check = verify_recovery(code, profile);
        CHECK(check.pass);
    }
}

TEST_CASE("Hermitian dimension improvement: weighted = rectangular + (q-1)(q-2)/2") {
    const std::uint32_t q = 5;
    for (std::uint32_t l = 1; l <= 21; ++l) {
        auto rect = hermitian_blueprint(q, HermitianShape::rectangular, l);
        auto wei = hermitian_blueprint(q, HermitianShape::weighted, l);
        auto kr = code_from_blueprint(rect).k;
        auto kw = code_from_blueprint(wei).k;
        CHECK(kw == kr + 6);
        // same Goppa bound: the improvement is free
        CHECK(*rect.goppa_degree == *wei.goppa_degree);
    }
    CHECK_THROWS_AS(hermitian_blueprint(5, HermitianShape::rectangular, 22), InvalidArgument);
}

TEST_CASE("Hermitian distance improvement: Goppa estimate gains q units") {
    const std::uint32_t q = 5;
    for (std::uint32_t l = 1; l <= 21; ++l) {
        auto base = hermitian_blueprint(q, HermitianShape::rectangular, l);
        auto dist = hermitian_blueprint(q, HermitianShape::distance_improved, l);
        CHECK(*dist.distance_lb == *base.distance_lb + 5);
        CHECK(code_from_blueprint(dist).k >= code_from_blueprint(base).k);
    }
}

TEST_CASE("Riemann-Roch characterization for q = 4, t = 2") {
    auto r1 = riemann_roch_test(4, {2, 1, 0});
    CHECK(r1.is_rr_space);
    CHECK(*r1.s == 10);
    auto r2 = riemann_roch_test(4, {3, 1, 0});
    CHECK(r2.is_rr_space);
    CHECK(*r2.s == 12);
    auto r3 = riemann_roch_test(4, {3, 2, 0});
    CHECK(r3.is_rr_space);
    CHECK(*r3.s == 13);
    auto r4 = riemann_roch_test(4, {3, 2, 1});
    CHECK(r4.is_rr_space);
    CHECK(*r4.s == 14);
    CHECK(!riemann_roch_test(4, {3, 1, 1}).is_rr_space);
    CHECK_THROWS_AS(riemann_roch_test(4, {1, 1, 1, 1}), InvalidArgument);  // t > q-2
}

namespace {
// independent oracle: l(sQ) = #(semigroup <q, q+1> up to s); V = L(sQ) iff
// dim V equals that count for s = max pole order of the basis
std::size_t semigroup_count(std::uint32_t q, std::uint64_t s) {
    std::vector<bool> in(s + 1, false);
    in[0] = true;
    for (std::uint64_t v = 1; v <= s; ++v)
        in[v] = (v >= q && in[v - q]) || (v >= q + 1 && in[v - q - 1]);
    std::size_t cnt = 0;
    for (std::uint64_t v = 0; v <= s; ++v)
        if (in[v]) ++cnt;
    return cnt;
}
}  // namespace

TEST_CASE("Riemann-Roch test agrees with the Weierstrass-gap oracle") {
    const std::uint32_t q = 4;
    for (std::uint32_t l0 = 0; l0 <= 4; ++l0)
        for (std::uint32_t l1 = 0; l1 <= 4; ++l1)
            for (std::uint32_t l2 = 0; l2 <= 4; ++l2) {
                std::vector<std::uint32_t> caps{l0, l1, l2};
                std::uint64_t dim = (l0 + 1) + (l1 + 1) + (l2 + 1);
                std::uint64_t s = 0;
                for (std::uint32_t i = 0; i <= 2; ++i)
                    s = std::max<std::uint64_t>(s, std::uint64_t(caps[i]) * q + i * (q + 1));
                bool oracle = semigroup_count(q, s) == dim;
                // V = L(sQ) also needs V to contain every monomial of pole
                // order <= s with y-degree <= t; the j-pattern captures it.
                auto got = riemann_roch_test(q, caps);
                if (got.is_rr_space) {
                    CHECK(*got.s == s);
                    CHECK(oracle);
                }
                if (!got.is_rr_space) CHECK(!oracle);
            }
}

TEST_CASE("Artin-Schreier blueprint over GF(4): u = x^3, v = y^2 + y") {
    auto f = FieldSpec::make(4);
    UniPoly u(f, {f->zero(), f->zero(), f->zero(), f->one()});
    UniPoly v(f, {f->zero(), f->one(), f->one()});
    auto bp = artin_schreier_blueprint(f, u, v, 4);
    CHECK(bp.mode == RecoveryMode::checksum);
    CHECK(bp.locality == 1);
    for (const auto& fib : bp.fibres.fibres) CHECK(fib.members.size() == 2);
    validate_blueprint(bp);  // all fibre sums of all basis functions vanish

    SUBCASE("v must be linearized and separable") {
        UniPoly bad_v(f, {f->zero(), f->zero(), f->one()});  // y^2: not separable
        CHECK_THROWS_AS(artin_schreier_blueprint(f, u, bad_v, 3), InvalidArgument);
        UniPoly not_lin(f, {f->zero(), f->one(), f->one(), f->one()});  // y^3 term
        CHECK_THROWS_AS(artin_schreier_blueprint(f, u, not_lin, 3), InvalidArgument);
    }
    SUBCASE("coprime degrees required") {
        UniPoly u2(f, {f->zero(), f->zero(), f->one()});  // x^2, gcd(2,2) = 2
        CHECK_THROWS_AS(artin_schreier_blueprint(f, u2, v, 3), InvalidArgument);
    }
}

TEST_CASE("Hermitian is the Artin-Schreier special case u = x^(q+1), v = y^q + y") {
    const std::uint32_t q = 3;
    auto f = FieldSpec::make(9);
    std::vector<FieldElement> uc(q + 2, f->zero());
    uc[q + 1] = f->one();
    std::vector<FieldElement> vc(q + 1, f->zero());
    vc[1] = f->one();
    vc[q] = f->one();
    auto as = artin_schreier_blueprint(f, UniPoly(f, uc), UniPoly(f, vc), 13);
    auto herm = hermitian_blueprint(q, HermitianShape::rectangular, 2);
    CHECK(as.points.size() == herm.points.size());
    CHECK(as.locality == herm.locality);
    CHECK(as.fibres.fibres.size() == herm.fibres.fibres.size());
}

TEST_CASE("Norm-Trace blueprint q = 2, u = 2: n = 8, r = 1") {
    auto bp = norm_trace_blueprint(2, 2, 4);
    CHECK(bp.points.size() == 8);
    CHECK(bp.locality == 1);
    CHECK(bp.mode == RecoveryMode::checksum);
    validate_blueprint(bp);
    auto code = code_from_blueprint(bp);
    auto check = verify_recovery(code, profile_of(bp));
    CHECK(check.pass);
}

TEST_CASE("Goppa bound holds for curve codes") {
    for (auto l : {3u, 6u, 9u}) {
        auto bp = klein_blueprint(l);
        auto code = code_from_blueprint(bp);
        auto d = min_distance(code);
        REQUIRE(d.exact);
        CHECK(d.lo >= static_cast<std::uint64_t>(*bp.distance_lb));
    }
}
