#include <doctest.h>

#include <random>
#include <set>

#include "lrc/gf.hpp"
#include "lrc/poly.hpp"

using namespace lrc;

TEST_CASE("GF(13) powers and cubic roots of unity") {
    auto f = FieldSpec::make(13);
    CHECK(f->primitive().packed() == 2);
    FieldElement two = f->from_packed(2);
    CHECK(two.pow(4).packed() == 3);
    FieldElement omega = f->from_packed(3);
    CHECK(omega.pow(3).packed() == 1);  // omega = xi^((q-1)/3) is a cube root of 1
}

TEST_CASE("identities a*1 = a, a+0 = a") {
    for (auto q : {9u, 8u, 13u}) {
        auto f = FieldSpec::make(q);
        for (const auto& a : enumerate_field(f)) {
            CHECK(a * f->one() == a);
            CHECK(a + f->zero() == a);
        }
    }
}

TEST_CASE("GF(8) with modulus x^3+x+1: x * x^2 = x + 1") {
    auto f = FieldSpec::make(2, 3, {1, 1, 0, 1});
    FieldElement x = f->from_coeffs({0, 1});
    FieldElement x2 = f->from_coeffs({0, 0, 1});
    CHECK(x * x2 == f->from_coeffs({1, 1}));
}

TEST_CASE("enumerate_field order and size") {
    auto f3 = FieldSpec::make(3);
    auto e3 = enumerate_field(f3);
    REQUIRE(e3.size() == 3);
    CHECK(e3[0].packed() == 0);
    CHECK(e3[1].packed() == 1);  // xi^0
    CHECK(e3[2].packed() == 2);  // xi^1 with primitive 2

    for (auto q : {8u, 9u}) {
        auto f = FieldSpec::make(q);
        auto e = enumerate_field(f);
        std::set<std::uint32_t> vals;
        for (const auto& a : e) vals.insert(a.packed());
        CHECK(vals.size() == q);
        // nonzero elements are exactly the powers of xi
        for (std::size_t i = 1; i < e.size(); ++i) CHECK(e[i] == f->primitive().pow(i - 1));
    }
}

TEST_CASE("nth roots of unity") {
    auto f13 = FieldSpec::make(13);
    auto r3 = nth_roots_of_unity(f13, 3);
    std::set<std::uint32_t> got;
    for (const auto& r : r3) got.insert(r.packed());
    CHECK(got == std::set<std::uint32_t>{1, 3, 9});

    auto r1 = nth_roots_of_unity(f13, 1);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0] == f13->one());

    auto f7 = FieldSpec::make(7);
    auto r6 = nth_roots_of_unity(f7, 6);
    std::set<std::uint32_t> all;
    for (const auto& r : r6) all.insert(r.packed());
    CHECK(all == std::set<std::uint32_t>{1, 2, 3, 4, 5, 6});

    CHECK_THROWS_AS(nth_roots_of_unity(f7, 4), InvalidArgument);
}

TEST_CASE("univariate roots: exhaustive evaluation with deflation") {
    SUBCASE("y^3 + y - a^4 over GF(9): three roots summing to zero") {
        auto f = FieldSpec::make(9);
        for (const auto& a : enumerate_field(f)) {
            FieldElement c = a.pow(4);
            UniPoly ell(f, {-c, f->one(), f->zero(), f->one()});  // y^3 + y - c
            auto roots = univariate_roots(ell);
            REQUIRE(roots.size() == 3);  // a^4 lies in the image of y^3+y
            FieldElement s = f->zero();
            for (const auto& z : roots) {
                s += z;
                CHECK(ell.evaluate(z).is_zero());
            }
            CHECK(s.is_zero());
        }
    }
    SUBCASE("x^q - x splits with every element once") {
        auto f = FieldSpec::make(9);
        std::vector<FieldElement> c(10, f->zero());
        c[1] = -f->one();
        c[9] = f->one();
        auto roots = univariate_roots(UniPoly(f, c));
        REQUIRE(roots.size() == 9);
        std::set<std::uint32_t> got;
        for (const auto& z : roots) got.insert(z.packed());
        CHECK(got.size() == 9);
    }
    SUBCASE("x^3 - 8 over GF(13) has roots {2, 6, 5}") {
        auto f = FieldSpec::make(13);
        UniPoly p(f, {-f->from_packed(8), f->zero(), f->zero(), f->one()});
        auto roots = univariate_roots(p);
        std::multiset<std::uint32_t> got;
        for (const auto& z : roots) got.insert(z.packed());
        CHECK(got == std::multiset<std::uint32_t>{2, 5, 6});
    }
    SUBCASE("zero polynomial rejected") {
        auto f = FieldSpec::make(13);
        CHECK_THROWS_AS(univariate_roots(UniPoly(f)), InvalidArgument);
    }
}

TEST_CASE("field properties") {
    std::mt19937_64 rng(42);
    for (auto q : {8u, 9u, 13u, 25u, 27u}) {
        auto f = FieldSpec::make(q);
        auto elems = enumerate_field(f);
        CAPTURE(q);

        SUBCASE("inverses and power laws") {
            for (std::size_t i = 1; i < elems.size(); ++i) {
                CHECK(elems[i] * elems[i].inv() == f->one());
            }
            for (int t = 0; t < 50; ++t) {
                auto a = elems[1 + rng() % (q - 1)];
                long long i = static_cast<long long>(rng() % (2 * (q - 1) + 1));
                long long j = static_cast<long long>(rng() % (2 * (q - 1) + 1));
                CHECK(a.pow(i) * a.pow(j) == a.pow(i + j));
            }
        }
        SUBCASE("Frobenius additivity over >= 100 pairs") {
            for (int t = 0; t < 100; ++t) {
                auto a = elems[rng() % q];
                auto b = elems[rng() % q];
                CHECK((a + b).pow(f->p()) == a.pow(f->p()) + b.pow(f->p()));
            }
        }
        SUBCASE("primitive element has order exactly q-1") {
            auto xi = f->primitive();
            CHECK(xi.pow(q - 1) == f->one());
            for (std::uint32_t d = 1; d < q - 1; ++d)
                if ((q - 1) % d == 0) CHECK(xi.pow(d) != f->one());
        }
    }
}

TEST_CASE("built-in modulus table constructs all paper fields") {
    for (auto q : {3u, 4u, 7u, 8u, 9u, 13u, 16u, 25u, 27u, 32u, 49u, 64u, 81u, 125u}) {
        auto f = FieldSpec::make(q);  // construction validates irreducibility and order
        CHECK(f->q() == q);
        CHECK(enumerate_field(f).size() == q);
    }
}

TEST_CASE("negative powers invert first") {
    auto f = FieldSpec::make(13);
    auto a = f->from_packed(5);
    CHECK(a.pow(-1) == a.inv());
    CHECK(a.pow(-3) == a.inv().pow(3));
    CHECK(f->zero().pow(0) == f->one());
    CHECK_THROWS_AS(f->zero().pow(-1), DivisionByZero);
}

TEST_CASE("errors: division by zero and mismatched fields") {
    auto f9a = FieldSpec::make(9);
    auto f9b = FieldSpec::make(3, 2, {2, 2, 1});  // different modulus, different spec
    CHECK_THROWS_AS(f9a->one() / f9a->zero(), DivisionByZero);
    CHECK_THROWS_AS(f9a->zero().inv(), DivisionByZero);
    CHECK_THROWS_AS(f9a->one() + f9b->one(), FieldMismatch);
    auto f8 = FieldSpec::make(8);
    CHECK_THROWS_AS(f9a->one() * f8->one(), FieldMismatch);
}

TEST_CASE("element index round-trip") {
    for (auto q : {7u, 9u, 16u}) {
        auto f = FieldSpec::make(q);
        for (const auto& a : enumerate_field(f)) CHECK(f->from_index(a.index()) == a);
        CHECK(f->zero().index() == 0);
        CHECK(f->primitive().index() == 2);  // 0 -> 0, 1 -> xi^0, 2 -> xi^1
    }
}

TEST_CASE("user-supplied modulus is checked for irreducibility") {
    // x^2 + 1 is reducible over GF(5) since 2^2 = -1
    CHECK_THROWS_AS(FieldSpec::make(5, 2, {1, 0, 1}), InvalidArgument);
    CHECK_THROWS_AS(FieldSpec::make(4, 1, {}), InvalidArgument);  // 4 not prime
}
