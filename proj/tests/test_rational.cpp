#include <doctest.h>

#include <set>

#include "lrc/analysis.hpp"
#include "lrc/rational.hpp"

using namespace lrc;

namespace {

// Example data: phi_1 = x/y, phi_2 = (y-1)/z over GF(3), A = {yz != 0},
// P the nine listed points, V_1 and V_2 the two displayed spaces.
struct Ex23 {
    FieldPtr f = FieldSpec::make(3);
    RationalFunction phi1{MultiPoly::var_power(f, 3, 0, 1), MultiPoly::var_power(f, 3, 1, 1)};
    RationalFunction phi2{MultiPoly::var_power(f, 3, 1, 1) -
                              MultiPoly::constant(f, 3, f->one()),
                          MultiPoly::var_power(f, 3, 2, 1)};
    std::vector<Point> all27;
    std::vector<Point> P;

    Ex23() {
        for (const auto& x : enumerate_field(f))
            for (const auto& y : enumerate_field(f))
                for (const auto& z : enumerate_field(f)) all27.push_back(Point{x, y, z});
        for (auto [x, y, z] : std::vector<std::array<int, 3>>{{0, 1, 2},
                                                              {0, 2, 1},
                                                              {0, 2, 2},
                                                              {1, 1, 2},
                                                              {2, 2, 1},
                                                              {2, 2, 2},
                                                              {1, 2, 1},
                                                              {1, 2, 2},
                                                              {2, 1, 2}})
            P.push_back(Point{f->from_packed(x), f->from_packed(y), f->from_packed(z)});
    }

    CodeBlueprint blueprint(int which) const {
        CodeBlueprint bp;
        bp.field = f;
        bp.name = which == 1 ? "example-2.3-V1" : "example-2.3-V2";
        bp.points = P;
        bp.map = {phi1};
        bp.phi_last = phi2;
        bp.fibres = make_fibres(bp.map, bp.phi_last, bp.points);
        bp.locality = locality_of(bp.fibres, 1);
        bp.capability = 1;
        bp.mode = RecoveryMode::interpolation;
        // V1 = <1, phi1> + <1> phi2 ; V2 = <1, phi1, phi1^2> + <1, phi1> phi2
        std::vector<std::vector<MultiPoly>> comps;
        if (which == 1) {
            comps = {{MultiPoly::constant(f, 1, f->one()), MultiPoly::var_power(f, 1, 0, 1)},
                     {MultiPoly::constant(f, 1, f->one())}};
        } else {
            comps = {{MultiPoly::constant(f, 1, f->one()), MultiPoly::var_power(f, 1, 0, 1),
                      MultiPoly::var_power(f, 1, 0, 2)},
                     {MultiPoly::constant(f, 1, f->one()), MultiPoly::var_power(f, 1, 0, 1)}};
        }
        bp.basis = assemble_space(comps);
        return bp;
    }
};

}  // namespace

TEST_CASE("domain_filter") {
    Ex23 ex;
    SUBCASE("keeps exactly the pole-free points (yz != 0)") {
        auto dom = domain_filter({ex.phi1, ex.phi2}, ex.all27);
        CHECK(dom.size() == 12);  // 3 choices of x, 2 of y, 2 of z
        for (const auto& p : dom) {
            CHECK(!p[1].is_zero());
            CHECK(!p[2].is_zero());
        }
    }
    SUBCASE("polynomial functions filter nothing") {
        RationalFunction poly(MultiPoly::var_power(ex.f, 3, 0, 2));
        CHECK(domain_filter({poly}, ex.all27).size() == 27);
    }
    SUBCASE("empty candidates stay empty") {
        CHECK(domain_filter({ex.phi1}, {}).empty());
    }
}

TEST_CASE("fibres of Example 2.3") {
    Ex23 ex;
    auto dom = domain_filter({ex.phi1, ex.phi2}, ex.all27);
    auto fs = make_fibres({ex.phi1}, ex.phi2, dom);
    REQUIRE(fs.fibres.size() == 3);
    // the paper's fibre of 0 under phi_1
    std::set<std::vector<std::uint32_t>> fibre0;
    for (const auto& fib : fs.fibres) {
        if (!fib.base[0].is_zero()) continue;
        for (auto i : fib.members)
            fibre0.insert({dom[i][0].packed(), dom[i][1].packed(), dom[i][2].packed()});
    }
    CHECK(fibre0 == std::set<std::vector<std::uint32_t>>{
                        {0, 1, 1}, {0, 1, 2}, {0, 2, 1}, {0, 2, 2}});

    // after restricting to the paper's P: sizes 3,3,3 with distinct nodes
    auto fsP = make_fibres({ex.phi1}, ex.phi2, ex.P);
    REQUIRE(fsP.fibres.size() == 3);
    for (const auto& fib : fsP.fibres) {
        CHECK(fib.members.size() == 3);
        CHECK(fib.distinct_nodes == 3);
    }
    CHECK(locality_of(fsP, 1) == 2);
}

TEST_CASE("fibre partition invariant") {
    Ex23 ex;
    auto fs = make_fibres({ex.phi1}, ex.phi2, ex.P);
    fs.check_partition(ex.P.size());  // throws on violation
    CHECK(fs.nodes.size() == ex.P.size());
}

TEST_CASE("identity projection gives singleton fibres and no locality") {
    auto f = FieldSpec::make(5);
    std::vector<Point> pts;
    for (const auto& x : enumerate_field(f)) pts.push_back(Point{x});
    RationalFunction id(MultiPoly::var_power(f, 1, 0, 1));
    auto fs = make_fibres({id}, id, pts);
    CHECK(fs.fibres.size() == pts.size());
    CHECK_THROWS_AS(locality_of(fs, 1), InvalidArgument);
}

TEST_CASE("pole inside fibre construction is reported") {
    Ex23 ex;
    CHECK_THROWS_AS(make_fibres({ex.phi1}, ex.phi2, ex.all27), PoleError);
}

TEST_CASE("automatic pruning keeps the enumeration-order-first point per node") {
    Ex23 ex;
    auto dom = domain_filter({ex.phi1, ex.phi2}, ex.all27);
    auto pruned = prune_to_distinct_nodes({ex.phi1}, ex.phi2, dom);
    CHECK(pruned.size() == 9);
    auto fs = make_fibres({ex.phi1}, ex.phi2, pruned);
    for (const auto& fib : fs.fibres) CHECK(fib.distinct_nodes == fib.members.size());
    // keep-first: the fibre of 0 retains (0,1,1), not the paper's (0,1,2)
    bool has011 = false;
    for (const auto& p : pruned)
        if (p[0].packed() == 0 && p[1].packed() == 1 && p[2].packed() == 1) has011 = true;
    CHECK(has011);
}

TEST_CASE("assemble_space sizes and tags") {
    Ex23 ex;
    auto bp1 = ex.blueprint(1);
    CHECK(bp1.basis.size() == 3);
    auto bp2 = ex.blueprint(2);
    CHECK(bp2.basis.size() == 5);
    CHECK(bp2.basis[0].power == 0);
    CHECK(bp2.basis.back().power == 1);

    std::vector<std::vector<MultiPoly>> single{{MultiPoly::constant(ex.f, 1, ex.f->one())}};
    CHECK(assemble_space(single).size() == 1);
}

TEST_CASE("Example 2.3 codes: ([9,3,6],2) and ([9,5,3],2)") {
    Ex23 ex;
    for (int which : {1, 2}) {
        auto bp = ex.blueprint(which);
        validate_blueprint(bp);
        auto code = code_from_blueprint(bp);
        CHECK(code.n == 9);
        CHECK(code.k == (which == 1 ? 3 : 5));
        CHECK(code.injective());
        auto d = min_distance_exhaustive(code);
        CHECK(d.exact);
        CHECK(d.lo == (which == 1 ? 6 : 3));
        auto b = bound_report(code, bp.locality, d.lo);
        CHECK(b.classification == OptClass::optimal);
    }
}

TEST_CASE("Example 2.3 fibre sums vanish (checksum also valid)") {
    Ex23 ex;
    for (int which : {1, 2}) {
        auto bp = ex.blueprint(which);
        for (std::size_t b = 0; b < bp.basis.size(); ++b) {
            for (const auto& fib : bp.fibres.fibres) {
                FieldElement s = ex.f->zero();
                for (auto i : fib.members) s += bp.evaluate_basis(b, i);
                CHECK(s.is_zero());
            }
        }
    }
}

TEST_CASE("repetition blueprint: basis {1} gives [n, 1, n]") {
    Ex23 ex;
    auto bp = ex.blueprint(1);
    bp.basis = {BasisFunction{MultiPoly::constant(ex.f, 1, ex.f->one()), 0}};
    auto code = code_from_blueprint(bp);
    CHECK(code.k == 1);
    auto d = min_distance_exhaustive(code);
    CHECK(d.lo == code.n);
}

TEST_CASE("basis functions restrict to low-degree polynomials on fibres") {
    Ex23 ex;
    auto bp = ex.blueprint(2);
    validate_blueprint(bp);  // includes the interpolation restriction check

    // break it: a phi_last power beyond r-1 must be rejected
    auto bad = ex.blueprint(2);
    bad.basis.push_back(BasisFunction{MultiPoly::constant(ex.f, 1, ex.f->one()), 2});
    CHECK_THROWS_AS(validate_blueprint(bad), Error);
}

TEST_CASE("Tamo-Barg LRC RS codes arise as the one-variable special case") {
    // phi(x) = x^3 over GF(13), constant on {1,3,9}, {2,6,5}, {4,10,12}
    auto f = FieldSpec::make(13);
    RationalFunction phi(MultiPoly::var_power(f, 1, 0, 3));
    RationalFunction x(MultiPoly::var_power(f, 1, 0, 1));
    std::vector<Point> P;
    for (std::uint32_t v : {1, 3, 9, 2, 6, 5, 4, 10, 12}) P.push_back(Point{f->from_packed(v)});

    CodeBlueprint bp;
    bp.field = f;
    bp.name = "tamo-barg-k4";
    bp.points = P;
    bp.map = {phi};
    bp.phi_last = x;
    bp.fibres = make_fibres(bp.map, bp.phi_last, bp.points);
    CHECK(bp.fibres.fibres.size() == 3);
    bp.locality = locality_of(bp.fibres, 1);
    CHECK(bp.locality == 2);
    bp.capability = 1;
    bp.mode = RecoveryMode::interpolation;
    // k = 4: V = <1, phi> + <1, phi> x
    std::vector<std::vector<MultiPoly>> comps{
        {MultiPoly::constant(f, 1, f->one()), MultiPoly::var_power(f, 1, 0, 1)},
        {MultiPoly::constant(f, 1, f->one()), MultiPoly::var_power(f, 1, 0, 1)}};
    bp.basis = assemble_space(comps);
    validate_blueprint(bp);
    auto code = code_from_blueprint(bp);
    CHECK(code.n == 9);
    CHECK(code.k == 4);
    auto d = min_distance_exhaustive(code);
    CHECK(d.lo == 5);
    CHECK(bound_report(code, 2, d.lo).classification == OptClass::optimal);
}
