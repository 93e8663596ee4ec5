#include <doctest.h>

#include "lrc/serialize.hpp"

using namespace lrc;

TEST_CASE("field spec JSON round-trip") {
    auto f = FieldSpec::make(9);
    auto back = field_from_json(field_to_json(f));
    CHECK(back == f);  // registry canonicalizes identical specs
    CHECK(back->one() + f->one() == f->from_int(2));
}

TEST_CASE("polytope JSON round-trip") {
    auto p = weighted_polytope({3, 5}, 6, 1, 1);
    CHECK(polytope_from_json(polytope_to_json(p)) == p);
}

TEST_CASE("blueprint JSON round-trip preserves the code and fibres") {
    for (auto bp : {klein_blueprint(6), hermitian_blueprint(3, HermitianShape::rectangular, 2)}) {
        auto j = blueprint_to_json(bp);
        auto back = blueprint_from_json(j);
        CHECK(back.points.size() == bp.points.size());
        CHECK(back.locality == bp.locality);
        CHECK(back.mode == bp.mode);
        validate_blueprint(back);
        auto a = evaluation_matrix(bp);
        auto b = evaluation_matrix(back);
        REQUIRE(a.rows() == b.rows());
        REQUIRE(a.cols() == b.cols());
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c) CHECK(a.at(r, c) == b.at(r, c));
        // byte-identical re-serialization
        CHECK(blueprint_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("grid blueprint with availability structures round-trips") {
    auto f = FieldSpec::make(7);
    auto g = toric_grid(f, 2);
    auto shape = remove_points(simplex(2, 4), {{4, 0}, {0, 4}}).result;
    auto bp = grid_blueprint(g, shape, 0);
    auto back = blueprint_from_json(blueprint_to_json(bp));
    REQUIRE(back.availability.size() == bp.availability.size());
    CHECK(back.availability[0].r == bp.availability[0].r);
    CHECK(back.availability[0].fs.fibres.size() == bp.availability[0].fs.fibres.size());
    validate_blueprint(back);
}

TEST_CASE("erasable word JSON: erased positions are null, zero is a value") {
    auto f = FieldSpec::make(7);
    ErasableWord w;
    w.values = {f->zero(), f->from_packed(3), f->zero()};
    w.erased = {false, true, false};
    auto j = word_to_json(w);
    CHECK(j["values"][0] == 0);
    CHECK(j["values"][1].is_null());
    auto back = word_from_json(j, f);
    CHECK(back.erased == std::vector<bool>{false, true, false});
    CHECK(back.values[0] == f->zero());
}

TEST_CASE("analysis reports are byte-identical modulo timings") {
    auto bp = klein_blueprint(6);
    auto code = code_from_blueprint(bp);
    auto d = min_distance_bz(code, kDefaultBudget, *bp.distance_lb);
    auto b = bound_report(code, bp.locality, d.lo, bp.distance_lb);
    json cfg{{"target", "klein"}, {"l", 6}};
    auto r1 = analysis_report(bp, code, d, &b, cfg, 42, 0.123);
    auto r2 = analysis_report(bp, code, d, &b, cfg, 42, 9.876);
    r1.erase("timings");
    r2.erase("timings");
    CHECK(r1.dump() == r2.dump());
    CHECK(r1["seed"] == 42);
    CHECK(r1.contains("input_hash"));
}
