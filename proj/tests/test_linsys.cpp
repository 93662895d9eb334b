#include <catch_amalgamated.hpp>

#include "wlp/hilbert.hpp"
#include "wlp/linsys.hpp"

using namespace wlp;

static FatPointSystem sys(int r, long long j, std::vector<long long> m) {
    return FatPointSystem(r, j, std::move(m));
}

TEST_CASE("fat point systems normalize their multiplicities") {
    const FatPointSystem s(2, 7, {1, 4, 0, 3, -2, 4});
    REQUIRE(s.mults == std::vector<long long>{4, 4, 3, 1});
    REQUIRE(s.mult(0) == 4);
    REQUIRE(s.mult(9) == 0);
    REQUIRE_THROWS_AS(FatPointSystem(-1, 3, {}), std::invalid_argument);
}

TEST_CASE("expected dimension") {
    REQUIRE(expected_dimension(sys(2, 4, {2, 2, 2, 2, 2})) == 0);
    REQUIRE(expected_dimension(sys(3, 3, {1, 1, 1, 1, 1, 1})) == 14);
    REQUIRE(expected_dimension(sys(2, -2, {})) == 0);
    REQUIRE(expected_dimension(sys(2, 3, {})) == 10);
}

TEST_CASE("standard form criterion") {
    REQUIRE_FALSE(is_standard_form(sys(3, 9, {5, 5, 5, 5, 5, 5})));
    REQUIRE(is_standard_form(sys(3, 3, {1, 1, 1, 1, 1, 1})));
    REQUIRE(is_standard_form(sys(5, 2, {1, 1, 1, 1, 1, 1, 1, 1})));
    REQUIRE_FALSE(is_standard_form(sys(2, -1, {})));
    REQUIRE_THROWS_AS(is_standard_form(sys(1, 3, {1})), std::invalid_argument);
}

TEST_CASE("one Cremona step") {
    const CremonaStep st = cremona_transform(sys(3, 9, {5, 5, 5, 5, 5, 5}));
    REQUIRE(st.shift == -2);
    REQUIRE(st.after == sys(3, 7, {5, 5, 3, 3, 3, 3}));

    // a touched multiplicity would drop below zero
    REQUIRE_THROWS_AS(cremona_transform(sys(3, 17, {14, 11, 10, 7, 7, 4})), precondition_error);
    REQUIRE_THROWS_AS(cremona_transform(sys(3, -1, {1, 1, 1, 1})), not_applicable);
}

TEST_CASE("cone reduction strips a full point") {
    const FatPointSystem s = sys(4, 4, {4, 4, 2, 2, 2, 2, 2});
    const FatPointSystem r = cone_reduction(s);
    REQUIRE(r == sys(3, 4, {4, 2, 2, 2, 2, 2}));
    REQUIRE(cone_reduction(r) == sys(2, 4, {2, 2, 2, 2, 2}));
    REQUIRE_THROWS_AS(cone_reduction(sys(3, 5, {3, 3})), not_applicable);
}

TEST_CASE("six points in space, standard form") {
    REQUIRE(dim_dl_p3(sys(3, 3, {1, 1, 1, 1, 1, 1})) == 14);
    REQUIRE(dim_dl_p3(sys(3, 6, {3, 3, 3, 3, 2, 2})) == 36);
    REQUIRE(dim_dl_p3(sys(3, 4, {3, 2, 1, 1})) == 19);
    REQUIRE_THROWS_AS(dim_dl_p3(sys(3, 9, {5, 5, 5, 5, 5, 5})), not_standard_form);
    REQUIRE_THROWS_AS(dim_dl_p3(sys(3, 9, {2, 2, 2, 2, 2, 2, 2})), too_many_points);
}

TEST_CASE("six points in the plane") {
    REQUIRE(dim_p2_nef(sys(2, 6, {3, 3, 3, 2, 1})) == 6);
    REQUIRE(dim_p2_nef(sys(2, 6, {2, 2, 2})) == 19);
    // two double points in degree 2: hypotheses require j >= m5 + m6
    REQUIRE_THROWS_AS(dim_p2_nef(sys(2, 2, {2, 2})), hypotheses_fail);
    REQUIRE_THROWS_AS(dim_p2_nef(sys(2, 13, {9, 7, 6, 4, 4})), hypotheses_fail);
}

TEST_CASE("base locus peeling in the plane") {
    const PeelResult pr = peel_base_locus_p2(sys(2, 13, {9, 7, 6, 4, 4}));
    REQUIRE(pr.steps.size() == 3);
    REQUIRE(pr.steps[0].kind == PeelStep::Kind::Conic5);
    REQUIRE(pr.steps[0].multiplicity_removed == 4);
    REQUIRE(pr.steps[0].after == sys(2, 5, {5, 3, 2}));
    REQUIRE(pr.steps[1].kind == PeelStep::Kind::Line2);
    REQUIRE(pr.steps[1].after == sys(2, 2, {2, 2}));
    REQUIRE(pr.steps[2].kind == PeelStep::Kind::Line2);
    REQUIRE(pr.residual == sys(2, 0, {}));

    // the residual keeps its excess point: L_2(5; 3,3) fixes at L_2(4; 2,2)
    const PeelResult fx = peel_base_locus_p2(sys(2, 5, {3, 3}));
    REQUIRE(fx.residual == sys(2, 4, {2, 2}));
}

TEST_CASE("powers reduce to fat points one dimension down") {
    const ExponentConfig c(4, {5, 7, 8, 10, 10});
    REQUIRE(reduce_to_fat_points(c, 13) == sys(2, 13, {9, 7, 6, 4, 4}));
    // exponents above j+1 impose nothing
    REQUIRE(reduce_to_fat_points(c, 4) == sys(2, 4, {}));
    const ExponentConfig u(7, std::vector<long long>(8, 4));
    REQUIRE(reduce_to_fat_points(u, 10) == sys(5, 10, std::vector<long long>(8, 7)));
    REQUIRE_THROWS_AS(reduce_to_fat_points(ExponentConfig(1, {2, 2}), 3), std::invalid_argument);
}

TEST_CASE("dispatcher resolves the catalog of chains") {
    struct Pin {
        FatPointSystem start;
        long long dim;
        std::string method;
    };
    const Pin pins[] = {
        {sys(3, 9, {5, 5, 5, 5, 5, 5}), 14, "dl-p3"},
        {sys(3, 7, {4, 4, 4, 4, 4, 4}), 4, "no-conditions"},
        {sys(4, 6, {4, 4, 4, 4, 4, 4, 4}), 1, "no-conditions"},
        {sys(2, 13, {9, 7, 6, 4, 4}), 1, "no-conditions"},
        {sys(2, 4, {2, 2, 2, 2, 2}), 1, "no-conditions"},
        {sys(2, 5, {3, 3}), 9, "nef-p2"},
        {sys(2, 6, {3, 3, 3, 2, 1}), 6, "nef-p2"},
        {sys(3, 6, {3, 3, 3, 3, 2, 2}), 36, "dl-p3"},
        {sys(2, -4, {2}), 0, "empty-negative-degree"},
        {sys(2, 3, {5, 1}), 0, "empty-multiplicity-exceeds-degree"},
        {sys(5, 1, {}), 6, "no-conditions"},
        {sys(0, 3, {}), 1, "point"},
        {sys(1, 5, {3, 2}), 1, "points-on-line"},
        {sys(1, 5, {4, 4}), 0, "points-on-line"},
    };
    for (const Pin& p : pins) {
        const LinSysResult res = dim_linear_system(p.start);
        INFO("degree " << p.start.degree << " method " << res.method);
        REQUIRE(res.dimension.has_value());
        REQUIRE(*res.dimension == p.dim);
        REQUIRE(res.method == p.method);
    }
}

TEST_CASE("dispatcher leaves blocked systems unresolved") {
    const LinSysResult res = dim_linear_system(sys(3, 17, {14, 11, 10, 7, 7, 4}));
    REQUIRE_FALSE(res.dimension.has_value());
    REQUIRE(res.method == "unknown-cremona-blocked");
    REQUIRE(res.terminal == sys(3, 17, {14, 11, 10, 7, 7, 4}));
}

TEST_CASE("dispatcher traces are faithful") {
    const LinSysResult res = dim_linear_system(sys(4, 6, {4, 4, 4, 4, 4, 4, 4}));
    REQUIRE(res.dimension == Integer(1));
    size_t cremonas = 0, cones = 0;
    for (const ReductionStep& st : res.trace) {
        if (std::holds_alternative<CremonaStep>(st)) ++cremonas;
        if (const PeelStep* p = std::get_if<PeelStep>(&st))
            if (p->kind == PeelStep::Kind::ConePoint) ++cones;
    }
    REQUIRE(cremonas == 1);
    REQUIRE(cones == 2);
    // each step's after feeds the next step's before
    const auto before_of = [](const ReductionStep& st) {
        if (const CremonaStep* c = std::get_if<CremonaStep>(&st)) return c->before;
        return std::get<PeelStep>(st).before;
    };
    const auto after_of = [](const ReductionStep& st) {
        if (const CremonaStep* c = std::get_if<CremonaStep>(&st)) return c->after;
        return std::get<PeelStep>(st).after;
    };
    for (size_t i = 0; i + 1 < res.trace.size(); ++i)
        REQUIRE(after_of(res.trace[i]) == before_of(res.trace[i + 1]));
}

TEST_CASE("long uniform chain ends in the five case systems") {
    // d = 5: L_5(13; 9^8) -> four Cremona steps of shift -2 -> L_5(5; 3^8)
    FatPointSystem s = sys(5, 13, std::vector<long long>(8, 9));
    for (int i = 0; i < 4; ++i) s = cremona_transform(s).after;
    REQUIRE(s == sys(5, 5, std::vector<long long>(8, 3)));
    REQUIRE(is_standard_form(s));
}
