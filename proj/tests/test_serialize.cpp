#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stab/serialize.hpp"

#include <random>

using namespace stab;

namespace {

std::mt19937_64 rng(140001);

Rat rrat(int lo, int hi, int den) {
    std::uniform_int_distribution<int> nd(lo, hi);
    std::uniform_int_distribution<int> dd(1, den);
    return Rat(nd(rng), dd(rng));
}

LiftedGL rlifted() {
    std::uniform_int_distribution<long long> sd(-3, 3);
    for (;;) {
        Mat2 m{rrat(-5, 5, 4), rrat(-5, 5, 4), rrat(-5, 5, 4), rrat(-5, 5, 4)};
        if (m.det() > 0) return LiftedGL::make(m, sd(rng));
    }
}

}  // namespace

TEST_CASE("rationals as p/q strings") {
    CHECK(rat_json(Rat(-1, 2)) == Json("-1/2"));
    CHECK(rat_json(Rat(7)) == Json("7"));
    CHECK(rat_from_json(Json("3/9")) == Rat(1, 3));
    CHECK(rat_from_json(Json(5)) == Rat(5));
    CHECK_THROWS_AS(rat_from_json(Json("1.5")), DomainError);
    CHECK_THROWS_AS(rat_from_json(Json("2/0")), DomainError);
    CHECK_THROWS_AS(rat_from_json(Json::array()), DomainError);
    CHECK_THROWS_AS(rat_parse("1//2"), DomainError);
    CHECK_THROWS_AS(rat_parse(" 1"), DomainError);
    CHECK(rat_parse("-12/30") == Rat(-2, 5));
}

TEST_CASE("gauss_str rendering") {
    CHECK(gauss_str(GaussQ{Rat(-1), Rat(0)}) == "-1");
    CHECK(gauss_str(GaussQ{Rat(0), Rat(1)}) == "i");
    CHECK(gauss_str(GaussQ{Rat(0), Rat(-1)}) == "-i");
    CHECK(gauss_str(GaussQ{Rat(1, 4), Rat(-1, 2)}) == "1/4 - 1/2 i");
    CHECK(gauss_str(GaussQ{Rat(3, 2), Rat(2)}) == "3/2 + 2 i");
    CHECK(gauss_str(GaussQ{Rat(0), Rat(0)}) == "0");
}

TEST_CASE("descriptor schema round trip") {
    for (int i = 0; i < 50; ++i) {
        StabilityDescriptor g = GluedDescriptor{rlifted(), rlifted()};
        Json jg = descriptor_json(g);
        CHECK(jg["type"] == "glued");
        CHECK(jg["A1"].contains("M"));
        CHECK(jg["A1"].contains("n"));
        CHECK(std::get<GluedDescriptor>(descriptor_from_json(jg)) == std::get<GluedDescriptor>(g));

        DivisorialDescriptor d{{rrat(-5, 5, 4), rrat(-5, 5, 4)}, {rrat(1, 5, 4), rrat(1, 5, 4)}, rlifted()};
        Json jd = descriptor_json(StabilityDescriptor{d});
        CHECK(jd["type"] == "divisorial");
        auto back = std::get<DivisorialDescriptor>(descriptor_from_json(jd));
        CHECK(back.B == d.B);
        CHECK(back.omega == d.omega);
        CHECK(back.translate == d.translate);
    }
    // translate defaults to the identity when omitted
    Json minimal{{"type", "divisorial"}, {"B", Json::array({"0", "0"})}, {"omega", Json::array({"1", "1"})}};
    CHECK(std::get<DivisorialDescriptor>(descriptor_from_json(minimal)).translate.is_identity());
}

TEST_CASE("malformed descriptor JSON is rejected with a message") {
    CHECK_THROWS_AS(descriptor_from_json(Json{{"type", "sphere"}}), DomainError);
    CHECK_THROWS_AS(descriptor_from_json(Json{{"type", "glued"}, {"A1", Json{{"M", 3}, {"n", 0}}}}), DomainError);
    CHECK_THROWS_AS(descriptor_from_json(Json{{"type", "glued"}}), DomainError);
    Json bad_n{{"type", "glued"},
               {"A1", Json{{"M", mat2_json(Mat2::identity())}, {"n", "零"}}},
               {"A2", liftedgl_json(LiftedGL::identity())}};
    CHECK_THROWS_AS(descriptor_from_json(bad_n), DomainError);
    // det <= 0 rejected on load
    Json flip{{"type", "glued"},
              {"A1", Json{{"M", Json::array({Json::array({"1", "0"}), Json::array({"0", "-1"})})}, {"n", 0}}},
              {"A2", liftedgl_json(LiftedGL::identity())}};
    CHECK_THROWS_AS(descriptor_from_json(flip), DomainError);
}

TEST_CASE("value-type serializers") {
    CHECK(divisor_from_json(divisor_json(DivisorClass{Rat(-7, 3), Rat(2)})) == DivisorClass{Rat(-7, 3), Rat(2)});
    NumClass c{Rat(2), {Rat(-1), Rat(3)}, Rat(5, 2)};
    CHECK(numclass_from_json(numclass_json(c)) == c);
    ComplexClass z{GaussQ{Rat(1), Rat(2)}, GaussQ{Rat(-1, 3), Rat(0)}, GaussQ{Rat(0), Rat(5)}, GaussQ{Rat(0), Rat(-1)}};
    CHECK(complexclass_from_json(complexclass_json(z)) == z);
    Json pj = phasepoint_json(PhasePoint{Int(3), Int(4), -2});
    CHECK(pj["direction"][0] == "3");
    CHECK(pj["winding"] == -2);
    CHECK(pj["approx"].is_number());
}

TEST_CASE("verdict reports carry the contract fields") {
    SurfaceData S(2, 2);
    GluedDescriptor wall{LiftedGL::shift_one(), LiftedGL::identity()};

    Json sv = sky_verdict_json(classify_skyscraper(S, wall));
    CHECK(sv["verdict"] == "StrictlySemistableWall");
    CHECK(sv["moduli"] == "C");

    Json pv = perversity_json(perversity(wall));
    CHECK(pv["verdict"] == "EqualOne");
    CHECK(pv["is_stability"] == true);

    GluedDescriptor solvable{LiftedGL::make(Mat2{Rat(-1), Rat(-1), Rat(0), Rat(-1)}.inverse(), 0),
                             LiftedGL::identity()};
    Json bw = boundary_result_json(boundary_solve(S, solvable));
    CHECK(bw.contains("witness"));
    CHECK(bw["witness"]["M_inv"][0][0] == "2");
    CHECK(bw["witness"]["free_params"]["w"] == "1");

    GluedDescriptor refused{LiftedGL::make(Mat2{Rat(-1), Rat(0), Rat(0), Rat(-1)}.inverse(), 0),
                            LiftedGL::identity()};
    Json br = boundary_result_json(boundary_solve(S, refused));
    CHECK(br["refusal"]["certificate"] == "b != (1/2)*a*e");

    Json side = side_result_json(deform_side(S, solvable, pr1_glued(S, solvable)));
    CHECK(side["side"] == "OnWall");
}
