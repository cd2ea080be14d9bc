#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stab/walls.hpp"

#include <optional>
#include <random>

using namespace stab;

namespace {

std::mt19937_64 rng(31999);

Rat rrat(int lo, int hi, int den) {
    std::uniform_int_distribution<int> nd(lo, hi);
    std::uniform_int_distribution<int> dd(1, den);
    return Rat(nd(rng), dd(rng));
}

LiftedGL rlifted() {
    std::uniform_int_distribution<long long> sd(-2, 2);
    for (;;) {
        Mat2 m{rrat(-4, 4, 3), rrat(-4, 4, 3), rrat(-4, 4, 3), rrat(-4, 4, 3)};
        if (m.det() > 0) return LiftedGL::make(m, sd(rng));
    }
}

LiftedGL per_one(const Rat& a, const Rat& b, const Rat& d) {
    Mat2 Mi{a, b, Rat(0), d};
    return LiftedGL::make(Mi.inverse(), 0);
}

GluedDescriptor wall_descriptor(long long e, const Rat& a, const Rat& b) {
    return {per_one(a, b, a), LiftedGL::identity()};
}

// Test-side oracle: forward triangular solve of the 8 real equations
// M^{-1} exp(B + i*omega) = pr1(Z_gl), with (w, y) fixed, eliminating the
// unknowns one equation at a time and checking the leftover s-component
// consistency. Independent of the library's closed-form shortcut.
struct OracleOut {
    bool consistent;
    Mat2 M_inv;
    DivisorClass B, omega;
};

std::optional<OracleOut> oracle_solve(const SurfaceData& S, const GluedDescriptor& gd, const Rat& w, const Rat& y) {
    Mat2 Mi = gd.A1.M.inverse();
    const Rat a = Mi.a, b = Mi.b;
    ComplexClass target = pr1_glued(S, gd);

    Rat alpha = target.r.re;              // rank equation, real part
    Rat gamma = target.r.im;              // rank equation, imaginary part
    if (gamma != 0) return std::nullopt;  // oracle only covers the c = 0 stratum
    Rat delta = (target.c1_f.im - gamma * y) / w;  // f-component, imaginary part
    if (delta == 0 || alpha == 0) return std::nullopt;
    Rat z(0);                                // C0 imag: gamma*x + delta*z = 0 with gamma = 0
    Rat x = target.c1_c0.re / alpha;         // C0 real: alpha*x + beta*z = -1 with z = 0
    Rat beta = (target.c1_f.re - alpha * y) / w;  // f-component, real part

    // leftover s-component checks
    Rat I0 = Rat(S.e) / 2 * x * x + x * y;  // (x^2 - z^2) e / 2 + (xy - zw), z = 0
    Rat J0 = x * w;                          // x z e + (y z + x w), z = 0
    bool ok = (alpha * I0 + beta * J0 == target.s.re) && (gamma * I0 + delta * J0 == target.s.im);
    (void)a;
    (void)b;
    if (!ok) return std::nullopt;
    return OracleOut{true, Mat2{alpha, beta, gamma, delta}, DivisorClass{x, y}, DivisorClass{z, w}};
}

const PhasePoint one{Int(1), Int(0), 1};

}  // namespace

TEST_CASE("classify_skyscraper across the three strata") {
    SurfaceData S(2, 2);

    SkyscraperVerdict geom = classify_skyscraper(S, DivisorialDescriptor{{}, {Rat(1), Rat(1)}});
    CHECK(geom.kind == SkyVerdictKind::StableGeometric);
    CHECK(geom.moduli_label == "S");
    CHECK_FALSE(geom.destabilizer.has_value());

    GluedDescriptor wall{LiftedGL::shift_one(), LiftedGL::identity()};
    SkyscraperVerdict on_wall = classify_skyscraper(S, wall);
    CHECK(on_wall.kind == SkyVerdictKind::StrictlySemistableWall);
    CHECK(on_wall.moduli_label == "C");

    GluedDescriptor above{compose(LiftedGL::shift_one(), LiftedGL::shift_one()), LiftedGL::identity()};
    SkyscraperVerdict unstable = classify_skyscraper(S, above);
    CHECK(unstable.kind == SkyVerdictKind::UnstableGluingSide);
    CHECK(unstable.moduli_label == "empty");
    REQUIRE(unstable.destabilizer.has_value());
    CHECK(print_object(*unstable.destabilizer) == "O_f");

    GluedDescriptor below{LiftedGL::identity(), LiftedGL::identity()};
    CHECK_THROWS_AS(classify_skyscraper(S, StabilityDescriptor{below}), DomainError);
    CHECK_THROWS_AS(classify_skyscraper(S, DivisorialDescriptor{{}, {Rat(0), Rat(1)}}), DomainError);
}

TEST_CASE("classify_skyscraper is act-invariant") {
    SurfaceData S(1, -2);
    for (int i = 0; i < 50; ++i) {
        GluedDescriptor wall = wall_descriptor(S.e, rrat(-9, -1, 3), rrat(-9, 9, 3));
        SkyscraperVerdict before = classify_skyscraper(S, wall);
        SkyscraperVerdict after = classify_skyscraper(S, act(wall, rlifted()));
        CHECK(before.kind == after.kind);
        CHECK(before.moduli_label == after.moduli_label);
    }
}

TEST_CASE("boundary_solve: worked example e=2, a=-1, b=-1") {
    SurfaceData S(2, 2);
    BoundaryResult res = boundary_solve(S, wall_descriptor(2, Rat(-1), Rat(-1)));
    const auto* w = std::get_if<BoundaryWitness>(&res);
    REQUIRE(w);
    CHECK(w->M_inv == Mat2{Rat(2), Rat(1), Rat(0), Rat(2)});
    CHECK(w->B == DivisorClass{Rat(-1, 2), Rat(0)});
    CHECK(w->omega == DivisorClass{Rat(0), Rat(1)});
    CHECK(w->M_inv.det() > 0);
    CHECK(S.intersect(w->omega, w->omega) == 0);  // boundary-degenerate
    CHECK(S.intersect(w->omega, DivisorClass{Rat(1), Rat(0)}) == 1);
}

TEST_CASE("boundary_solve: pure shift sits on the boundary exactly when e = 0") {
    SurfaceData S0(2, 0);
    BoundaryResult ok = boundary_solve(S0, wall_descriptor(0, Rat(-1), Rat(0)));
    CHECK(std::holds_alternative<BoundaryWitness>(ok));

    SurfaceData S2(2, 2);
    BoundaryResult bad = boundary_solve(S2, wall_descriptor(2, Rat(-1), Rat(0)));
    const auto* ref = std::get_if<BoundaryRefusal>(&bad);
    REQUIRE(ref);
    CHECK(ref->certificate == BoundaryCertificate::BNeqHalfAE);
    CHECK(certificate_name(ref->certificate) == "b != (1/2)*a*e");
    CHECK(ref->b == 0);
    CHECK(ref->half_ae == -1);
}

TEST_CASE("boundary_solve: named precondition violations") {
    SurfaceData S(2, 2);

    GluedDescriptor not_norm{LiftedGL::shift_one(), LiftedGL::shift_one()};
    CHECK_THROWS_WITH_AS(boundary_solve(S, not_norm),
                         doctest::Contains("normalized"), DomainError);

    GluedDescriptor per0{LiftedGL::identity(), LiftedGL::identity()};
    CHECK_THROWS_WITH_AS(boundary_solve(S, per0), doctest::Contains("per != 1"), DomainError);

    // incoherent perversity-1 pair with a > 0 (positive axis direction, odd shift)
    Mat2 pos{Rat(2), Rat(1), Rat(0), Rat(2)};
    LiftedGL A1_pos = LiftedGL::make(pos.inverse(), 1);
    GluedDescriptor bad_a{A1_pos, LiftedGL::identity()};
    REQUIRE(perversity(bad_a).tag == PerTag::EqualOne);
    CHECK_THROWS_WITH_AS(boundary_solve(S, bad_a), doctest::Contains("a >= 0"), DomainError);

    GluedDescriptor bad_d{per_one(Rat(-1), Rat(1), Rat(-2)), LiftedGL::identity()};
    REQUIRE(perversity(bad_d).tag == PerTag::EqualOne);
    CHECK_THROWS_WITH_AS(boundary_solve(S, bad_d), doctest::Contains("a != d"), DomainError);

    GluedDescriptor fine = wall_descriptor(2, Rat(-1), Rat(-1));
    CHECK_THROWS_WITH_AS(boundary_solve_params(S, fine, Rat(0), Rat(0)),
                         doctest::Contains("w > 0"), DomainError);
    CHECK_THROWS_WITH_AS(boundary_solve_params(S, fine, Rat(-2), Rat(0)),
                         doctest::Contains("w > 0"), DomainError);
}

TEST_CASE("boundary grid round-trip with refusal perturbations") {
    for (long long e = -3; e <= 3; ++e) {
        SurfaceData S(2, e);
        for (int an = -10; an <= -1; ++an) {
            Rat a(an, 2);
            Rat good = Rat(e, 2) * a;
            CHECK(std::holds_alternative<BoundaryWitness>(boundary_solve(S, wall_descriptor(e, a, good))));
            for (const Rat& off : {Rat(1), Rat(-1), Rat(1, 7), Rat(-1, 7)}) {
                BoundaryResult r = boundary_solve(S, wall_descriptor(e, a, good + off));
                const auto* ref = std::get_if<BoundaryRefusal>(&r);
                REQUIRE(ref);
                CHECK(ref->certificate == BoundaryCertificate::BNeqHalfAE);
            }
        }
    }
}

TEST_CASE("solution family and the independent elimination oracle") {
    for (int i = 0; i < 120; ++i) {
        long long e = i % 7 - 3;
        SurfaceData S(2, e);
        Rat a = rrat(-9, -1, 3);
        bool solvable = i % 2 == 0;
        Rat b = Rat(e, 2) * a + (solvable ? Rat(0) : Rat(i % 5 + 1, i % 3 + 1));
        GluedDescriptor gd = wall_descriptor(e, a, b);
        Rat w = rrat(1, 9, 4), y = rrat(-9, 9, 4);

        BoundaryResult lib = boundary_solve_params(S, gd, w, y);
        auto oracle = oracle_solve(S, gd, w, y);

        if (solvable) {
            const auto* wit = std::get_if<BoundaryWitness>(&lib);
            REQUIRE(wit);
            REQUIRE(oracle.has_value());
            CHECK(wit->M_inv == oracle->M_inv);
            CHECK(wit->B == oracle->B);
            CHECK(wit->omega == oracle->omega);
            // defining identity through public ops
            ComplexClass lhs = exp_divisor(S, wit->B, wit->omega);
            ComplexClass moved{wit->M_inv.apply(lhs.r), wit->M_inv.apply(lhs.c1_c0),
                               wit->M_inv.apply(lhs.c1_f), wit->M_inv.apply(lhs.s)};
            CHECK(moved == pr1_glued(S, gd));
            CHECK(wit->M_inv.det() > 0);
        } else {
            CHECK(std::holds_alternative<BoundaryRefusal>(lib));
            CHECK_FALSE(oracle.has_value());
        }
    }
}

TEST_CASE("deform_side: on the wall, geometric pull, gluing pull") {
    for (long long e : {0LL, 2LL}) {
        SurfaceData S(2, e);
        Rat a(-1);
        GluedDescriptor gd = wall_descriptor(e, a, Rat(e, 2) * a);
        ComplexClass Z = pr1_glued(S, gd);

        SideResult on_wall = deform_side(S, gd, Z);
        const auto* ow = std::get_if<SideVerdict>(&on_wall);
        REQUIRE(ow);
        CHECK(ow->side == Side::OnWall);
        CHECK(ow->psi_Of == one);
        CHECK(ow->psi_OfC0s1 == one);

        BoundaryResult bres = boundary_solve(S, gd);
        const auto& wit = std::get<BoundaryWitness>(bres);
        LiftedGL translate = LiftedGL::make(wit.M_inv.inverse(), 0);
        for (const Rat& t : {Rat(1, 10), Rat(1, 100)}) {
            DivisorClass omega_t{t, Rat(1)};  // omega = f + t*C0, honestly ample
            ComplexClass W = pr1_divisorial(S, DivisorialDescriptor{wit.B, omega_t, translate});
            SideResult r = deform_side(S, gd, W);
            const auto* v = std::get_if<SideVerdict>(&r);
            REQUIRE(v);
            CHECK(v->side == Side::GeometricSide);
            CHECK(v->psi_OfC0s1 > v->psi_Of);

            // reflecting the perturbation across the wall flips the verdict
            ComplexClass Wr = Z + (Z - W);
            SideResult rr = deform_side(S, gd, Wr);
            const auto* vr = std::get_if<SideVerdict>(&rr);
            REQUIRE(vr);
            CHECK(vr->side == Side::GluingSide);
        }

        for (const Rat& t : {Rat(1, 10), Rat(1, 100)}) {
            Mat2 rot{Rat(1), -t, t, Rat(1)};
            LiftedGL A1_rot = compose(gd.A1, LiftedGL::make(rot, 0));
            GluedDescriptor tilted{A1_rot, LiftedGL::identity()};
            CHECK(perversity(tilted).tag == PerTag::GreaterThanOne);
            ComplexClass W = pr1_glued(S, tilted);
            SideResult r = deform_side(S, gd, W);
            const auto* v = std::get_if<SideVerdict>(&r);
            REQUIRE(v);
            CHECK(v->side == Side::GluingSide);
            CHECK(v->psi_OfC0s1 < v->psi_Of);
        }
    }
}

TEST_CASE("deform_side: refusals and errors") {
    SurfaceData S(2, 2);
    GluedDescriptor gd = wall_descriptor(2, Rat(-1), Rat(-1));

    // negated wall charge: both phases land outside (1/2, 3/2)
    ComplexClass Z = pr1_glued(S, gd);
    ComplexClass negZ = ComplexClass{} - Z;
    SideResult far = deform_side(S, gd, negZ);
    const auto* ref = std::get_if<SideRefusal>(&far);
    REQUIRE(ref);
    CHECK(ref->certificate == "too far from sigma_gl");

    // W vanishing on O_f: its charge reads off the C0-coefficient
    ComplexClass Wzero = Z;
    Wzero.c1_c0 = GaussQ{Rat(0), Rat(0)};
    CHECK_THROWS_WITH_AS(deform_side(S, gd, Wzero), doctest::Contains("zero central charge"), DomainError);

    GluedDescriptor per0{LiftedGL::identity(), LiftedGL::identity()};
    CHECK_THROWS_AS(deform_side(S, per0, Z), DomainError);
    GluedDescriptor not_norm{LiftedGL::shift_one(), LiftedGL::shift_one()};
    CHECK_THROWS_AS(deform_side(S, not_norm, Z), DomainError);
}

TEST_CASE("neighborhood_check: examples and scale coherence") {
    SurfaceData S(2, 2);
    GluedDescriptor gd = wall_descriptor(2, Rat(-1), Rat(-1));
    ComplexClass Z = pr1_glued(S, gd);
    std::vector<NumClass> classes = {chern_of(S, parse_object("O_S")), chern_of(S, parse_object("O_x")),
                                     chern_of(S, parse_object("O_f")), chern_of(S, parse_object("O_f(-C0)[1]")),
                                     chern_of(S, parse_object("O_S(2*C0+3*f)"))};
    Rat s(1, 2);

    NeighborhoodReport same = neighborhood_check(S, Z, Z, s, classes);
    CHECK(same.all_pass);
    CHECK(same.max_ratio2 == 0);

    // W = (1 + s/2) Z: every ratio^2 is exactly s^2/4
    Rat lam = 1 + s / 2;
    ComplexClass Ws{lam * Z.r, lam * Z.c1_c0, lam * Z.c1_f, lam * Z.s};
    NeighborhoodReport scaled = neighborhood_check(S, Z, Ws, s, classes);
    CHECK(scaled.all_pass);
    CHECK(scaled.max_ratio2 == s * s / 4);
    for (const auto& row : scaled.rows) CHECK(row.ratio2 == s * s / 4);

    ComplexClass W2{Rat(2) * Z.r, Rat(2) * Z.c1_c0, Rat(2) * Z.c1_f, Rat(2) * Z.s};
    NeighborhoodReport doubled = neighborhood_check(S, Z, W2, s, classes);
    CHECK_FALSE(doubled.all_pass);
    for (const auto& row : doubled.rows) CHECK_FALSE(row.pass);
    CHECK(doubled.max_ratio2 == 1);

    // scaling both charges by a positive rational preserves every verdict
    Rat mu(3, 7);
    ComplexClass Zs{mu * Z.r, mu * Z.c1_c0, mu * Z.c1_f, mu * Z.s};
    ComplexClass Ws2{mu * Ws.r, mu * Ws.c1_c0, mu * Ws.c1_f, mu * Ws.s};
    NeighborhoodReport rescaled = neighborhood_check(S, Zs, Ws2, s, classes);
    REQUIRE(rescaled.rows.size() == scaled.rows.size());
    for (std::size_t i = 0; i < scaled.rows.size(); ++i) {
        CHECK(scaled.rows[i].pass == rescaled.rows[i].pass);
        CHECK(scaled.rows[i].ratio2 == rescaled.rows[i].ratio2);
    }

    CHECK_THROWS_AS(neighborhood_check(S, Z, Z, Rat(0), classes), DomainError);
    CHECK_THROWS_AS(neighborhood_check(S, Z, Z, Rat(1), classes), DomainError);
    // the identity gluing kills the skyscraper charge: Z(O_x) = (a-1) + ic = 0
    GluedDescriptor ident{LiftedGL::identity(), LiftedGL::identity()};
    ComplexClass Zdeg = pr1_glued(S, ident);
    std::vector<NumClass> ox_only = {chern_of(S, parse_object("O_x"))};
    CHECK_THROWS_WITH_AS(neighborhood_check(S, Zdeg, Zdeg, s, ox_only), doctest::Contains("vanishes"),
                         DomainError);
}
