#include "stab/walls.hpp"

namespace stab {

std::string sky_verdict_name(SkyVerdictKind k) {
    switch (k) {
        case SkyVerdictKind::StableGeometric: return "StableGeometric";
        case SkyVerdictKind::StrictlySemistableWall: return "StrictlySemistableWall";
        case SkyVerdictKind::UnstableGluingSide: return "UnstableGluingSide";
    }
    return "?";
}

SkyscraperVerdict classify_skyscraper(const SurfaceData& S, const StabilityDescriptor& d) {
    if (const auto* div = std::get_if<DivisorialDescriptor>(&d)) {
        ValidationReport rep = validate_divisorial(S, *div);
        if (!rep.ok) throw DomainError("invalid descriptor: " + rep.error);
        return {SkyVerdictKind::StableGeometric, "S", std::nullopt};
    }
    const auto& gd = std::get<GluedDescriptor>(d);
    PerversityComparison per = perversity(gd);
    switch (per.tag) {
        case PerTag::LessThanOne:
            throw DomainError("invalid descriptor: gluing perversity < 1, not a stability condition (per != 1)");
        case PerTag::EqualOne:
            return {SkyVerdictKind::StrictlySemistableWall, "C", std::nullopt};
        case PerTag::GreaterThanOne:
            return {SkyVerdictKind::UnstableGluingSide, "empty", parse_object("O_f")};
    }
    throw std::logic_error("unreachable perversity tag");
}

namespace {

struct WallFrame {
    Rat a;  // M1^{-1} = (a, b; 0, a) after validation
    Rat b;
};

// Shared precondition validation for the boundary solver.
WallFrame validate_wall_input(const GluedDescriptor& gd) {
    if (!gd.A2.is_identity())
        throw DomainError("boundary_solve requires a normalized descriptor (A2 = identity); call normalize first");
    PerversityComparison per = perversity(gd);
    if (per.tag != PerTag::EqualOne)
        throw DomainError("boundary_solve precondition violated: per != 1 (gluing perversity is " +
                          per_tag_name(per.tag) + ")");
    Mat2 Mi = gd.A1.M.inverse();
    if (Mi.c != 0)
        throw DomainError("boundary_solve precondition violated: c != 0 (M1^{-1} lower-left entry is " +
                          rat_str(Mi.c) + ")");
    if (Mi.a >= 0)
        throw DomainError("boundary_solve precondition violated: a >= 0 (M1^{-1} has a = " + rat_str(Mi.a) + ")");
    if (Mi.a != Mi.d)
        throw DomainError("boundary_solve precondition violated: a != d (M1^{-1} has a = " + rat_str(Mi.a) +
                          ", d = " + rat_str(Mi.d) + ")");
    return {Mi.a, Mi.b};
}

}  // namespace

BoundaryResult boundary_solve_params(const SurfaceData& S, const GluedDescriptor& gd, const Rat& w, const Rat& y) {
    if (!(w > 0)) throw DomainError("boundary witness requires w > 0 (omega = w*f must meet C0 positively)");
    WallFrame fr = validate_wall_input(gd);
    Rat half_ae = Rat(S.e, 2) * fr.a;
    if (fr.b != half_ae) return BoundaryRefusal{BoundaryCertificate::BNeqHalfAE, fr.b, half_ae};

    // Elimination chain: alpha = 1-a, gamma = 0; z = 0 from delta*z = 0;
    // x = 1/(a-1) from alpha*x = -1; delta = (1-a)/w from delta*w = 1-a;
    // beta from the f-component with the s-component an identity once
    // b = (1/2)*a*e.
    Rat one_minus_a = 1 - fr.a;
    BoundaryWitness wit;
    wit.w = w;
    wit.y = y;
    wit.B = DivisorClass{Rat(1) / (fr.a - 1), y};
    wit.omega = DivisorClass{Rat(0), w};
    wit.M_inv = Mat2{one_minus_a, (Rat(S.e, 2) - one_minus_a * y) / w,
                     Rat(0), one_minus_a / w};

    // Internal postcondition: the witness reproduces the glued charge
    // vector exactly.
    ComplexClass lhs = exp_divisor(S, wit.B, wit.omega);
    ComplexClass transformed{wit.M_inv.apply(lhs.r), wit.M_inv.apply(lhs.c1_c0),
                             wit.M_inv.apply(lhs.c1_f), wit.M_inv.apply(lhs.s)};
    if (!(transformed == pr1_glued(S, gd)))
        throw std::logic_error("boundary_solve: witness failed its exact verification");
    return wit;
}

BoundaryResult boundary_solve(const SurfaceData& S, const GluedDescriptor& gd) {
    return boundary_solve_params(S, gd, Rat(1), Rat(0));
}

std::string side_name(Side s) {
    switch (s) {
        case Side::GeometricSide: return "GeometricSide";
        case Side::GluingSide: return "GluingSide";
        case Side::OnWall: return "OnWall";
    }
    return "?";
}

SideResult deform_side(const SurfaceData& S, const GluedDescriptor& gd, const ComplexClass& W) {
    if (!gd.A2.is_identity())
        throw DomainError("deform_side requires a normalized descriptor (A2 = identity)");
    if (perversity(gd).tag != PerTag::EqualOne)
        throw DomainError("deform_side requires gluing perversity exactly 1");

    NumClass ch_Of = chern_of(S, parse_object("O_f"));
    NumClass ch_rest = chern_of(S, parse_object("O_f(-C0)[1]"));
    GaussQ w_Of = mukai_pair(S, W, ch_Of);
    GaussQ w_rest = mukai_pair(S, W, ch_rest);
    if (w_Of.is_zero()) throw DomainError("W vanishes on O_f: zero central charge");
    if (w_rest.is_zero()) throw DomainError("W vanishes on O_f(-C0)[1]: zero central charge");

    // Both objects sit in P(1) on the wall; accept lifts only in the
    // open band (1/2, 3/2) around that phase.
    PhasePoint lo{Int(0), Int(1), 0};  // 1/2
    PhasePoint hi{Int(0), Int(1), 1};  // 3/2
    auto psi_Of = lift_in_open_window(w_Of, lo, hi);
    if (!psi_Of) return SideRefusal{"too far from sigma_gl", "O_f"};
    auto psi_rest = lift_in_open_window(w_rest, lo, hi);
    if (!psi_rest) return SideRefusal{"too far from sigma_gl", "O_f(-C0)[1]"};

    auto order = psi_rest->cmp(*psi_Of);
    Side side = order > 0 ? Side::GeometricSide : order < 0 ? Side::GluingSide : Side::OnWall;
    return SideVerdict{side, *psi_Of, *psi_rest};
}

NeighborhoodReport neighborhood_check(const SurfaceData& S, const ComplexClass& Z, const ComplexClass& W,
                                      const Rat& s, const std::vector<NumClass>& classes) {
    if (!(s > 0 && s < 1)) throw DomainError("neighborhood bound s must lie in (0, 1), got " + rat_str(s));
    NeighborhoodReport rep;
    Rat s2 = s * s;
    for (const NumClass& c : classes) {
        GaussQ zc = mukai_pair(S, Z, c);
        if (zc.is_zero()) throw DomainError("Z vanishes on class " + c.str() + "; ratio undefined");
        GaussQ diff = mukai_pair(S, W, c) - zc;
        Rat ratio2 = diff.norm2() / zc.norm2();
        bool pass = ratio2 < s2;
        rep.all_pass = rep.all_pass && pass;
        if (ratio2 > rep.max_ratio2) rep.max_ratio2 = ratio2;
        rep.rows.push_back({c, pass, std::move(ratio2)});
    }
    return rep;
}

}  // namespace stab
