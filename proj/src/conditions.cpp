#include "stab/conditions.hpp"

namespace stab {

std::vector<std::string> surface_caveats(const SurfaceData& S) {
    std::vector<std::string> out;
    if (S.genus == 0)
        out.push_back("g = 0: base-curve stability classification assumes positive genus; lattice formulas remain valid");
    return out;
}

ValidationReport validate_divisorial(const SurfaceData& S, const DivisorialDescriptor& d) {
    ValidationReport rep;
    const Rat& z = d.omega.c0;
    const Rat& w = d.omega.f;
    Rat omega2 = S.intersect(d.omega, d.omega);
    if (!(z > 0 && w > 0 && omega2 > 0)) {
        rep.ok = false;
        rep.error = "positivity screen failed: need omega = z*C0 + w*f with z > 0, w > 0 and omega^2 > 0, got omega = " +
                    d.omega.str() + " (omega^2 = " + rat_str(omega2) + ")";
        return rep;
    }
    if (S.e < 0) {
        Rat oc0 = S.intersect(d.omega, DivisorClass{Rat(1), Rat(0)});
        if (!(oc0 > 0)) {
            rep.ok = false;
            rep.error = "positivity screen failed for e < 0: omega.C0 = " + rat_str(oc0) + " <= 0";
            return rep;
        }
        rep.caveats.push_back("e < 0: positivity checked by screen, not a full ampleness test");
    }
    for (std::string& c : surface_caveats(S)) rep.caveats.push_back(std::move(c));
    return rep;
}

GaussQ charge_divisorial(const SurfaceData& S, const DivisorialDescriptor& d, const NumClass& c) {
    ValidationReport rep = validate_divisorial(S, d);
    if (!rep.ok) throw DomainError(rep.error);
    return mukai_pair(S, pr1_divisorial(S, d), c);
}

ComplexClass pr1_divisorial(const SurfaceData& S, const DivisorialDescriptor& d) {
    return act_charge(d.translate, exp_divisor(S, d.B, d.omega));
}

GaussQ charge_glued(const SurfaceData& S, const GluedDescriptor& gd, const NumClass& c) {
    GaussQ z1 = act_charge(gd.A1, push_lambda1(S, c).standard_charge());
    GaussQ z2 = act_charge(gd.A2, push_rho2(S, c).standard_charge());
    return z1 + z2;
}

ComplexClass pr1_glued(const SurfaceData& S, const GluedDescriptor& gd) {
    if (!gd.A2.is_identity())
        throw DomainError("pr1_glued requires a normalized descriptor (A2 = identity); call normalize first");
    Mat2 Mi = gd.A1.M.inverse();
    const Rat& a = Mi.a;
    const Rat& b = Mi.b;
    const Rat& c = Mi.c;
    const Rat& d = Mi.d;
    Rat half_e(S.e, 2);
    return {GaussQ{1 - a, -c},
            GaussQ{Rat(-1), Rat(0)},
            GaussQ{half_e * (a + 1) - b, half_e * c + (1 - d)},
            GaussQ{Rat(0), Rat(-1)}};
}

std::string per_tag_name(PerTag t) {
    switch (t) {
        case PerTag::LessThanOne: return "LessThanOne";
        case PerTag::EqualOne: return "EqualOne";
        case PerTag::GreaterThanOne: return "GreaterThanOne";
    }
    return "?";
}

PerversityComparison perversity(const GluedDescriptor& gd) {
    // Evaluated on the normalized representative A1 * A2^{-1}. Comparing
    // raw f1(0) against f2(0) + 1 is not act-invariant (the offset of two
    // lifts varies with the base point unless one of them is the
    // identity); normalizing first makes all three verdicts invariant
    // under the group action, and agrees with the raw comparison
    // whenever A2 = identity.
    LiftedGL h = gd.A2.is_identity() ? gd.A1 : compose(gd.A1, inverse(gd.A2));
    PhasePoint f1 = eval_at_zero(h);
    PhasePoint f2{Int(1), Int(0), 0};  // identity translate: f2(0) = 0
    auto order = f1.cmp(f2.shifted(1));  // per >= 1 iff f1(0) >= f2(0) + 1
    PerTag tag = order < 0 ? PerTag::LessThanOne : order == 0 ? PerTag::EqualOne : PerTag::GreaterThanOne;
    return {tag, std::move(f1), std::move(f2)};
}

bool is_stability(const GluedDescriptor& gd) {
    return perversity(gd).at_least_one();
}

GluedDescriptor act(const GluedDescriptor& gd, const LiftedGL& g) {
    return {compose(gd.A1, g), compose(gd.A2, g)};
}

GluedDescriptor normalize(const GluedDescriptor& gd) {
    return act(gd, inverse(gd.A2));
}

}  // namespace stab
