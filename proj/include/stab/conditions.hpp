#pragma once

// Stability-condition descriptors on a ruled surface and their exact
// central-charge data.
//
// Divisorial descriptors carry (B, omega) and an optional group translate;
// the charge is Z(E) = M^{-1} (exp(B + i*omega), ch E). Glued descriptors
// carry two translates (A1, A2) of the standard condition on the base
// curve, placed on the two semiorthogonal factors
// p*D^b(C) ⊗ O(-C0) and p*D^b(C); the charge is
// Z = Z1 ∘ lambda1 + Z2 ∘ rho2. The gluing perversity per = f1(0) - f2(0)
// decides existence: the gluing is a locally finite stability condition
// iff per >= 1, and per = 1 is the skyscraper wall.

#include "stab/lattice.hpp"
#include "stab/liftedphase.hpp"

#include <string>
#include <variant>
#include <vector>

namespace stab {

struct DivisorialDescriptor {
    DivisorClass B;
    DivisorClass omega;
    LiftedGL translate = LiftedGL::identity();
};

struct GluedDescriptor {
    LiftedGL A1;  // translate on p*D^b(C) ⊗ O(-C0)
    LiftedGL A2;  // translate on p*D^b(C)

    friend bool operator==(const GluedDescriptor&, const GluedDescriptor&) = default;
};

using StabilityDescriptor = std::variant<DivisorialDescriptor, GluedDescriptor>;

/// Outcome of the divisorial positivity/ampleness screen.
struct ValidationReport {
    bool ok{true};
    std::string error;                 // set when !ok
    std::vector<std::string> caveats;  // e.g. the e < 0 screen note, the g = 0 note
};

/// omega = z*C0 + w*f passes iff z > 0, w > 0 and omega^2 > 0; for e < 0
/// additionally omega.C0 > 0, and the result is flagged as a screen
/// rather than a full ampleness test. A g = 0 caveat is attached because
/// the base-curve stability classification assumes positive genus (the
/// lattice formulas remain valid).
ValidationReport validate_divisorial(const SurfaceData& S, const DivisorialDescriptor& d);

/// Caveats that apply to every descriptor family on this surface
/// (currently just the g = 0 note).
std::vector<std::string> surface_caveats(const SurfaceData& S);

/// Z(E) = M^{-1} (exp(B + i*omega), ch E). Throws DomainError when the
/// screen fails.
GaussQ charge_divisorial(const SurfaceData& S, const DivisorialDescriptor& d, const NumClass& c);

/// Central-charge vector of the divisorial descriptor:
/// act_charge(translate, exp(B + i*omega)).
ComplexClass pr1_divisorial(const SurfaceData& S, const DivisorialDescriptor& d);

/// Z_gl = Z1 ∘ lambda1 + Z2 ∘ rho2 with Zj = Mj^{-1} ∘ Z_st on the curve
/// factors.
GaussQ charge_glued(const SurfaceData& S, const GluedDescriptor& gd, const NumClass& c);

/// Charge vector of a normalized glued descriptor (A2 = identity), with
/// (a, b; c, d) = M1^{-1}:
///   ((1-a) - i c, -C0 + [{(e/2)(a+1) - b} + i{(e/2)c + (1-d)}] f, -i).
/// Satisfies mukai_pair(pr1_glued(gd), ch) = charge_glued(gd, ch) for
/// every class. Throws DomainError on non-normalized input.
ComplexClass pr1_glued(const SurfaceData& S, const GluedDescriptor& gd);

enum class PerTag { LessThanOne, EqualOne, GreaterThanOne };

std::string per_tag_name(PerTag t);

/// Exact three-way comparison of per(sigma) against 1, together with the
/// lifted phases f1(0), f2(0) of the normalized representative.
struct PerversityComparison {
    PerTag tag;
    PhasePoint f1_at_zero;
    PhasePoint f2_at_zero;

    bool at_least_one() const { return tag != PerTag::LessThanOne; }
};

/// per(sigma) = f1(0) - f2(0) of the normalized representative
/// (A1 * A2^{-1}, identity), compared exactly against 1. Normalizing
/// first is what makes all three verdicts invariant under the group
/// action; for descriptors with A2 = identity this is the literal
/// comparison of f1(0) against f2(0) + 1.
PerversityComparison perversity(const GluedDescriptor& gd);

/// Existence criterion: the gluing is a locally finite stability
/// condition iff per >= 1.
bool is_stability(const GluedDescriptor& gd);

/// Right action: compose both translates with g.
GluedDescriptor act(const GluedDescriptor& gd, const LiftedGL& g);

/// act(gd, inverse(A2)): the orbit representative with A2 = identity.
GluedDescriptor normalize(const GluedDescriptor& gd);

}  // namespace stab
