#pragma once

// The destabilizing-wall toolkit: skyscraper classification across the
// three strata (geometric / perversity-1 wall / gluing side), the
// boundary solver matching a perversity-1 gluing against the closure of
// the geometric region, the deformation side test, and the
// catalog-restricted neighborhood norm bound.

#include "stab/catalog.hpp"
#include "stab/conditions.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace stab {

// ---------------------------------------------------------------------------
// Skyscraper classification
// ---------------------------------------------------------------------------

enum class SkyVerdictKind { StableGeometric, StrictlySemistableWall, UnstableGluingSide };

std::string sky_verdict_name(SkyVerdictKind k);

struct SkyscraperVerdict {
    SkyVerdictKind kind;
    std::string moduli_label;                // "S", "C", or "empty"
    std::optional<ObjectSpec> destabilizer;  // O_f exactly in the unstable case
};

/// Divisorial descriptors are geometric: skyscrapers stable, moduli S.
/// Glued descriptors classify by perversity: wall ("C") at per = 1,
/// unstable with destabilizer O_f ("empty") at per > 1. Throws
/// DomainError for invalid descriptors (screen failure, or per < 1).
SkyscraperVerdict classify_skyscraper(const SurfaceData& S, const StabilityDescriptor& d);

// ---------------------------------------------------------------------------
// Boundary solver
// ---------------------------------------------------------------------------

/// Divisorial data (M^{-1}, B, omega) with M^{-1} exp(B + i*omega) equal,
/// componentwise and exactly, to the glued charge vector. omega = w*f is
/// boundary-degenerate (omega^2 = 0, omega.C0 = w > 0): these points lie
/// on the boundary of the closure of the geometric region, not inside it.
struct BoundaryWitness {
    Mat2 M_inv;
    DivisorClass B;
    DivisorClass omega;
    Rat w;  // the chosen free parameters of the solution family
    Rat y;
};

enum class BoundaryCertificate { BNeqHalfAE };

inline std::string certificate_name(BoundaryCertificate) { return "b != (1/2)*a*e"; }

/// Refusal: the elimination chain is inconsistent; the violated equation
/// is b = (1/2)*a*e with the two sides reported.
struct BoundaryRefusal {
    BoundaryCertificate certificate{BoundaryCertificate::BNeqHalfAE};
    Rat b;
    Rat half_ae;
};

using BoundaryResult = std::variant<BoundaryWitness, BoundaryRefusal>;

/// Solve M^{-1} exp(B + i*omega) = pr1(Z_gl) for a normalized
/// perversity-1 gluing, with the canonical free parameters (w, y) = (1, 0):
///   M^{-1} = ((1-a, e/2), (0, 1-a)),  B = C0/(a-1),  omega = f.
/// Preconditions (violations throw DomainError, named as stated):
/// descriptor normalized; per != 1; c != 0; a >= 0; a != d, where
/// (a, b; c, d) = M1^{-1}. When b != (1/2)*a*e the system is
/// inconsistent and a refusal certificate is returned instead. The
/// returned witness is re-verified internally against pr1_glued.
BoundaryResult boundary_solve(const SurfaceData& S, const GluedDescriptor& gd);

/// Same elimination with caller-chosen free parameters w > 0 and y:
///   M^{-1} = ((1-a, {e/2 - (1-a)y}/w), (0, (1-a)/w)),
///   B = C0/(a-1) + y*f,  omega = w*f.
BoundaryResult boundary_solve_params(const SurfaceData& S, const GluedDescriptor& gd, const Rat& w, const Rat& y);

// ---------------------------------------------------------------------------
// Deformation side test
// ---------------------------------------------------------------------------

enum class Side { GeometricSide, GluingSide, OnWall };

std::string side_name(Side s);

struct SideVerdict {
    Side side;
    PhasePoint psi_Of;      // lifted phase of O_f under W
    PhasePoint psi_OfC0s1;  // lifted phase of O_f(-C0)[1] under W
};

/// The perturbation left the half-width-1/2 phase band around the wall
/// phases; the test refuses rather than guessing a winding.
struct SideRefusal {
    std::string certificate;  // "too far from sigma_gl"
    std::string object_expr;  // which object's phase left the band
};

using SideResult = std::variant<SideVerdict, SideRefusal>;

/// Which side of the wall the perturbed charge W points to, for a
/// normalized perversity-1 gluing. Both phases are lifted into the open
/// band (1/2, 3/2) around the common wall phase 1; then
///   psi(O_f(-C0)[1]) > psi(O_f)  ->  GeometricSide,
///   <  ->  GluingSide,  =  ->  OnWall.
/// Throws DomainError when W vanishes on either object or the descriptor
/// fails the preconditions.
SideResult deform_side(const SurfaceData& S, const GluedDescriptor& gd, const ComplexClass& W);

// ---------------------------------------------------------------------------
// Neighborhood norm bound
// ---------------------------------------------------------------------------

struct NeighborhoodRow {
    NumClass cls;
    bool pass;   // |W(E) - Z(E)|^2 < s^2 |Z(E)|^2, exactly
    Rat ratio2;  // |W(E) - Z(E)|^2 / |Z(E)|^2
};

struct NeighborhoodReport {
    std::vector<NeighborhoodRow> rows;
    Rat max_ratio2{0};
    bool all_pass{true};
};

/// Exact per-class comparison |W - Z|^2 < s^2 |Z|^2 with s playing the
/// role of sin(pi*eps), supplied directly as a rational in (0, 1).
/// max_ratio2 is a lower bound for ||W - Z||^2 in the sigma-norm taken
/// over the true semistable set. Throws DomainError on s outside (0, 1)
/// or Z(class) = 0.
NeighborhoodReport neighborhood_check(const SurfaceData& S, const ComplexClass& Z, const ComplexClass& W,
                                      const Rat& s, const std::vector<NumClass>& classes);

}  // namespace stab
