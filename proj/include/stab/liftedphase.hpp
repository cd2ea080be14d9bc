#pragma once

// Exact arithmetic for phases and for the universal cover of GL+(2,R).
//
// A PhasePoint is a lifted phase phi = m + arg(v)/pi with v a primitive
// integer direction normalized into the half-open upper half-plane
// (arg(v) in [0, pi)) and m a winding integer, so phi in [m, m+1). The
// actual ray direction exp(i*pi*phi) is (-1)^m * v/|v|. The order on
// lifted phases is decided exactly: compare m, then an integer cross
// product.
//
// A LiftedGL is a pair {M, n}: a rational matrix with det(M) > 0 and an
// integer lift shift. It represents the phase map f = l_M + n where l_M
// is the canonical lift anchored at l_M(0) = Arg(M e1)/pi, Arg in
// (-pi, pi]. Group composition, inversion, and the action on phases are
// all computed exactly in this parameterization.

#include "stab/lattice.hpp"
#include "stab/rational.hpp"

#include <compare>
#include <optional>
#include <string>

namespace stab {

struct PhasePoint {
    Int vx{1};        // primitive direction, vy > 0 or (vy == 0 and vx > 0)
    Int vy{0};
    long long m{0};   // winding: represented value lies in [m, m+1)

    /// Exact total order on lifted-phase values.
    std::strong_ordering cmp(const PhasePoint& o) const;
    friend bool operator==(const PhasePoint& a, const PhasePoint& b) {
        return a.m == b.m && a.vx == b.vx && a.vy == b.vy;
    }
    friend bool operator<(const PhasePoint& a, const PhasePoint& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const PhasePoint& a, const PhasePoint& b) { return a.cmp(b) <= 0; }
    friend bool operator>(const PhasePoint& a, const PhasePoint& b) { return a.cmp(b) > 0; }
    friend bool operator>=(const PhasePoint& a, const PhasePoint& b) { return a.cmp(b) >= 0; }

    PhasePoint shifted(long long k) const { return {vx, vy, m + k}; }

    /// True when the value is the integer m exactly (direction on the real axis).
    bool is_integer() const { return vy == 0; }

    /// Double approximation m + atan2(vy, vx)/pi (display and test oracle only).
    double approx() const;

    std::string str() const;
};

/// Result of comparing a lifted phase against a rational threshold.
/// Thresholds congruent to 0, 1/4, 1/2, 3/4 (mod 1) are decided by pure
/// integer tests; anything else falls back to interval arithmetic whose
/// working precision is reported. Niven's theorem (tan of a rational
/// multiple of pi is rational only at those four residues) guarantees the
/// fallback never faces a true tie, so refinement terminates.
struct ThresholdCmp {
    int sign;                 // -1: phase < t, 0: equal, +1: phase > t
    bool exact_path;          // true when no interval arithmetic was needed
    unsigned precision_bits;  // 0 on the exact path
};

/// The unique lift of the direction of z in the window (hint-1, hint+1].
/// The default window (-1, 1] realizes Arg(z)/pi; the stability-function
/// branch (0 < phi <= 1 on the upper half-plane and the negative real
/// ray) is this same default. Throws DomainError on z == 0.
PhasePoint phase_of(const GaussQ& z, long long hint = 0);

/// Lift of the direction of z strictly inside (lo, hi); empty when the
/// window (assumed of length <= 2) contains none.
std::optional<PhasePoint> lift_in_open_window(const GaussQ& z, const PhasePoint& lo, const PhasePoint& hi);

/// Exact/interval comparison of a lifted phase against the rational t.
ThresholdCmp cmp_phase_rational(const PhasePoint& p, const Rat& t);

// ---------------------------------------------------------------------------
// Universal cover of GL+(2,R)
// ---------------------------------------------------------------------------

struct LiftedGL {
    Mat2 M;           // det > 0, enforced by make()
    long long n{0};   // f = l_M + n

    static LiftedGL identity() { return {}; }
    /// The shift functor [1]: matrix -I, f(phi) = phi + 1 (canonical lift, n = 0).
    static LiftedGL shift_one() { return {{Rat(-1), Rat(0), Rat(0), Rat(-1)}, 0}; }

    static LiftedGL make(Mat2 m, long long shift) {
        if (m.det() <= 0) throw DomainError("LiftedGL matrix must have positive determinant");
        return {std::move(m), shift};
    }

    bool is_identity() const { return M.is_identity() && n == 0; }
    friend bool operator==(const LiftedGL& a, const LiftedGL& b) = default;
};

/// l_M(0) = Arg(M e1)/pi in (-1, 1], as an exact PhasePoint.
PhasePoint canonical_at_zero(const Mat2& M);

/// f(0) for the represented lift f = l_M + n.
PhasePoint eval_at_zero(const LiftedGL& g);

/// f(phi): direction M.v with the winding fixed by the canonical-lift rule;
/// strictly increasing in p and commutes with integer shifts.
PhasePoint apply(const LiftedGL& g, const PhasePoint& p);

/// Matrix part M1*M2; shift chosen so the phase maps compose exactly.
LiftedGL compose(const LiftedGL& g1, const LiftedGL& g2);

LiftedGL inverse(const LiftedGL& g);

/// M^{-1} acting R-linearly on one Gaussian rational.
GaussQ act_charge(const LiftedGL& g, const GaussQ& z);

/// M^{-1} applied componentwise: the central charge of sigma.g given that
/// of sigma.
ComplexClass act_charge(const LiftedGL& g, const ComplexClass& Z);

}  // namespace stab
