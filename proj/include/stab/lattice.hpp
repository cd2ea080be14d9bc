#pragma once

// The numerical Grothendieck lattice of a ruled surface p: S -> C with
// section C0 and fibre f:
//
//     N(S) = Z ⊕ NS(S) ⊕ (1/2)Z,   NS(S) = Z·C0 ⊕ Z·f,
//
// intersection numbers C0^2 = e, C0.f = 1, f^2 = 0, Mukai pairing
// ((r1,D1,s1),(r2,D2,s2)) = D1.D2 - r1 s2 - r2 s1, and the numerical
// shadows of Orlov's semiorthogonal decomposition
// D^b(S) = < p*D^b(C) ⊗ O(-C0), p*D^b(C) >.
//
// SIGN CONVENTION: e = deg E = C0^2 where E = p_* O_S(C0). Hartshorne's
// ruled-surface invariant is the NEGATIVE of this e; use
// SurfaceData::from_hartshorne to convert.
//
// All arithmetic is exact. Class components are stored as rationals so
// that the pushforward/embedding operators stay total; honest object
// classes satisfy is_lattice() (integer rank and c1, 2*ch2 integral) and
// the lattice() factory asserts that.

#include "stab/rational.hpp"

#include <string>
#include <vector>

namespace stab {

struct DivisorClass {
    Rat c0{0};  // coefficient of the section C0
    Rat f{0};   // coefficient of the fibre f

    DivisorClass() = default;
    DivisorClass(Rat x, Rat y) : c0(std::move(x)), f(std::move(y)) {}

    bool is_zero() const { return c0 == 0 && f == 0; }
    bool is_integral() const { return is_integer(c0) && is_integer(f); }

    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) { return {a.c0 + b.c0, a.f + b.f}; }
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return {a.c0 - b.c0, a.f - b.f}; }
    friend DivisorClass operator-(const DivisorClass& a) { return {-a.c0, -a.f}; }
    friend DivisorClass operator*(const Rat& s, const DivisorClass& a) { return {s * a.c0, s * a.f}; }
    friend bool operator==(const DivisorClass& a, const DivisorClass& b) = default;

    /// "C0 - 2*f" style rendering.
    std::string str() const;
};

struct SurfaceData {
    long long genus{0};  // genus of the base curve C, >= 0
    long long e{0};      // e = deg E = C0^2 (NOT Hartshorne's invariant, which is -e)

    SurfaceData() = default;
    SurfaceData(long long g, long long e_) : genus(g), e(e_) {
        if (g < 0) throw DomainError("genus must be non-negative");
    }

    /// Hartshorne's invariant is -deg E; this flips the sign once, here.
    static SurfaceData from_hartshorne(long long g, long long e_hartshorne) {
        return SurfaceData(g, -e_hartshorne);
    }

    /// K_S = -2*C0 + (2g - 2 + e)*f.
    DivisorClass canonical_class() const { return {Rat(-2), Rat(2 * genus - 2 + e)}; }

    /// (x1*C0 + y1*f).(x2*C0 + y2*f) = x1*x2*e + x1*y2 + x2*y1.
    Rat intersect(const DivisorClass& a, const DivisorClass& b) const {
        return a.c0 * b.c0 * e + a.c0 * b.f + b.c0 * a.f;
    }
    /// Intersection form extended C-bilinearly (used by complexified classes).
    GaussQ intersect(const GaussQ& ac0, const GaussQ& af, const GaussQ& bc0, const GaussQ& bf) const {
        return ac0 * bc0 * GaussQ(Rat(e)) + ac0 * bf + bc0 * af;
    }

    friend bool operator==(const SurfaceData&, const SurfaceData&) = default;
};

/// Element of N(S) ⊗ Q: (rank, c1, ch2). Lattice points have integer
/// rank and c1 and half-integral ch2.
struct NumClass {
    Rat r{0};
    DivisorClass c1;
    Rat ch2{0};

    NumClass() = default;
    NumClass(Rat rank, DivisorClass c, Rat s) : r(std::move(rank)), c1(std::move(c)), ch2(std::move(s)) {}

    bool is_lattice() const { return is_integer(r) && c1.is_integral() && is_integer(2 * ch2); }

    /// Validating factory for honest object classes.
    static NumClass lattice(Rat rank, DivisorClass c, Rat s) {
        NumClass out{std::move(rank), std::move(c), std::move(s)};
        if (!out.is_lattice())
            throw DomainError("class (" + rat_str(out.r) + ", " + out.c1.str() + ", " + rat_str(out.ch2) +
                              ") is not on the lattice Z + NS(S) + (1/2)Z");
        return out;
    }

    bool is_zero() const { return r == 0 && c1.is_zero() && ch2 == 0; }

    friend NumClass operator+(const NumClass& a, const NumClass& b) {
        return {a.r + b.r, a.c1 + b.c1, a.ch2 + b.ch2};
    }
    friend NumClass operator-(const NumClass& a, const NumClass& b) {
        return {a.r - b.r, a.c1 - b.c1, a.ch2 - b.ch2};
    }
    friend NumClass operator*(const Rat& s, const NumClass& a) { return {s * a.r, s * a.c1, s * a.ch2}; }
    friend bool operator==(const NumClass& a, const NumClass& b) = default;

    std::string str() const;
};

/// Element of N(S) ⊗ C over Gaussian rationals; central-charge vectors
/// pr1(sigma) live here. NumClass embeds with zero imaginary parts.
struct ComplexClass {
    GaussQ r;
    GaussQ c1_c0;
    GaussQ c1_f;
    GaussQ s;

    ComplexClass() = default;
    ComplexClass(GaussQ rank, GaussQ xc0, GaussQ xf, GaussQ s2)
        : r(std::move(rank)), c1_c0(std::move(xc0)), c1_f(std::move(xf)), s(std::move(s2)) {}

    static ComplexClass from_num(const NumClass& c) {
        return {GaussQ(c.r), GaussQ(c.c1.c0), GaussQ(c.c1.f), GaussQ(c.ch2)};
    }

    friend ComplexClass operator+(const ComplexClass& a, const ComplexClass& b) {
        return {a.r + b.r, a.c1_c0 + b.c1_c0, a.c1_f + b.c1_f, a.s + b.s};
    }
    friend ComplexClass operator-(const ComplexClass& a, const ComplexClass& b) {
        return {a.r - b.r, a.c1_c0 - b.c1_c0, a.c1_f - b.c1_f, a.s - b.s};
    }
    friend bool operator==(const ComplexClass& a, const ComplexClass& b) = default;
};

/// Numerical class on the base curve C. Pushforwards of honest surface
/// classes have integral rank; deg may be half-integral exactly when the
/// input was off-lattice, so integrality is the caller's check.
struct CurveClass {
    Rat rank{0};
    Rat deg{0};

    bool is_zero() const { return rank == 0 && deg == 0; }
    bool is_integral() const { return is_integer(rank) && is_integer(deg); }

    friend CurveClass operator+(const CurveClass& a, const CurveClass& b) { return {a.rank + b.rank, a.deg + b.deg}; }
    friend CurveClass operator-(const CurveClass& a, const CurveClass& b) { return {a.rank - b.rank, a.deg - b.deg}; }
    friend bool operator==(const CurveClass& a, const CurveClass& b) = default;

    /// Z_st = -deg + i*rank.
    GaussQ standard_charge() const { return {-deg, rank}; }
};

// ---------------------------------------------------------------------------
// Pairings and ring structure
// ---------------------------------------------------------------------------

/// Mukai pairing D1.D2 - r1*s2 - r2*s1, C-bilinear over Gaussian rationals.
GaussQ mukai_pair(const SurfaceData& S, const ComplexClass& u, const ComplexClass& v);

/// Pairing against a real class, avoiding the complexification.
inline GaussQ mukai_pair(const SurfaceData& S, const ComplexClass& u, const NumClass& c) {
    Rat t = c.c1.c0 * S.e + c.c1.f;
    return t * u.c1_c0 + c.c1.c0 * u.c1_f - c.ch2 * u.r - c.r * u.s;
}

inline Rat mukai_pair(const SurfaceData& S, const NumClass& u, const NumClass& v) {
    return S.intersect(u.c1, v.c1) - u.r * v.ch2 - v.r * u.ch2;
}

/// Chern-character ring product (r1*r2, r1*D2 + r2*D1, r1*s2 + r2*s1 + D1.D2).
ComplexClass chern_mul(const SurfaceData& S, const ComplexClass& u, const ComplexClass& v);

/// exp(B + i*omega) = (1, B + i*omega, (B + i*omega)^2 / 2).
ComplexClass exp_divisor(const SurfaceData& S, const DivisorClass& B, const DivisorClass& omega);

/// Multiply by (1, D, D^2/2): (r, c1 + r*D, ch2 + c1.D + r*D^2/2). D integral.
NumClass twist(const SurfaceData& S, const NumClass& c, const DivisorClass& D);

/// K-theory class of E[n]: multiply every component by (-1)^n.
NumClass shift_class(const NumClass& c, long long n);

// ---------------------------------------------------------------------------
// Numerical shadows of the semiorthogonal projection functors
// ---------------------------------------------------------------------------

/// ch Rp_*(F) = (c1.f + r, ch2 + c1.C0 - (e/2)*c1.f): the D^b(C)-class of
/// rho2(F) before pullback.
CurveClass push_rho2(const SurfaceData& S, const NumClass& c);

/// ch Rp_*(F(-C0 + (2g-2+e)f)) ⊗ w_C^*[1] = (-c1.f, -ch2 - (e/2)*c1.f):
/// the D^b(C)-class of lambda1(F) before pullback and the -C0 twist.
CurveClass push_lambda1(const SurfaceData& S, const NumClass& c);

/// S-class of the pullback p*(G): (rank, deg*f, 0).
NumClass embed_rho2_image(const SurfaceData& S, const CurveClass& g);

/// S-class of p*(G) ⊗ O(-C0): (rank, deg*f - rank*C0, rank*e/2 - deg).
NumClass embed_lambda1_image(const SurfaceData& S, const CurveClass& g);

/// mu_omega = c1.omega / r. Throws DomainError on r == 0.
Rat slope(const SurfaceData& S, const NumClass& c, const DivisorClass& omega);

}  // namespace stab
