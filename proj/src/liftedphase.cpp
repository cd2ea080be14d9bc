#include "stab/liftedphase.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdlib>

namespace stab {

namespace {

// Primitive integer direction for a nonzero rational vector.
std::pair<Int, Int> primitive_direction(const Rat& x, const Rat& y) {
    Int l = boost::multiprecision::lcm(den(x), den(y));
    Int ix = num(x) * (l / den(x));
    Int iy = num(y) * (l / den(y));
    Int g = boost::multiprecision::gcd(abs(ix), abs(iy));
    return {ix / g, iy / g};
}

// In-window test for the half-open integer window (h-1, h+1].
bool in_hint_window(const PhasePoint& p, long long h) {
    bool above = (p.m > h - 1) || (p.m == h - 1 && p.vy != 0);
    bool below = (p.m <= h) || (p.m == h + 1 && p.vy == 0);
    return above && below;
}

PhasePoint phase_of_direction(Int x, Int y, long long hint) {
    if (x == 0 && y == 0) throw DomainError("zero central charge");
    PhasePoint p;
    if (y > 0) {
        p = {std::move(x), std::move(y), 0};
    } else if (y == 0) {
        p = {Int(1), Int(0), x > 0 ? 0LL : 1LL};
    } else {
        p = {-x, -y, -1};
    }
    long long k0 = (hint - p.m) / 2;
    for (long long k = k0 - 1; k <= k0 + 1; ++k) {
        PhasePoint cand = p.shifted(2 * k);
        if (in_hint_window(cand, hint)) return cand;
    }
    throw std::logic_error("phase_of: no lift landed in the hint window");
}

// Exact big-int -> mpfr at full precision.
void set_exact(mpfr_t rop, const Int& v) {
    mpfr_set_prec(rop, static_cast<mpfr_prec_t>(std::max<unsigned>(64, msb(abs(v) + 1) + 4)));
    mpfr_set_str(rop, v.str().c_str(), 10, MPFR_RNDN);
}

}  // namespace

std::strong_ordering PhasePoint::cmp(const PhasePoint& o) const {
    if (m != o.m) return m <=> o.m;
    Int cross = vx * o.vy - vy * o.vx;
    if (cross > 0) return std::strong_ordering::less;
    if (cross < 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double PhasePoint::approx() const {
    return static_cast<double>(m) +
           std::atan2(vy.convert_to<double>(), vx.convert_to<double>()) / M_PI;
}

std::string PhasePoint::str() const {
    if (vy == 0) return std::to_string(m);
    return std::to_string(m) + " + arg(" + vx.str() + ", " + vy.str() + ")/pi";
}

PhasePoint phase_of(const GaussQ& z, long long hint) {
    if (z.is_zero()) throw DomainError("zero central charge");
    auto [x, y] = primitive_direction(z.re, z.im);
    return phase_of_direction(std::move(x), std::move(y), hint);
}

std::optional<PhasePoint> lift_in_open_window(const GaussQ& z, const PhasePoint& lo, const PhasePoint& hi) {
    PhasePoint p0 = phase_of(z, lo.m + 1);
    for (long long k : {-1LL, 0LL, 1LL}) {
        PhasePoint cand = p0.shifted(2 * k);
        if (lo < cand && cand < hi) return cand;
    }
    return std::nullopt;
}

ThresholdCmp cmp_phase_rational(const PhasePoint& p, const Rat& t) {
    Rat q = t - p.m;  // compare a = arg(v)/pi in [0,1) against q
    if (q < 0) return {+1, true, 0};
    if (q == 0) return {p.vy == 0 ? 0 : +1, true, 0};
    if (q >= 1) return {-1, true, 0};
    if (p.vy == 0) return {-1, true, 0};  // a = 0 < q
    if (p.vx == 0) {                      // a = 1/2 exactly
        Rat half(1, 2);
        return {q > half ? -1 : q < half ? +1 : 0, true, 0};
    }
    if (q == Rat(1, 2)) return {p.vx > 0 ? -1 : +1, true, 0};
    if (q == Rat(1, 4)) {
        if (p.vx < 0) return {+1, true, 0};
        Int d = p.vy - p.vx;
        return {d < 0 ? -1 : d > 0 ? +1 : 0, true, 0};
    }
    if (q == Rat(3, 4)) {
        if (p.vx > 0) return {-1, true, 0};
        Int s = p.vx + p.vy;
        return {s > 0 ? -1 : s < 0 ? +1 : 0, true, 0};
    }

    // Interval fallback: decide sign(atan2(vy, vx) - q*pi). By Niven's
    // theorem equality would force q in {1/4, 1/2, 3/4} (mod 1), all
    // handled above, so the refinement loop terminates.
    mpfr_t fx, fy, fn, fd, th_lo, th_hi, pi_lo, pi_hi, t_lo, t_hi;
    mpfr_inits2(64, fx, fy, fn, fd, th_lo, th_hi, pi_lo, pi_hi, t_lo, t_hi, static_cast<mpfr_ptr>(nullptr));
    set_exact(fx, p.vx);
    set_exact(fy, p.vy);
    set_exact(fn, num(q));
    set_exact(fd, den(q));
    int sign = 0;
    unsigned prec = 128;
    for (; prec <= (1u << 20); prec *= 2) {
        for (mpfr_ptr v : {th_lo, th_hi, pi_lo, pi_hi, t_lo, t_hi}) mpfr_set_prec(v, prec);
        mpfr_atan2(th_lo, fy, fx, MPFR_RNDD);
        mpfr_atan2(th_hi, fy, fx, MPFR_RNDU);
        mpfr_const_pi(pi_lo, MPFR_RNDD);
        mpfr_const_pi(pi_hi, MPFR_RNDU);
        mpfr_mul(t_lo, fn, pi_lo, MPFR_RNDD);  // q > 0 here
        mpfr_div(t_lo, t_lo, fd, MPFR_RNDD);
        mpfr_mul(t_hi, fn, pi_hi, MPFR_RNDU);
        mpfr_div(t_hi, t_hi, fd, MPFR_RNDU);
        if (mpfr_cmp(th_hi, t_lo) < 0) { sign = -1; break; }
        if (mpfr_cmp(th_lo, t_hi) > 0) { sign = +1; break; }
    }
    mpfr_clears(fx, fy, fn, fd, th_lo, th_hi, pi_lo, pi_hi, t_lo, t_hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_free_cache();
    if (sign == 0)
        throw std::logic_error("cmp_phase_rational: interval refinement did not separate (impossible tie)");
    return {sign, false, prec};
}

PhasePoint canonical_at_zero(const Mat2& M) {
    return phase_of(GaussQ{M.a, M.c}, 0);  // M e1 = first column (a, c)
}

PhasePoint eval_at_zero(const LiftedGL& g) {
    return canonical_at_zero(g.M).shifted(g.n);
}

PhasePoint apply(const LiftedGL& g, const PhasePoint& p) {
    auto [ix, iy] = primitive_direction(g.M.a * p.vx + g.M.b * p.vy, g.M.c * p.vx + g.M.d * p.vy);
    PhasePoint psi = phase_of_direction(std::move(ix), std::move(iy), 0);
    PhasePoint l0 = canonical_at_zero(g.M);
    // l_M maps [0,1) onto [l_M(0), l_M(0)+1); the default-branch lift is
    // either already there or exactly one period below.
    if (!(psi >= l0 && psi < l0.shifted(1))) {
        psi = psi.shifted(2);
        if (!(psi >= l0 && psi < l0.shifted(1)))
            throw std::logic_error("apply: canonical-lift window adjustment failed");
    }
    return psi.shifted(p.m + g.n);
}

LiftedGL compose(const LiftedGL& g1, const LiftedGL& g2) {
    Mat2 M = g1.M * g2.M;
    PhasePoint through = apply(g1, eval_at_zero(g2));
    PhasePoint l0 = canonical_at_zero(M);
    if (through.vx != l0.vx || through.vy != l0.vy)
        throw std::logic_error("compose: direction mismatch against canonical lift");
    return {std::move(M), through.m - l0.m};
}

LiftedGL inverse(const LiftedGL& g) {
    Mat2 Mi = g.M.inverse();
    PhasePoint back = apply(LiftedGL{Mi, 0}, eval_at_zero(g));
    if (back.vy != 0)
        throw std::logic_error("inverse: f^{-1}(f(0)) is not an integer phase");
    return {std::move(Mi), -back.m};
}

GaussQ act_charge(const LiftedGL& g, const GaussQ& z) {
    return g.M.inverse().apply(z);
}

ComplexClass act_charge(const LiftedGL& g, const ComplexClass& Z) {
    Mat2 Mi = g.M.inverse();
    return {Mi.apply(Z.r), Mi.apply(Z.c1_c0), Mi.apply(Z.c1_f), Mi.apply(Z.s)};
}

}  // namespace stab
