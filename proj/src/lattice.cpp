#include "stab/lattice.hpp"

namespace stab {

std::string DivisorClass::str() const {
    if (is_zero()) return "0";
    std::string out;
    auto term = [&](const Rat& k, const char* name) {
        if (k == 0) return;
        if (out.empty()) {
            if (k == 1) out = name;
            else if (k == -1) out = std::string("-") + name;
            else out = rat_str(k) + "*" + name;
        } else {
            if (k == 1) out += std::string("+") + name;
            else if (k == -1) out += std::string("-") + name;
            else if (k > 0) out += "+" + rat_str(k) + "*" + name;
            else out += "-" + rat_str(-k) + "*" + name;
        }
    };
    term(c0, "C0");
    term(f, "f");
    return out;
}

std::string NumClass::str() const {
    return "(" + rat_str(r) + ", " + c1.str() + ", " + rat_str(ch2) + ")";
}

GaussQ mukai_pair(const SurfaceData& S, const ComplexClass& u, const ComplexClass& v) {
    return S.intersect(u.c1_c0, u.c1_f, v.c1_c0, v.c1_f) - u.r * v.s - v.r * u.s;
}

ComplexClass chern_mul(const SurfaceData& S, const ComplexClass& u, const ComplexClass& v) {
    return {u.r * v.r,
            u.r * v.c1_c0 + v.r * u.c1_c0,
            u.r * v.c1_f + v.r * u.c1_f,
            u.r * v.s + v.r * u.s + S.intersect(u.c1_c0, u.c1_f, v.c1_c0, v.c1_f)};
}

ComplexClass exp_divisor(const SurfaceData& S, const DivisorClass& B, const DivisorClass& omega) {
    GaussQ dc0{B.c0, omega.c0};
    GaussQ df{B.f, omega.f};
    GaussQ half{Rat(1, 2), Rat(0)};
    return {GaussQ(Rat(1)), dc0, df, half * S.intersect(dc0, df, dc0, df)};
}

NumClass twist(const SurfaceData& S, const NumClass& c, const DivisorClass& D) {
    if (!D.is_integral()) throw DomainError("twist divisor must be integral, got " + D.str());
    return {c.r, c.c1 + c.r * D, c.ch2 + S.intersect(c.c1, D) + c.r * S.intersect(D, D) / 2};
}

NumClass shift_class(const NumClass& c, long long n) {
    if (n % 2 == 0) return c;
    return {-c.r, -c.c1, -c.ch2};
}

CurveClass push_rho2(const SurfaceData& S, const NumClass& c) {
    // c1.f = c0-coefficient, c1.C0 = c0*e + f-coefficient.
    Rat c1f = c.c1.c0;
    Rat c1c0 = c.c1.c0 * S.e + c.c1.f;
    return {c1f + c.r, c.ch2 + c1c0 - Rat(S.e, 2) * c1f};
}

CurveClass push_lambda1(const SurfaceData& S, const NumClass& c) {
    Rat c1f = c.c1.c0;
    return {-c1f, -c.ch2 - Rat(S.e, 2) * c1f};
}

NumClass embed_rho2_image(const SurfaceData&, const CurveClass& g) {
    return {g.rank, DivisorClass{Rat(0), g.deg}, Rat(0)};
}

NumClass embed_lambda1_image(const SurfaceData& S, const CurveClass& g) {
    return {g.rank, DivisorClass{-g.rank, g.deg}, Rat(S.e, 2) * g.rank - g.deg};
}

Rat slope(const SurfaceData& S, const NumClass& c, const DivisorClass& omega) {
    if (c.r == 0) throw DomainError("infinite slope (torsion class)");
    return S.intersect(c.c1, omega) / c.r;
}

}  // namespace stab
