#pragma once

// Exact-arithmetic primitives shared by every module: arbitrary-precision
// rationals, Gaussian rationals, and 2x2 rational matrices. No floating
// point enters any computation; doubles exist only as display/oracle
// conversions.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace stab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Math/input precondition failure (maps to CLI exit code 1).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }
inline bool is_integer(const Rat& q) { return den(q) == 1; }

/// Canonical "p/q" form; integers print without the denominator.
std::string rat_str(const Rat& q);

/// Parse "p/q" or "p" (optional sign, no whitespace inside the token).
/// Throws DomainError on malformed input or zero denominator.
Rat rat_parse(const std::string& text);

double rat_double(const Rat& q);

// ---------------------------------------------------------------------------
// Gaussian rationals
// ---------------------------------------------------------------------------

struct GaussQ {
    Rat re;
    Rat im;

    GaussQ() = default;
    GaussQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussQ(const Rat& r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussQ conj() const { return {re, -im}; }
    /// |z|^2 as an exact rational.
    Rat norm2() const { return re * re + im * im; }

    friend GaussQ operator+(const GaussQ& a, const GaussQ& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussQ operator-(const GaussQ& a, const GaussQ& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussQ operator-(const GaussQ& a) { return {-a.re, -a.im}; }
    friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussQ operator*(const Rat& s, const GaussQ& a) { return {s * a.re, s * a.im}; }
    friend bool operator==(const GaussQ& a, const GaussQ& b) = default;

    GaussQ& operator+=(const GaussQ& b) { re += b.re; im += b.im; return *this; }
    GaussQ& operator-=(const GaussQ& b) { re -= b.re; im -= b.im; return *this; }
};

/// "3/2 - 1/2 i" style rendering for reports.
std::string gauss_str(const GaussQ& z);

// ---------------------------------------------------------------------------
// 2x2 rational matrices (row-major: [[a, b], [c, d]])
// ---------------------------------------------------------------------------

struct Mat2 {
    Rat a{1}, b{0};
    Rat c{0}, d{1};

    static Mat2 identity() { return {}; }

    Rat det() const { return a * d - b * c; }

    /// Throws DomainError on det == 0.
    Mat2 inverse() const;

    std::pair<Rat, Rat> apply(const Rat& x, const Rat& y) const {
        return {a * x + b * y, c * x + d * y};
    }

    /// The matrix acting on C = R^2: (re, im) as a real 2-vector.
    GaussQ apply(const GaussQ& z) const {
        return {a * z.re + b * z.im, c * z.re + d * z.im};
    }

    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend bool operator==(const Mat2& m, const Mat2& n) = default;

    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
};

}  // namespace stab
