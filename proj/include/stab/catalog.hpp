#pragma once

// The test-object catalog: named objects with Chern characters, their
// position in the semiorthogonal decomposition, and their phases under
// glued descriptors, plus the object-expression parser.
//
// Grammar (whitespace-insensitive, "*" optional after "p"):
//   expr    ::= atom suffix*
//   atom    ::= "O_S" | "O_x" | "O_f" | "O_C0"
//             | "O_S(" divisor ")" | "p*(" int "," int ")"
//   suffix  ::= "(" divisor ")"          twist by an integral divisor
//             | "[" int "]"              homological shift
//   divisor ::= signed combination of "C0" and "f" with integer
//               coefficients, or "0"
//
// Examples: "O_f(-C0)[1]", "O_S(2*C0+3*f)", "p*(1,-2)(-C0)[2]".

#include "stab/conditions.hpp"
#include "stab/lattice.hpp"
#include "stab/liftedphase.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stab {

/// Syntax error with a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, std::string expected, std::string found);

    std::size_t pos;
    std::string expected;
    std::string found;
};

/// Integer-coefficient divisor as written in object expressions.
struct ObjDivisor {
    long long c0{0};
    long long f{0};

    DivisorClass to_class() const { return {Rat(c0), Rat(f)}; }
    friend bool operator==(const ObjDivisor&, const ObjDivisor&) = default;
};

enum class AtomKind { OS, OSLine, Ox, Of, OC0, Pullback };

struct ObjAtom {
    AtomKind kind{AtomKind::OS};
    ObjDivisor d{};             // OSLine
    long long rho{0}, delta{0}; // Pullback
    friend bool operator==(const ObjAtom&, const ObjAtom&) = default;
};

struct ObjSuffix {
    bool is_shift{false};
    ObjDivisor d{};  // twist
    long long k{0};  // shift
    friend bool operator==(const ObjSuffix&, const ObjSuffix&) = default;
};

struct ObjectSpec {
    ObjAtom atom;
    std::vector<ObjSuffix> suffixes;
    friend bool operator==(const ObjectSpec&, const ObjectSpec&) = default;
};

/// Throws ParseError with position and expected-token description.
ObjectSpec parse_object(const std::string& text);

/// Canonical rendering; print_object(parse_object(s)) reparses to an
/// equal tree.
std::string print_object(const ObjectSpec& spec);

/// Chern character of the named object, assembled from the atom classes
/// and the twist/shift ring operations.
NumClass chern_of(const SurfaceData& S, const ObjectSpec& spec);

/// Divisor with rational coefficients, e.g. "-1/2*C0+f" (CLI input for B
/// and omega). Same tokenizer and error reporting as the object grammar.
DivisorClass parse_divisor_text(const std::string& text);

// ---------------------------------------------------------------------------
// Catalog entries
// ---------------------------------------------------------------------------

enum class GluingComponent { D1, D2, Mixed };

std::string component_name(GluingComponent c);

struct CatalogEntry {
    ObjectSpec spec;
    NumClass ch;
    GluingComponent component{GluingComponent::Mixed};
    /// Curve-factor class for single-factor objects.
    std::optional<CurveClass> factor_class;
    /// Its phase in the standard condition, the lift in (0, 2].
    std::optional<PhasePoint> factor_standard_phase;
};

/// Classify by the vanishing of the projection shadows: D2 iff the
/// lambda1 class vanishes, D1 iff the rho2 class vanishes.
CatalogEntry make_entry(const SurfaceData& S, const ObjectSpec& spec);

inline CatalogEntry make_entry(const SurfaceData& S, const std::string& expr) {
    return make_entry(S, parse_object(expr));
}

/// The built-in named objects.
std::vector<CatalogEntry> build_catalog(const SurfaceData& S);

/// Phase of a nonzero curve class in the standard condition: the lift of
/// phase_of(-deg + i*rank) in (0, 2], so sheaf classes land in (0, 1].
PhasePoint standard_phase(const CurveClass& g);

/// Phase of a single-factor object under the glued descriptor: the
/// inverse translate applied to the standard phase of its curve factor.
/// Mixed objects have no slicing phase here (their analysis goes through
/// the gluing triangle in the walls module); returns nullopt.
std::optional<PhasePoint> glued_phase(const GluedDescriptor& gd, const CatalogEntry& entry);

}  // namespace stab
