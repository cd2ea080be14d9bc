#include "stab/catalog.hpp"

#include <cctype>
#include <cstdlib>

namespace stab {

namespace {

enum class Tok { Ident, Number, LParen, RParen, LBracket, RBracket, Comma, Plus, Minus, Star, Slash, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Ident: return "identifier";
        case Tok::Number: return "integer";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::Comma: return "','";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Slash: return "'/'";
        case Tok::End: return "end of input";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

    Token expect(Tok kind, const std::string& what) {
        if (cur_.kind != kind) fail(what);
        return take();
    }

    [[noreturn]] void fail(const std::string& expected) const {
        std::string found = cur_.kind == Tok::End ? "end of input" : "\"" + cur_.text + "\"";
        throw ParseError(cur_.pos, expected, found);
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= text_.size()) {
            cur_ = {Tok::End, "", start};
            return;
        }
        char c = text_[i_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_'))
                ++i_;
            cur_ = {Tok::Ident, text_.substr(start, i_ - start), start};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
            cur_ = {Tok::Number, text_.substr(start, i_ - start), start};
            return;
        }
        ++i_;
        switch (c) {
            case '(': cur_ = {Tok::LParen, "(", start}; return;
            case ')': cur_ = {Tok::RParen, ")", start}; return;
            case '[': cur_ = {Tok::LBracket, "[", start}; return;
            case ']': cur_ = {Tok::RBracket, "]", start}; return;
            case ',': cur_ = {Tok::Comma, ",", start}; return;
            case '+': cur_ = {Tok::Plus, "+", start}; return;
            case '-': cur_ = {Tok::Minus, "-", start}; return;
            case '*': cur_ = {Tok::Star, "*", start}; return;
            case '/': cur_ = {Tok::Slash, "/", start}; return;
            default:
                throw ParseError(start, "a token of the object grammar", "\"" + std::string(1, c) + "\"");
        }
    }

    const std::string& text_;
    std::size_t i_{0};
    Token cur_{Tok::End, "", 0};
};

long long parse_ll(const Token& t) {
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(t.text.c_str(), &end, 10);
    if (errno != 0 || end == t.text.c_str() || *end != '\0')
        throw ParseError(t.pos, "an integer literal in range", "\"" + t.text + "\"");
    return v;
}

long long parse_signed_int(Lexer& lx, const std::string& what) {
    long long sign = 1;
    if (lx.peek().kind == Tok::Plus) {
        lx.take();
    } else if (lx.peek().kind == Tok::Minus) {
        lx.take();
        sign = -1;
    }
    Token t = lx.expect(Tok::Number, what);
    return sign * parse_ll(t);
}

// One divisor term, integer coefficients: [int ['*']] ("C0" | "f"), or a
// bare 0.
void parse_int_term(Lexer& lx, long long sign, ObjDivisor& out) {
    if (lx.peek().kind == Tok::Number) {
        Token t = lx.take();
        long long k = sign * parse_ll(t);
        if (lx.peek().kind == Tok::Star) lx.take();
        if (lx.peek().kind == Tok::Ident) {
            Token name = lx.take();
            if (name.text == "C0") out.c0 += k;
            else if (name.text == "f") out.f += k;
            else throw ParseError(name.pos, "\"C0\" or \"f\"", "\"" + name.text + "\"");
            return;
        }
        if (k == 0) return;  // bare zero divisor term
        lx.fail("\"C0\" or \"f\" after the coefficient (only the zero divisor may be a bare integer)");
    }
    if (lx.peek().kind == Tok::Ident) {
        Token name = lx.take();
        if (name.text == "C0") { out.c0 += sign; return; }
        if (name.text == "f") { out.f += sign; return; }
        throw ParseError(name.pos, "\"C0\" or \"f\"", "\"" + name.text + "\"");
    }
    lx.fail("a divisor term (integer coefficient, \"C0\", \"f\", or \"0\")");
}

ObjDivisor parse_divisor_int(Lexer& lx) {
    ObjDivisor d;
    long long sign = 1;
    if (lx.peek().kind == Tok::Plus) lx.take();
    else if (lx.peek().kind == Tok::Minus) { lx.take(); sign = -1; }
    parse_int_term(lx, sign, d);
    while (lx.peek().kind == Tok::Plus || lx.peek().kind == Tok::Minus) {
        sign = lx.take().kind == Tok::Plus ? 1 : -1;
        parse_int_term(lx, sign, d);
    }
    return d;
}

ObjAtom parse_atom(Lexer& lx) {
    if (lx.peek().kind != Tok::Ident)
        lx.fail("an object atom (\"O_S\", \"O_x\", \"O_f\", \"O_C0\", \"O_S(D)\", or \"p*(r,d)\")");
    Token t = lx.take();
    ObjAtom atom;
    if (t.text == "O_x") { atom.kind = AtomKind::Ox; return atom; }
    if (t.text == "O_f") { atom.kind = AtomKind::Of; return atom; }
    if (t.text == "O_C0") { atom.kind = AtomKind::OC0; return atom; }
    if (t.text == "O_S") {
        // "O_S(D)" is the line-bundle atom; a following "(" always binds here.
        if (lx.peek().kind == Tok::LParen) {
            lx.take();
            atom.kind = AtomKind::OSLine;
            atom.d = parse_divisor_int(lx);
            lx.expect(Tok::RParen, "')' closing the line-bundle divisor");
        } else {
            atom.kind = AtomKind::OS;
        }
        return atom;
    }
    if (t.text == "p") {
        if (lx.peek().kind == Tok::Star) lx.take();  // "*" optional in "p*"
        lx.expect(Tok::LParen, "'(' after \"p*\"");
        atom.kind = AtomKind::Pullback;
        atom.rho = parse_signed_int(lx, "the rank of the pullback class");
        lx.expect(Tok::Comma, "',' between rank and degree");
        atom.delta = parse_signed_int(lx, "the degree of the pullback class");
        lx.expect(Tok::RParen, "')' closing the pullback class");
        return atom;
    }
    throw ParseError(t.pos, "an object atom (\"O_S\", \"O_x\", \"O_f\", \"O_C0\", \"O_S(D)\", or \"p*(r,d)\")",
                     "\"" + t.text + "\"");
}

std::string print_divisor_int(const ObjDivisor& d) {
    if (d.c0 == 0 && d.f == 0) return "0";
    std::string out;
    auto term = [&](long long k, const char* name) {
        if (k == 0) return;
        std::string coeff;
        if (k == 1) coeff = "";
        else if (k == -1) coeff = "-";
        else coeff = std::to_string(k) + "*";
        if (!out.empty() && k > 0) out += "+";
        out += coeff + name;
    };
    term(d.c0, "C0");
    term(d.f, "f");
    return out;
}

}  // namespace

ParseError::ParseError(std::size_t p, std::string exp, std::string fnd)
    : std::runtime_error("syntax error at offset " + std::to_string(p) + ": expected " + exp + ", found " + fnd),
      pos(p),
      expected(std::move(exp)),
      found(std::move(fnd)) {}

ObjectSpec parse_object(const std::string& text) {
    Lexer lx(text);
    ObjectSpec spec;
    spec.atom = parse_atom(lx);
    while (lx.peek().kind == Tok::LParen || lx.peek().kind == Tok::LBracket) {
        ObjSuffix suf;
        if (lx.take().kind == Tok::LParen) {
            suf.is_shift = false;
            suf.d = parse_divisor_int(lx);
            lx.expect(Tok::RParen, "')' closing the twist divisor");
        } else {
            suf.is_shift = true;
            suf.k = parse_signed_int(lx, "the shift amount");
            lx.expect(Tok::RBracket, "']' closing the shift");
        }
        spec.suffixes.push_back(suf);
    }
    if (lx.peek().kind != Tok::End) lx.fail("a twist \"(D)\", a shift \"[n]\", or end of input");
    return spec;
}

std::string print_object(const ObjectSpec& spec) {
    std::string out;
    switch (spec.atom.kind) {
        case AtomKind::OS: out = "O_S"; break;
        case AtomKind::OSLine: out = "O_S(" + print_divisor_int(spec.atom.d) + ")"; break;
        case AtomKind::Ox: out = "O_x"; break;
        case AtomKind::Of: out = "O_f"; break;
        case AtomKind::OC0: out = "O_C0"; break;
        case AtomKind::Pullback:
            out = "p*(" + std::to_string(spec.atom.rho) + "," + std::to_string(spec.atom.delta) + ")";
            break;
    }
    for (const ObjSuffix& suf : spec.suffixes) {
        if (suf.is_shift) out += "[" + std::to_string(suf.k) + "]";
        else out += "(" + print_divisor_int(suf.d) + ")";
    }
    return out;
}

NumClass chern_of(const SurfaceData& S, const ObjectSpec& spec) {
    NumClass c;
    switch (spec.atom.kind) {
        case AtomKind::OS:
            c = {Rat(1), {}, Rat(0)};
            break;
        case AtomKind::OSLine: {
            DivisorClass D = spec.atom.d.to_class();
            c = {Rat(1), D, S.intersect(D, D) / 2};
            break;
        }
        case AtomKind::Ox:
            c = {Rat(0), {}, Rat(1)};
            break;
        case AtomKind::Of:
            // ch(O_D) = (0, D, -D^2/2), f^2 = 0
            c = {Rat(0), {Rat(0), Rat(1)}, Rat(0)};
            break;
        case AtomKind::OC0:
            c = {Rat(0), {Rat(1), Rat(0)}, Rat(-S.e) / 2};
            break;
        case AtomKind::Pullback:
            c = {Rat(spec.atom.rho), {Rat(0), Rat(spec.atom.delta)}, Rat(0)};
            break;
    }
    for (const ObjSuffix& suf : spec.suffixes) {
        if (suf.is_shift) c = shift_class(c, suf.k);
        else c = twist(S, c, suf.d.to_class());
    }
    return c;
}

DivisorClass parse_divisor_text(const std::string& text) {
    Lexer lx(text);
    DivisorClass d;
    auto term = [&](Rat sign) {
        if (lx.peek().kind == Tok::Number) {
            Token nt = lx.take();
            Rat k(Int(nt.text));
            if (lx.peek().kind == Tok::Slash) {
                lx.take();
                Token dt = lx.expect(Tok::Number, "an integer denominator");
                Int dv(dt.text);
                if (dv == 0) throw ParseError(dt.pos, "a nonzero denominator", "\"0\"");
                k /= dv;
            }
            k *= sign;
            if (lx.peek().kind == Tok::Star) lx.take();
            if (lx.peek().kind == Tok::Ident) {
                Token name = lx.take();
                if (name.text == "C0") d.c0 += k;
                else if (name.text == "f") d.f += k;
                else throw ParseError(name.pos, "\"C0\" or \"f\"", "\"" + name.text + "\"");
                return;
            }
            if (k == 0) return;
            lx.fail("\"C0\" or \"f\" after the coefficient (only the zero divisor may be a bare number)");
        } else if (lx.peek().kind == Tok::Ident) {
            Token name = lx.take();
            if (name.text == "C0") d.c0 += sign;
            else if (name.text == "f") d.f += sign;
            else throw ParseError(name.pos, "\"C0\" or \"f\"", "\"" + name.text + "\"");
        } else {
            lx.fail("a divisor term (rational coefficient, \"C0\", \"f\", or \"0\")");
        }
    };
    Rat sign(1);
    if (lx.peek().kind == Tok::Plus) lx.take();
    else if (lx.peek().kind == Tok::Minus) { lx.take(); sign = -1; }
    term(sign);
    while (lx.peek().kind == Tok::Plus || lx.peek().kind == Tok::Minus) {
        sign = lx.take().kind == Tok::Plus ? 1 : -1;
        term(sign);
    }
    if (lx.peek().kind != Tok::End) lx.fail("'+', '-', or end of input");
    return d;
}

std::string component_name(GluingComponent c) {
    switch (c) {
        case GluingComponent::D1: return "D1";
        case GluingComponent::D2: return "D2";
        case GluingComponent::Mixed: return "Mixed";
    }
    return "?";
}

CatalogEntry make_entry(const SurfaceData& S, const ObjectSpec& spec) {
    CatalogEntry entry;
    entry.spec = spec;
    entry.ch = chern_of(S, spec);
    CurveClass l = push_lambda1(S, entry.ch);
    CurveClass r = push_rho2(S, entry.ch);
    if (l.is_zero() && !r.is_zero()) {
        entry.component = GluingComponent::D2;
        entry.factor_class = r;
        entry.factor_standard_phase = standard_phase(r);
    } else if (r.is_zero() && !l.is_zero()) {
        entry.component = GluingComponent::D1;
        entry.factor_class = l;
        entry.factor_standard_phase = standard_phase(l);
    } else {
        entry.component = GluingComponent::Mixed;
    }
    return entry;
}

std::vector<CatalogEntry> build_catalog(const SurfaceData& S) {
    static const char* names[] = {
        "O_S",        "O_x",        "O_f",          "O_C0",     "O_S(-C0)",
        "O_f(-C0)",   "O_f(-C0)[1]", "O_S(C0)",     "p*(1,0)",  "p*(0,1)",
        "p*(1,1)",    "p*(1,0)(-C0)", "O_x[1]",     "O_S(2*C0+3*f)",
    };
    std::vector<CatalogEntry> out;
    out.reserve(std::size(names));
    for (const char* name : names) out.push_back(make_entry(S, name));
    return out;
}

PhasePoint standard_phase(const CurveClass& g) {
    if (g.is_zero()) throw DomainError("zero curve class has no phase");
    return phase_of(g.standard_charge(), 1);
}

std::optional<PhasePoint> glued_phase(const GluedDescriptor& gd, const CatalogEntry& entry) {
    if (entry.component == GluingComponent::Mixed) return std::nullopt;
    if (!entry.factor_class || entry.factor_class->is_zero())
        throw DomainError("zero curve class has no phase");
    const LiftedGL& t = entry.component == GluingComponent::D1 ? gd.A1 : gd.A2;
    return apply(inverse(t), *entry.factor_standard_phase);
}

}  // namespace stab
