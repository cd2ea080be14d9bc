#include "stab/rational.hpp"

#include <cctype>

namespace stab {

std::string rat_str(const Rat& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

Rat rat_parse(const std::string& text) {
    if (text.empty()) throw DomainError("empty rational literal");
    std::size_t i = 0;
    auto scan_int = [&](const char* what) {
        std::size_t start = i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        std::size_t digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) { ++i; ++digits; }
        if (digits == 0)
            throw DomainError(std::string("malformed rational \"") + text + "\": expected " + what);
        return text.substr(start, i - start);
    };
    std::string n = scan_int("integer numerator");
    std::string d = "1";
    if (i < text.size() && text[i] == '/') {
        ++i;
        d = scan_int("integer denominator");
    }
    if (i != text.size())
        throw DomainError("malformed rational \"" + text + "\": trailing characters at offset " + std::to_string(i));
    Int dn(d);
    if (dn == 0) throw DomainError("malformed rational \"" + text + "\": zero denominator");
    return Rat(Int(n), dn);
}

double rat_double(const Rat& q) { return q.convert_to<double>(); }

std::string gauss_str(const GaussQ& z) {
    if (z.im == 0) return rat_str(z.re);
    std::string im_part = (z.im == 1) ? "i" : (z.im == -1) ? "-i" : rat_str(z.im) + " i";
    if (z.re == 0) return im_part;
    if (z.im > 0) {
        std::string tail = (z.im == 1) ? "i" : rat_str(z.im) + " i";
        return rat_str(z.re) + " + " + tail;
    }
    std::string tail = (z.im == -1) ? "i" : rat_str(-z.im) + " i";
    return rat_str(z.re) + " - " + tail;
}

Mat2 Mat2::inverse() const {
    Rat dt = det();
    if (dt == 0) throw DomainError("singular 2x2 matrix has no inverse");
    return {d / dt, -b / dt, -c / dt, a / dt};
}

}  // namespace stab
