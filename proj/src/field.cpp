#include "qdiv/field.hpp"

#include <regex>
#include <stdexcept>

namespace qdiv {

FieldParams field_params(int m) {
    switch (m) {
    case -1:
        return {-1, 0, Rational(1, 2), OmegaKind::PureRoot};
    case -2:
        return {-2, 0, Rational(3, 4), OmegaKind::PureRoot};
    case -3:
    case -7:
    case -11: {
        int ell = (1 - m) / 4;
        return {m, ell, Rational(ell * ell, 4 * ell - 1), OmegaKind::HalfInteger};
    }
    default:
        throw std::domain_error("unsupported field m=" + std::to_string(m) +
                                "; the norm-Euclidean values are -1, -2, -3, -7, -11");
    }
}

Rational norm_form(const FieldParams& F, const Point2Q& p) {
    if (F.omega_kind == OmegaKind::HalfInteger)
        return p.x * p.x + p.x * p.y + F.ell * p.y * p.y;
    return p.x * p.x + (-F.m) * p.y * p.y;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

std::string to_string(const Point2Q& p) {
    return to_string(p.x) + "," + to_string(p.y);
}

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

} // namespace

Rational parse_rational(const std::string& text) {
    static const std::regex re(R"(^([+-]?\d+)(?:/([+-]?\d+))?$)");
    std::smatch m;
    std::string s = strip_spaces(text);
    if (!std::regex_match(s, m, re))
        throw std::invalid_argument("malformed rational: '" + text + "'");
    Int num(m[1].str());
    Int den = m[2].matched ? Int(m[2].str()) : Int(1);
    if (den == 0)
        throw std::invalid_argument("zero denominator in rational: '" + text + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Point2Q parse_point(const std::string& text) {
    std::string s = strip_spaces(text);
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("malformed point (expected x,y): '" + text + "'");
    return {parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1))};
}

} // namespace qdiv
