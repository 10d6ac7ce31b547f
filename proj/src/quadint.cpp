#include "qdiv/quadint.hpp"

#include <regex>
#include <stdexcept>

namespace qdiv {

QuadInt mul(const FieldParams& F, const QuadInt& x, const QuadInt& y) {
    if (F.omega_kind == OmegaKind::HalfInteger) {
        // omega^2 = omega - ell
        return {x.u0 * y.u0 - F.ell * (x.u1 * y.u1),
                x.u0 * y.u1 + x.u1 * y.u0 + x.u1 * y.u1};
    }
    // omega^2 = m
    return {x.u0 * y.u0 + F.m * (x.u1 * y.u1), x.u0 * y.u1 + x.u1 * y.u0};
}

QuadInt conj(const FieldParams& F, const QuadInt& u) {
    if (F.omega_kind == OmegaKind::HalfInteger)
        return {u.u0 + u.u1, -u.u1};
    return {u.u0, -u.u1};
}

Int norm(const FieldParams& F, const QuadInt& u) {
    if (F.omega_kind == OmegaKind::HalfInteger)
        return u.u0 * u.u0 + u.u0 * u.u1 + F.ell * (u.u1 * u.u1);
    return u.u0 * u.u0 + (-F.m) * (u.u1 * u.u1);
}

std::vector<QuadInt> units(const FieldParams& F) {
    switch (F.m) {
    case -1:
        return {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    case -3:
        // powers of omega, a primitive sixth root of unity
        return {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    default:
        return {{1, 0}, {-1, 0}};
    }
}

QuadInt parse_element(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;

    static const std::regex pair_re(R"(^([+-]?\d+),([+-]?\d+)$)");
    static const std::regex sum_re(R"(^([+-]?\d+)([+-])(\d*)w$)");
    static const std::regex int_re(R"(^([+-]?\d+)$)");
    static const std::regex omega_re(R"(^([+-]?)(\d*)w$)");
    std::smatch m;
    if (std::regex_match(s, m, pair_re))
        return {Int(m[1].str()), Int(m[2].str())};
    if (std::regex_match(s, m, sum_re)) {
        Int u1 = m[3].length() ? Int(m[3].str()) : Int(1);
        if (m[2].str() == "-") u1 = -u1;
        return {Int(m[1].str()), u1};
    }
    if (std::regex_match(s, m, int_re))
        return {Int(m[1].str()), 0};
    if (std::regex_match(s, m, omega_re)) {
        Int u1 = m[2].length() ? Int(m[2].str()) : Int(1);
        if (m[1].str() == "-") u1 = -u1;
        return {0, u1};
    }
    throw std::invalid_argument("malformed element: '" + text + "'");
}

std::string to_string(const QuadInt& u) {
    if (u.u1 == 0) return u.u0.get_str();
    std::string s = u.u0.get_str();
    s += (u.u1 < 0) ? "-" : "+";
    s += Int(abs(u.u1)).get_str();
    s += "w";
    return s;
}

} // namespace qdiv
