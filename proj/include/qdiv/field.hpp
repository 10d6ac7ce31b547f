#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace qdiv {

using Int = mpz_class;
using Rational = mpq_class;

/// Exact rational point of the plane.
struct Point2Q {
    Rational x;
    Rational y;

    bool operator==(const Point2Q&) const = default;
};

enum class OmegaKind {
    HalfInteger, // omega = (1 + sqrt(m))/2, m = 1 - 4*ell
    PureRoot,    // omega = sqrt(m)
};

/// Constants of one of the five norm-Euclidean imaginary quadratic fields
/// Q(sqrt(m)), m in {-1, -2, -3, -7, -11}.
struct FieldParams {
    int m;
    int ell;    // (1-m)/4 for half-integer fields; 0 otherwise
    Rational M; // Euclidean minimum of the field
    OmegaKind omega_kind;
};

/// Looks up the field constants for m; throws std::domain_error for any m
/// outside the five norm-Euclidean values.
FieldParams field_params(int m);

/// Exact value of the norm form at a rational point:
/// x^2 + x*y + ell*y^2 for half-integer fields, x^2 + |m|*y^2 otherwise.
Rational norm_form(const FieldParams& F, const Point2Q& p);

std::string to_string(const Rational& r);
std::string to_string(const Point2Q& p);

/// Parses `p/q` or `p`; result is canonical with positive denominator.
Rational parse_rational(const std::string& text);

/// Parses `x,y` with rational coordinates.
Point2Q parse_point(const std::string& text);

} // namespace qdiv
