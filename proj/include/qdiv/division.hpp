#pragma once

#include "qdiv/quadint.hpp"

#include <stdexcept>
#include <utility>

namespace qdiv {

/// Raised when the ellipse-selection procedure reaches its ERROR branch.
/// Unreachable for inputs in the centered unit square; reaching it means a
/// broken invariant, not a user error.
struct coverage_violation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Quotient correction returned by the ellipse-shift procedure.
/// At most one coordinate is nonzero.
struct Shift {
    int da = 0;
    int db = 0;
    bool operator==(const Shift&) const = default;
};

struct DivisionResult {
    QuadInt q;
    QuadInt r;
};

struct XgcdResult {
    QuadInt g;
    QuadInt s;
    QuadInt t;
};

/// Nearest-integer rounding of w/N with remainder in (-1/2, 1/2]:
/// half-integers round toward -infinity, so rem = +1/2 at ties.
std::pair<Int, Rational> round_centered(const Int& w, const Int& n);

/// Given (a, b) in [-1/2,1/2]^2 for a half-integer field, returns
/// (da, db) with norm_form(a+da, b+db) <= M. Opposite signs (including
/// zeros) need no shift; otherwise the shifted forms are tested through
/// the incremental identities
///   f(x-1, y) = f(x, y) - 2x - y + 1,
///   f(x, y-1) = f(x, y) - x - ell*(2y - 1),
/// applied to |a|, |b| and sign-corrected at the end.
Shift qed_shift(const FieldParams& F, const Rational& a, const Rational& b);

/// Euclidean division U = Q*V + R with Norm(R) <= M * Norm(V), exact.
DivisionResult divide(const FieldParams& F, const QuadInt& u, const QuadInt& v);

/// The associate of u with lexicographically greatest coordinate pair,
/// together with the unit that maps u to it.
std::pair<QuadInt, QuadInt> canonical_associate(const FieldParams& F, const QuadInt& u);

/// Euclidean chain on divide; result is the canonical associate.
/// When `remainder_norms` is given, the norm of every intermediate
/// remainder is appended (strictly decreasing).
QuadInt gcd(const FieldParams& F, const QuadInt& u, const QuadInt& v,
            std::vector<Int>* remainder_norms = nullptr);

/// Extended Euclidean chain: s*U + t*V = g, with g = gcd(U, V).
XgcdResult xgcd(const FieldParams& F, const QuadInt& u, const QuadInt& v);

} // namespace qdiv
