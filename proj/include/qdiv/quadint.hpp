#pragma once

#include "qdiv/field.hpp"

namespace qdiv {

/// Element u0 + u1*omega of the ring of integers, exact coordinates.
struct QuadInt {
    Int u0;
    Int u1;

    QuadInt() : u0(0), u1(0) {}
    QuadInt(Int a, Int b) : u0(std::move(a)), u1(std::move(b)) {}

    bool operator==(const QuadInt&) const = default;
    bool is_zero() const { return u0 == 0 && u1 == 0; }

    QuadInt operator+(const QuadInt& o) const { return {u0 + o.u0, u1 + o.u1}; }
    QuadInt operator-(const QuadInt& o) const { return {u0 - o.u0, u1 - o.u1}; }
    QuadInt operator-() const { return {-u0, -u1}; }
};

/// Exact product, reduced with omega^2 = omega - ell (half-integer fields)
/// or omega^2 = m (pure-root fields).
QuadInt mul(const FieldParams& F, const QuadInt& x, const QuadInt& y);

/// Field conjugate: (u0+u1, -u1) for half-integer fields, (u0, -u1) otherwise.
QuadInt conj(const FieldParams& F, const QuadInt& u);

/// Norm(u) = u * conj(u); nonnegative, zero only at zero.
Int norm(const FieldParams& F, const QuadInt& u);

/// Units of the ring: 4 for m=-1, 6 for m=-3, {1,-1} otherwise.
std::vector<QuadInt> units(const FieldParams& F);

/// Parses `u0`, `u0+u1w`, `u0-u1w`, or `u0,u1` (spaces allowed).
QuadInt parse_element(const std::string& text);

/// Prints `u0` when u1 = 0, otherwise `u0+u1w` / `u0-u1w`; re-parses to the
/// identical element.
std::string to_string(const QuadInt& u);

} // namespace qdiv
