#pragma once

#include "qdiv/field.hpp"

namespace qdiv {

/// Exact number (p + q*sqrt(d))/r with integer p, q, r > 0, d >= 0.
/// Closed under ring operations as long as d stays fixed; the sign is
/// decided by integer comparisons only.
class QuadSurd {
public:
    QuadSurd() : p_(0), q_(0), r_(1), d_(0) {}
    QuadSurd(Int p, Int q, Int r, Int d);

    static QuadSurd from_rational(const Rational& a, const Int& d);

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& r() const { return r_; }
    const Int& d() const { return d_; }

    QuadSurd operator+(const QuadSurd& o) const;
    QuadSurd operator-(const QuadSurd& o) const;
    QuadSurd operator-() const;
    QuadSurd operator*(const QuadSurd& o) const; // same radicand required
    QuadSurd operator*(const Rational& a) const;
    QuadSurd operator+(const Rational& a) const;
    QuadSurd operator-(const Rational& a) const;

    /// -1, 0 or +1, decided exactly.
    int sign() const;

    /// sign(*this - a)
    int compare(const Rational& a) const;

    bool is_rational() const { return q_ == 0 || d_ == 0; }

    double to_double() const;
    std::string to_string() const;

private:
    void normalize();
    void require_same_radicand(const QuadSurd& o) const;

    Int p_, q_, r_, d_;
};

} // namespace qdiv
