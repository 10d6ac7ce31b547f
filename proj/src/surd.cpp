#include "qdiv/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace qdiv {

QuadSurd::QuadSurd(Int p, Int q, Int r, Int d)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
    if (r_ == 0) throw std::domain_error("QuadSurd: zero denominator");
    if (d_ < 0) throw std::domain_error("QuadSurd: negative radicand");
    normalize();
}

QuadSurd QuadSurd::from_rational(const Rational& a, const Int& d) {
    return {a.get_num(), 0, a.get_den(), d};
}

void QuadSurd::normalize() {
    if (r_ < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    if (q_ == 0 || d_ == 0) {
        q_ = 0;
        d_ = 0;
    }
    Int g = ::gcd(::gcd(p_, q_), r_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

void QuadSurd::require_same_radicand(const QuadSurd& o) const {
    if (d_ != 0 && o.d_ != 0 && d_ != o.d_)
        throw std::domain_error("QuadSurd: mixed radicands " + d_.get_str() +
                                " and " + o.d_.get_str());
}

QuadSurd QuadSurd::operator+(const QuadSurd& o) const {
    require_same_radicand(o);
    Int d = d_ != 0 ? d_ : o.d_;
    return {p_ * o.r_ + o.p_ * r_, q_ * o.r_ + o.q_ * r_, r_ * o.r_, d};
}

QuadSurd QuadSurd::operator-(const QuadSurd& o) const { return *this + (-o); }

QuadSurd QuadSurd::operator-() const { return {-p_, -q_, r_, d_}; }

QuadSurd QuadSurd::operator*(const QuadSurd& o) const {
    require_same_radicand(o);
    Int d = d_ != 0 ? d_ : o.d_;
    return {p_ * o.p_ + q_ * o.q_ * d, p_ * o.q_ + q_ * o.p_, r_ * o.r_, d};
}

QuadSurd QuadSurd::operator*(const Rational& a) const {
    return {p_ * a.get_num(), q_ * a.get_num(), r_ * a.get_den(), d_};
}

QuadSurd QuadSurd::operator+(const Rational& a) const {
    return *this + from_rational(a, d_);
}

QuadSurd QuadSurd::operator-(const Rational& a) const {
    return *this - from_rational(a, d_);
}

int QuadSurd::sign() const {
    int sp = sgn(p_), sq = sgn(q_);
    if (q_ == 0 || d_ == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // opposite signs: compare p^2 against q^2 * d
    Int lhs = p_ * p_;
    Int rhs = q_ * q_ * d_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sp : sq;
}

int QuadSurd::compare(const Rational& a) const {
    return (*this - a).sign();
}

double QuadSurd::to_double() const {
    return (p_.get_d() + q_.get_d() * std::sqrt(d_.get_d())) / r_.get_d();
}

std::string QuadSurd::to_string() const {
    if (is_rational()) {
        Rational v(p_, r_);
        v.canonicalize();
        return v.get_str();
    }
    std::string s = "(" + p_.get_str();
    s += (q_ < 0) ? "-" : "+";
    Int aq = abs(q_);
    if (aq != 1) s += aq.get_str() + "*";
    s += "sqrt(" + d_.get_str() + "))/" + r_.get_str();
    return s;
}

} // namespace qdiv
