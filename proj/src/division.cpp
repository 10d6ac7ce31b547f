#include "qdiv/division.hpp"

namespace qdiv {

std::pair<Int, Rational> round_centered(const Int& w, const Int& n) {
    if (n == 0) throw std::domain_error("round_centered: zero divisor");
    // q = ceil((2w - n) / (2n)) puts the remainder in (-1/2, 1/2],
    // rounding half-integers toward -infinity.
    Int q;
    Int num = 2 * w - n;
    Int den = 2 * n;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Rational rem(w - q * n, n);
    rem.canonicalize();
    return {q, rem};
}

Shift qed_shift(const FieldParams& F, const Rational& a, const Rational& b) {
    int sa = sgn(a), sb = sgn(b);
    if (sa * sb <= 0) return {0, 0}; // E00 by the opposite-signs lemma

    Rational f = a * (a + b) + F.ell * b * b;
    if (f <= F.M) return {0, 0};

    Rational aa = abs(a), bb = abs(b);
    Rational g = f - F.M; // f is even, so unchanged by taking |a|, |b|

    Shift shift;
    if (g <= 2 * aa + bb - 1) {
        shift = {-1, 0}; // f(aa-1, bb) <= M, i.e. (aa, bb) in E10
    } else if (g <= aa + F.ell * (2 * bb - 1)) {
        shift = {0, -1}; // f(aa, bb-1) <= M, i.e. (aa, bb) in E01
    } else {
        throw coverage_violation("qed_shift: point (" + to_string(a) + "," +
                                 to_string(b) + ") not covered by any ellipse");
    }
    if (sa < 0) shift = {-shift.da, -shift.db};
    return shift;
}

DivisionResult divide(const FieldParams& F, const QuadInt& u, const QuadInt& v) {
    if (v.is_zero()) throw std::domain_error("divide: division by zero");

    QuadInt w = mul(F, u, conj(F, v));
    Int n = norm(F, v);
    auto [q0, a] = round_centered(w.u0, n);
    auto [q1, b] = round_centered(w.u1, n);

    Shift shift; // pure-root fields: centered rounding already reaches M
    if (F.omega_kind == OmegaKind::HalfInteger)
        shift = qed_shift(F, a, b);

    QuadInt q{q0 - shift.da, q1 - shift.db};
    QuadInt r = u - mul(F, q, v);
    return {std::move(q), std::move(r)};
}

namespace {

bool lex_greater(const QuadInt& x, const QuadInt& y) {
    if (x.u0 != y.u0) return x.u0 > y.u0;
    return x.u1 > y.u1;
}

} // namespace

std::pair<QuadInt, QuadInt> canonical_associate(const FieldParams& F, const QuadInt& u) {
    QuadInt best = u, best_unit{1, 0};
    for (const QuadInt& e : units(F)) {
        QuadInt cand = mul(F, e, u);
        if (lex_greater(cand, best)) {
            best = cand;
            best_unit = e;
        }
    }
    return {best, best_unit};
}

QuadInt gcd(const FieldParams& F, const QuadInt& u, const QuadInt& v,
            std::vector<Int>* remainder_norms) {
    if (u.is_zero() && v.is_zero())
        throw std::domain_error("gcd(0, 0) is undefined");
    QuadInt a = u, b = v;
    while (!b.is_zero()) {
        DivisionResult d = divide(F, a, b);
        a = std::move(b);
        b = std::move(d.r);
        if (remainder_norms) remainder_norms->push_back(norm(F, b));
    }
    return canonical_associate(F, a).first;
}

XgcdResult xgcd(const FieldParams& F, const QuadInt& u, const QuadInt& v) {
    if (u.is_zero() && v.is_zero())
        throw std::domain_error("xgcd(0, 0) is undefined");
    QuadInt r0 = u, r1 = v;
    QuadInt s0{1, 0}, s1{0, 0};
    QuadInt t0{0, 0}, t1{1, 0};
    while (!r1.is_zero()) {
        DivisionResult d = divide(F, r0, r1);
        r0 = std::move(r1);
        r1 = std::move(d.r);
        QuadInt s2 = s0 - mul(F, d.q, s1);
        QuadInt t2 = t0 - mul(F, d.q, t1);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    auto [g, e] = canonical_associate(F, r0);
    return {g, mul(F, e, s0), mul(F, e, t0)};
}

} // namespace qdiv
