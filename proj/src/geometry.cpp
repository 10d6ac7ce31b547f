#include "qdiv/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdiv {

std::pair<int, int> ellipse_center(EllipseId id) {
    switch (id) {
    case EllipseId::E00: return {0, 0};
    case EllipseId::E01: return {0, 1};
    case EllipseId::E10: return {1, 0};
    case EllipseId::E0m1: return {0, -1};
    case EllipseId::Em10: return {-1, 0};
    }
    throw std::logic_error("bad EllipseId");
}

Rational ellipse_value(const FieldParams& F, EllipseId id, const Point2Q& p) {
    auto [i, j] = ellipse_center(id);
    return norm_form(F, {p.x - i, p.y - j});
}

namespace {

FieldParams field_for_ell(int ell) {
    if (ell < 1 || ell > 3)
        throw std::domain_error("ell must be 1, 2 or 3 (m = -3, -7, -11)");
    return field_params(1 - 4 * ell);
}

bool sorted_point_less(const Point2Q& a, const Point2Q& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

} // namespace

Point2Q intersection_point(int ell) {
    FieldParams F = field_for_ell(ell);
    Point2Q I{Rational(ell, 4 * ell - 1), Rational(2 * ell - 1, 4 * ell - 1)};
    for (EllipseId id : {EllipseId::E00, EllipseId::E01, EllipseId::E10})
        if (ellipse_value(F, id, I) != F.M)
            throw std::logic_error("intersection point does not lie on all three ellipses");
    return I;
}

CoverageReport opposite_sign_check(const FieldParams& F, int denom) {
    if (denom < 1) throw std::domain_error("denom must be >= 1");
    CoverageReport rep;
    rep.ell = F.ell;
    rep.denom = denom;

    // corner values from the lemma's proof
    if (F.omega_kind == OmegaKind::HalfInteger) {
        Rational corner_a = norm_form(F, {Rational(-1, 2), Rational(0)});
        Rational corner_b = norm_form(F, {Rational(0), Rational(1, 2)});
        if (corner_a != Rational(1, 4) || corner_b != Rational(F.ell) / 4)
            throw std::logic_error("corner identities violated");
        rep.checked += 2;
        if (corner_a > F.M) rep.violations.push_back({Rational(-1, 2), Rational(0)});
        if (corner_b > F.M) rep.violations.push_back({Rational(0), Rational(1, 2)});
    }

    const Int n = denom;
    const Int bound = F.M.get_num() * n * n;
    const Int den_m = F.M.get_den();
    for (Int i = 0; 2 * i <= n; ++i) {
        for (Int j = 0; 2 * j <= n; ++j) {
            // f(i/n, -j/n) = f(-i/n, j/n), scaled by n^2
            Int val;
            if (F.omega_kind == OmegaKind::HalfInteger)
                val = i * i - i * j + F.ell * j * j;
            else
                val = i * i + (-F.m) * j * j;
            rep.checked += 2;
            if (den_m * val > bound) {
                Rational x(i, n), y(j, n);
                x.canonicalize();
                y.canonicalize();
                rep.violations.push_back({x, -y});
                rep.violations.push_back({-x, y});
            }
        }
    }
    std::sort(rep.violations.begin(), rep.violations.end(), sorted_point_less);
    return rep;
}

CoverageReport coverage_check(int ell, int denom) {
    FieldParams F = field_for_ell(ell);
    if (denom < 1) throw std::domain_error("denom must be >= 1");
    CoverageReport rep;
    rep.ell = ell;
    rep.denom = denom;

    // Grid coordinates are c/(2n) with c = min(2i, n), so the boundary 1/2
    // is always included; forms are evaluated as integers scaled by 4n^2.
    const long n = denom;
    const long L = ell;
    const long num_m = F.M.get_num().get_si();
    const long den_m = F.M.get_den().get_si();
    if (n > 100000000L)
        throw std::domain_error("denom too large for the integer grid kernel");
    const Int bound = Int(num_m) * 4 * Int(n) * Int(n);

    long half = (n + 1) / 2;
    for (long i = 0; i <= half; ++i) {
        long ci = std::min(2 * i, n);
        for (long j = 0; j <= half; ++j) {
            long cj = std::min(2 * j, n);
            ++rep.checked;
            // E00
            Int v00 = Int(ci) * ci + Int(ci) * cj + L * Int(cj) * cj;
            if (den_m * v00 <= bound) continue;
            // E01: y shifted by -1, i.e. cj - 2n
            Int tj = Int(cj) - 2 * n;
            Int v01 = Int(ci) * ci + Int(ci) * tj + L * tj * tj;
            if (den_m * v01 <= bound) continue;
            // E10: x shifted by -1
            Int ti = Int(ci) - 2 * n;
            Int v10 = ti * ti + ti * Int(cj) + L * Int(cj) * cj;
            if (den_m * v10 <= bound) continue;
            Rational x(ci, 2 * n), y(cj, 2 * n);
            x.canonicalize();
            y.canonicalize();
            rep.violations.push_back({x, y});
        }
    }
    std::sort(rep.violations.begin(), rep.violations.end(), sorted_point_less);
    return rep;
}

ProofPoints proof_points(int ell) {
    FieldParams F = field_for_ell(ell);
    const Rational& M = F.M;
    const int L = 4 * ell - 1;

    ProofPoints pp;
    pp.ell = ell;
    pp.q = {Rational(1, 2), Rational(1, 2)};

    // x_P: root of x^2 + x/2 + ell/4 = M in [0, 1/2]
    Int d1 = Int(8 * ell - 1) * L;
    pp.x_p = QuadSurd(-L, 1, 4 * L, d1);

    // y_R: positive root of ell*y^2 + y/2 + 1/4 = M;
    // y_S = 1 - 1/(2*ell) - y_R shares the radicand
    Int d2 = (Int(16) * ell * ell * ell - 16 * ell * ell + 8 * ell - 1) * L;
    pp.y_r = QuadSurd(-L, 1, 4 * ell * L, d2);
    pp.y_s = QuadSurd(Int(L) * L, -1, 4 * ell * L, d2);

    auto in_unit_range = [](const QuadSurd& v) {
        return v.sign() >= 0 && v.compare(Rational(1, 2)) <= 0;
    };
    auto f_at = [&](const QuadSurd& x, const QuadSurd& y) {
        return x * x + x * y + y * y * Rational(ell);
    };
    const Rational half(1, 2);

    // defining equations: P and R on E00, S on E01, all inside S0
    if (!in_unit_range(pp.x_p) || !in_unit_range(pp.y_r) || !in_unit_range(pp.y_s))
        throw std::logic_error("proof point outside [0, 1/2]");
    QuadSurd hx = QuadSurd::from_rational(half, d1);
    QuadSurd hy = QuadSurd::from_rational(half, d2);
    if (f_at(pp.x_p, hx).compare(M) != 0)
        throw std::logic_error("P is not on E00");
    if (f_at(hy, pp.y_r).compare(M) != 0)
        throw std::logic_error("R is not on E00");
    if (f_at(hy, pp.y_s - Rational(1)).compare(M) != 0)
        throw std::logic_error("S is not on E01");

    // the covering proof's membership steps, sign-exact
    if (f_at(pp.x_p, -hx).compare(M) > 0)
        throw std::logic_error("P is not inside E01");
    if (norm_form(F, {half, -half}) > M)
        throw std::logic_error("Q is not inside E01");
    if (f_at(-hy, pp.y_r).compare(M) > 0)
        throw std::logic_error("R is not inside E10");
    return pp;
}

namespace {

Int floor_of(const Rational& a) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
    return q;
}

Int ceil_of(const Rational& a) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
    return q;
}

} // namespace

Rational euclidean_min_at(const FieldParams& F, const Point2Q& p, int radius) {
    if (radius < 1) throw std::domain_error("radius must be >= 1");
    Int x_lo = floor_of(p.x) - radius, x_hi = ceil_of(p.x) + radius;
    Int y_lo = floor_of(p.y) - radius, y_hi = ceil_of(p.y) + radius;

    bool have_interior = false, have_shell = false;
    Rational best, best_shell;
    for (Int g0 = x_lo; g0 <= x_hi; ++g0) {
        for (Int g1 = y_lo; g1 <= y_hi; ++g1) {
            Rational v = norm_form(F, {p.x - Rational(g0), p.y - Rational(g1)});
            bool on_shell = g0 == x_lo || g0 == x_hi || g1 == y_lo || g1 == y_hi;
            if (on_shell) {
                if (!have_shell || v < best_shell) { best_shell = v; have_shell = true; }
            } else {
                if (!have_interior || v < best) { best = v; have_interior = true; }
            }
        }
    }
    // the truncation is trustworthy only if the outer shell never improves
    // on the interior minimum
    if (!have_interior || best_shell < best)
        throw std::domain_error("euclidean_min_at: radius too small, minimum on boundary shell");
    return best;
}

} // namespace qdiv
