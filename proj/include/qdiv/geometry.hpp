#pragma once

#include "qdiv/field.hpp"
#include "qdiv/surd.hpp"

namespace qdiv {

/// The five ellipses f(x-i, y-j) <= M centered at lattice points
/// (0,0), (0,1), (1,0), (0,-1), (-1,0).
enum class EllipseId { E00, E01, E10, E0m1, Em10 };

/// Center offset (i, j) of an ellipse tag.
std::pair<int, int> ellipse_center(EllipseId id);

struct CoverageReport {
    int ell = 0;
    int denom = 0;
    long checked = 0;
    std::vector<Point2Q> violations; // sorted, order-independent of evaluation
};

/// Exact value of the shifted form at p; membership in the ellipse means
/// value <= M.
Rational ellipse_value(const FieldParams& F, EllipseId id, const Point2Q& p);

/// The common point I = (ell/(4ell-1), (2ell-1)/(4ell-1)) of E00, E01 and
/// E10; the three form values at I are verified to equal M before returning.
Point2Q intersection_point(int ell);

/// Grid certificate for the opposite-sign quadrants: f(a, b) <= M at every
/// grid point with a*b <= 0, plus the corner values f(-1/2, 0) = 1/4 and
/// f(0, 1/2) = ell/4.
CoverageReport opposite_sign_check(const FieldParams& F, int denom);

/// Grid certificate that E00, E01, E10 cover [0,1/2]^2 at resolution
/// 1/denom (coordinates clipped to the square).
CoverageReport coverage_check(int ell, int denom);

/// The named points of the covering proof for a half-integer field.
/// x_P, y_R, y_S are exact surds; Q = (1/2, 1/2). Construction is
/// sign-verified: P, Q, S inside or on E01; R on E00 and inside E10.
struct ProofPoints {
    int ell;
    QuadSurd x_p; // P = (x_p, 1/2) on the boundary of E00
    Point2Q q;    // (1/2, 1/2)
    QuadSurd y_r; // R = (1/2, y_r) on the boundary of E00
    QuadSurd y_s; // S = (1/2, y_s) on the boundary of E01
};

ProofPoints proof_points(int ell);

/// Exact minimum of norm_form(p - gamma) over lattice points gamma with
/// coordinates within `radius` of p's bounding integers. The truncation is
/// checked: the minimum must not be attained on the outer shell only.
Rational euclidean_min_at(const FieldParams& F, const Point2Q& p, int radius);

} // namespace qdiv
