#include "qdiv/svg.hpp"

#include "qdiv/geometry.hpp"

#include <cmath>
#include <cstdio>

namespace qdiv {

namespace {

std::string fmt(double v) {
    // avoid "-0.000000"
    if (std::fabs(v) < 5e-7) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

double rational_to_double(const Rational& r) {
    return r.get_d();
}

} // namespace

void emit_figure(int ell, std::ostream& out) {
    // Ellipse f(x,y) = M has matrix [[1, 1/2], [1/2, ell]]; semi-axes are
    // sqrt(M/lambda) along the eigenvectors.
    FieldParams F = field_params(1 - 4 * ell);
    ProofPoints pp = proof_points(ell);
    Point2Q I = intersection_point(ell);

    double M = rational_to_double(F.M);
    double tr = 1.0 + ell;
    double disc = std::sqrt((ell - 1.0) * (ell - 1.0) + 1.0);
    double lmin = (tr - disc) / 2.0;
    double lmax = (tr + disc) / 2.0;
    double rx = std::sqrt(M / lmin); // major axis
    double ry = std::sqrt(M / lmax);
    double angle_deg = std::atan2(2.0 * (lmin - 1.0), 1.0) * 180.0 / M_PI;

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
           "viewBox=\"-2 -2 4 4\">\n";
    // flip y so the figure reads with y upward
    out << "<g transform=\"scale(1,-1)\" stroke-width=\"0.01\">\n";
    out << "<line x1=\"-2\" y1=\"0\" x2=\"2\" y2=\"0\" stroke=\"black\"/>\n";
    out << "<line x1=\"0\" y1=\"-2\" x2=\"0\" y2=\"2\" stroke=\"black\"/>\n";
    out << "<rect x=\"-0.5\" y=\"-0.5\" width=\"1\" height=\"1\" fill=\"none\" "
           "stroke=\"black\"/>\n";

    const double centers[5][2] = {{0, 0}, {0, 1}, {1, 0}, {0, -1}, {-1, 0}};
    for (const auto& c : centers) {
        out << "<ellipse cx=\"0\" cy=\"0\" rx=\"" << fmt(rx) << "\" ry=\"" << fmt(ry)
            << "\" fill=\"none\" stroke=\"blue\" transform=\"translate(" << fmt(c[0])
            << "," << fmt(c[1]) << ") rotate(" << fmt(angle_deg) << ")\"/>\n";
    }

    struct Mark {
        const char* name;
        double x, y;
    };
    const Mark marks[5] = {
        {"P", pp.x_p.to_double(), 0.5},
        {"Q", 0.5, 0.5},
        {"R", 0.5, pp.y_r.to_double()},
        {"S", 0.5, pp.y_s.to_double()},
        {"I", rational_to_double(I.x), rational_to_double(I.y)},
    };
    for (const Mark& m : marks) {
        out << "<circle cx=\"" << fmt(m.x) << "\" cy=\"" << fmt(m.y)
            << "\" r=\"0.02\" fill=\"red\"/>\n";
        out << "<text x=\"" << fmt(m.x + 0.04) << "\" y=\"" << fmt(-(m.y + 0.04))
            << "\" font-size=\"0.12\" transform=\"scale(1,-1)\">" << m.name
            << "</text>\n";
    }
    out << "</g>\n</svg>\n";
}

} // namespace qdiv
