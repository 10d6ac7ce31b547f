#include "qdiv/division.hpp"
#include "qdiv/geometry.hpp"
#include "qdiv/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace qdiv;

namespace {

constexpr int EXIT_DOMAIN = 1;
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_INVARIANT = 3;

void print_output(const json& j, bool as_json) {
    if (as_json) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : j.items()) {
        if (value.is_string())
            std::cout << key << " = " << value.get<std::string>() << "\n";
        else
            std::cout << key << " = " << value.dump() << "\n";
    }
}

json report_to_json(const CoverageReport& rep) {
    json j;
    j["ell"] = rep.ell;
    j["denom"] = rep.denom;
    j["checked"] = rep.checked;
    json v = json::array();
    for (const Point2Q& p : rep.violations) v.push_back(to_string(p));
    j["violations"] = v;
    return j;
}

void print_report(const CoverageReport& rep, bool as_json, const char* command) {
    if (as_json) {
        json j = report_to_json(rep);
        j["command"] = command;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "checked " << rep.checked << " points, " << rep.violations.size()
              << " violations\n";
    for (const Point2Q& p : rep.violations)
        std::cout << "violation at (" << to_string(p) << ")\n";
}

void require_half_integer(const FieldParams& F) {
    if (F.omega_kind != OmegaKind::HalfInteger)
        throw std::domain_error("this command needs m in {-3, -7, -11}");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact division, gcd and covering certificates for the five "
                 "norm-Euclidean imaginary quadratic fields"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "structured output");

    int m = -3, ell = 1, denom = 100, radius = 2;
    std::string u_str, v_str, a_str, b_str, point_str, output_path;

    auto add_m = [&](CLI::App* cmd) {
        cmd->add_option("-m,--field", m, "field parameter m")->required();
    };

    CLI::App* c_divide = app.add_subcommand("divide", "Euclidean division u = q*v + r");
    add_m(c_divide);
    c_divide->add_option("--u", u_str)->required();
    c_divide->add_option("--v", v_str)->required();

    CLI::App* c_gcd = app.add_subcommand("gcd", "greatest common divisor");
    add_m(c_gcd);
    c_gcd->add_option("--u", u_str)->required();
    c_gcd->add_option("--v", v_str)->required();

    CLI::App* c_xgcd = app.add_subcommand("xgcd", "extended gcd with Bezout coefficients");
    add_m(c_xgcd);
    c_xgcd->add_option("--u", u_str)->required();
    c_xgcd->add_option("--v", v_str)->required();

    CLI::App* c_qed = app.add_subcommand("qed", "ellipse shift for a fractional point");
    add_m(c_qed);
    c_qed->add_option("--a", a_str)->required();
    c_qed->add_option("--b", b_str)->required();

    CLI::App* c_cover = app.add_subcommand("cover", "grid covering certificate for S0");
    c_cover->add_option("--ell", ell, "ell in {1,2,3}")->required();
    c_cover->add_option("--denom", denom, "grid denominator");

    CLI::App* c_lemma1 = app.add_subcommand("lemma1", "opposite-sign quadrant certificate");
    add_m(c_lemma1);
    c_lemma1->add_option("--denom", denom, "grid denominator");

    CLI::App* c_min = app.add_subcommand("minimum", "Euclidean minimum at a rational point");
    add_m(c_min);
    c_min->add_option("--point", point_str, "rational point x,y")->required();
    c_min->add_option("--radius", radius, "enumeration radius");

    CLI::App* c_pp = app.add_subcommand("proofpoints", "exact proof points P, Q, R, S");
    c_pp->add_option("--ell", ell, "ell in {1,2,3}")->required();

    CLI::App* c_fig = app.add_subcommand("figure", "SVG figure of the covering");
    c_fig->add_option("--ell", ell, "ell in {1,2,3}")->required();
    c_fig->add_option("-o,--output", output_path, "output path (stdout if omitted)");

    for (CLI::App* sub : app.get_subcommands(nullptr))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : EXIT_USAGE;
    }

    try {
        if (c_divide->parsed()) {
            FieldParams F = field_params(m);
            QuadInt u = parse_element(u_str), v = parse_element(v_str);
            DivisionResult d = divide(F, u, v);
            json j;
            j["command"] = "divide";
            j["m"] = m;
            j["u"] = to_string(u);
            j["v"] = to_string(v);
            j["q"] = to_string(d.q);
            j["r"] = to_string(d.r);
            j["norm_r"] = norm(F, d.r).get_str();
            j["bound"] = to_string(Rational(F.M * norm(F, v)));
            print_output(j, as_json);
        } else if (c_gcd->parsed()) {
            FieldParams F = field_params(m);
            QuadInt u = parse_element(u_str), v = parse_element(v_str);
            std::vector<Int> norms;
            QuadInt g = gcd(F, u, v, &norms);
            json j;
            j["command"] = "gcd";
            j["m"] = m;
            j["u"] = to_string(u);
            j["v"] = to_string(v);
            j["g"] = to_string(g);
            j["steps"] = norms.size();
            print_output(j, as_json);
        } else if (c_xgcd->parsed()) {
            FieldParams F = field_params(m);
            QuadInt u = parse_element(u_str), v = parse_element(v_str);
            XgcdResult x = xgcd(F, u, v);
            json j;
            j["command"] = "xgcd";
            j["m"] = m;
            j["u"] = to_string(u);
            j["v"] = to_string(v);
            j["g"] = to_string(x.g);
            j["s"] = to_string(x.s);
            j["t"] = to_string(x.t);
            print_output(j, as_json);
        } else if (c_qed->parsed()) {
            FieldParams F = field_params(m);
            require_half_integer(F);
            Rational a = parse_rational(a_str), b = parse_rational(b_str);
            Shift s = qed_shift(F, a, b);
            json j;
            j["command"] = "qed";
            j["m"] = m;
            j["a"] = to_string(a);
            j["b"] = to_string(b);
            j["da"] = s.da;
            j["db"] = s.db;
            j["shifted_value"] = to_string(Rational(norm_form(F, {a + s.da, b + s.db})));
            print_output(j, as_json);
        } else if (c_cover->parsed()) {
            CoverageReport rep = coverage_check(ell, denom);
            print_report(rep, as_json, "cover");
            if (!rep.violations.empty()) return EXIT_INVARIANT;
        } else if (c_lemma1->parsed()) {
            FieldParams F = field_params(m);
            require_half_integer(F);
            CoverageReport rep = opposite_sign_check(F, denom);
            print_report(rep, as_json, "lemma1");
            if (!rep.violations.empty()) return EXIT_INVARIANT;
        } else if (c_min->parsed()) {
            FieldParams F = field_params(m);
            Point2Q p = parse_point(point_str);
            Rational v = euclidean_min_at(F, p, radius);
            json j;
            j["command"] = "minimum";
            j["m"] = m;
            j["point"] = to_string(p);
            j["minimum"] = to_string(v);
            print_output(j, as_json);
        } else if (c_pp->parsed()) {
            ProofPoints pp = proof_points(ell);
            Point2Q I = intersection_point(ell);
            json j;
            j["command"] = "proofpoints";
            j["ell"] = ell;
            j["x_P"] = pp.x_p.to_string();
            j["Q"] = to_string(pp.q);
            j["y_R"] = pp.y_r.to_string();
            j["y_S"] = pp.y_s.to_string();
            j["I"] = to_string(I);
            char buf[128];
            std::snprintf(buf, sizeof buf, "P=(%.3f,0.5) R=(0.5,%.3f) S=(0.5,%.3f)",
                          pp.x_p.to_double(), pp.y_r.to_double(), pp.y_s.to_double());
            j["approx"] = buf;
            print_output(j, as_json);
        } else if (c_fig->parsed()) {
            if (output_path.empty()) {
                emit_figure(ell, std::cout);
            } else {
                std::ofstream out(output_path, std::ios::binary);
                if (!out)
                    throw std::runtime_error("cannot open output path: " + output_path);
                emit_figure(ell, out);
            }
        }
    } catch (const coverage_violation& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return EXIT_INVARIANT;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_DOMAIN;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_DOMAIN;
    }
    return 0;
}
