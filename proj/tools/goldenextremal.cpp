#include <CLI11.hpp>

#include "goldenext/construct.hpp"
#include "goldenext/extremal.hpp"
#include "goldenext/fibonacci.hpp"
#include "goldenext/goldenseq.hpp"
#include "goldenext/pretty.hpp"
#include "goldenext/render.hpp"
#include "goldenext/result_document.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using namespace goldenext;

namespace {

std::string fmt_f(double v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

std::string fmt_e(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

std::string yn(bool v) { return v ? "yes" : "no"; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// Flat key = value report: one table line and one document output per call.
struct Report {
    ResultDocument doc;
    std::vector<std::string> lines;

    void banner(const std::string& text) { lines.push_back(text); }
    void row(const std::string& key, const std::string& value) {
        lines.push_back(key + " = " + value);
        doc.add_output(key, value);
    }
    void raw(const std::string& key, const std::string& value, const std::string& line) {
        lines.push_back(line);
        doc.add_output(key, value);
    }
};

void emit(const Report& report, const std::string& format) {
    if (format == "json") {
        std::cout << report.doc.to_json();
        return;
    }
    if (format == "csv") {
        std::cout << "key,value\n";
        std::cout << "command," << csv_field(report.doc.command) << "\n";
        std::cout << "tool_version," << csv_field(report.doc.tool_version) << "\n";
        for (const auto& [k, v] : report.doc.parameters)
            std::cout << csv_field(k) << "," << csv_field(v) << "\n";
        for (const auto& [k, v] : report.doc.outputs)
            std::cout << csv_field(k) << "," << csv_field(v) << "\n";
        return;
    }
    for (const std::string& line : report.lines) std::cout << line << "\n";
}

// ----- solve -----

void report_perimeter(Report& report, const PerimeterSolution& sol) {
    report.row("constraint_set", sol.constraint_set);
    report.row("perimeter", fmt_f(sol.perimeter));
    report.row("ab", fmt_f(sol.ab));
    report.row("ac", fmt_f(sol.ac));
    report.row("bc", fmt_f(sol.bc));
    report.row("beta", fmt_f(sol.beta));
    report.row("gamma", fmt_f(sol.gamma));
    report.row("obtuse_apex", yn(sol.obtuse_apex));
    report.row("angle_class", to_string(sol.feasibility.angle_class));
    report.row("diameter_contained", yn(sol.feasibility.diameter_contained));
    report.row("tangency_on_ab", yn(sol.feasibility.tangency_on_segment_ab));
    report.row("tangency_on_ac", yn(sol.feasibility.tangency_on_segment_ac));
    report.row("stationarity_residual", fmt_e(sol.stationarity_residual));
    report.row("feasibility_residual", fmt_e(sol.feasibility_residual));
    report.row("iterations", std::to_string(sol.trace.size()));
}

int cmd_solve(const std::string& problem, double tol, bool strict_diameter,
              bool both_readings, const std::string& format) {
    SolverOptions options;
    options.strict_diameter = strict_diameter;

    Report report;
    report.doc.command = "solve";
    report.doc.add_parameter("problem", problem);
    report.doc.add_parameter("tol", fmt_e(tol));
    report.doc.add_parameter("strict_diameter", yn(strict_diameter));
    report.row("problem", problem);

    if (problem == "area") {
        const AreaSolution analytic = solve_min_area_analytic();
        const AreaSolution numeric = solve_min_area_numeric(tol, MinAreaBranch::ac_longest,
                                                            options);
        const std::string area_digits = qphi_to_float(*analytic.area_exact, 10,
                                                      Rounding::nearest);
        report.raw("phi_cubed_over_two", area_digits, "phi^3/2 = " + area_digits);
        report.row("x_exact", to_string(*analytic.x_exact));
        report.row("ab_exact", to_string(*analytic.ab_exact));
        report.row("ac_exact", to_string(*analytic.ac_exact));
        report.row("bc_exact", to_string(*analytic.bc_exact));
        report.row("area_exact", to_string(*analytic.area_exact));
        report.row("sides_pretty", pretty_qphi(*analytic.ab_exact) + ", " +
                                       pretty_qphi(*analytic.ac_exact) + ", " +
                                       pretty_radical(*analytic.bc_exact));
        report.row("area_pretty", pretty_qphi(*analytic.area_exact));
        report.row("apex_sine_exactly_one", yn(analytic.sin_theta_is_one_exact));
        report.row("analytic_x", fmt_f(analytic.x));
        report.row("analytic_area", fmt_f(analytic.area));
        report.row("numeric_x", fmt_f(numeric.x));
        report.row("numeric_ab", fmt_f(numeric.ab));
        report.row("numeric_ac", fmt_f(numeric.ac));
        report.row("numeric_bc", fmt_f(numeric.bc));
        report.row("numeric_area", fmt_f(numeric.area));
        report.row("agreement_x", fmt_e(std::abs(numeric.x - analytic.x)));
        report.row("agreement_area", fmt_e(std::abs(numeric.area - analytic.area)));
        report.row("sin_theta_gap", fmt_e(numeric.sin_theta_gap));
        report.row("no_triangle_residual", fmt_e(numeric.no_triangle_residual));
        report.row("bracket_width", fmt_e(numeric.bracket_width));
    } else if (problem == "perimeter-no-triangle") {
        report_perimeter(report, solve_min_perimeter_no_triangle(tol, options));
    } else if (problem == "perimeter-nonacute") {
        const PerimeterSolution sol = solve_min_perimeter_nonacute(tol, options);
        const std::string closed = fmt_f(4.0 + 2.0 * std::sqrt(2.0));
        report.raw("perimeter_closed_form", closed,
                   "perimeter_closed_form = " + closed + " (4 + 2√2)");
        report_perimeter(report, sol);
        if (both_readings) {
            SolverOptions layered = options;
            layered.require_no_triangle = true;
            const PerimeterSolution combined = solve_min_perimeter_nonacute(tol, layered);
            report.row("constraint_reading", "nonacute_and_no_triangle");
            report.row("combined_perimeter", fmt_f(combined.perimeter));
            report.row("combined_ab", fmt_f(combined.ab));
            report.row("combined_ac", fmt_f(combined.ac));
            report.row("combined_bc", fmt_f(combined.bc));
            report.row("combined_constraint_set", combined.constraint_set);
        }
    } else {
        const PerimeterSolution sol = solve_min_perimeter_isosceles(tol, options);
        // Half-triangle proportions (1, sqrt(phi), phi), printed from the
        // exact constants rather than the solver's floats.
        const std::string vh = radical_to_float(Radical(QPhi(1), QPhi::phi()), 8,
                                                Rounding::nearest);
        const std::string sh = qphi_to_float(QPhi::phi(), 8, Rounding::nearest);
        report.raw("v_over_h_closed_form", vh + " (√φ)", "v/h = " + vh + " (√φ)");
        report.raw("s_over_h_closed_form", sh + " (φ)", "s/h = " + sh + " (φ)");
        report_perimeter(report, sol);
        if (sol.v_over_h) report.row("v_over_h_numeric", fmt_f(*sol.v_over_h));
        if (sol.s_over_h) report.row("s_over_h_numeric", fmt_f(*sol.s_over_h));
    }
    report.row("tolerance", fmt_e(tol));
    emit(report, format);
    return 0;
}

// ----- sequence -----

struct SequenceRow {
    std::string n;
    std::string f_n;
    std::string f_n1;
    std::string sides_pretty;
    std::string short_exact;
    std::string mid_exact;
    std::string long_exact;
    std::string area_exact;
    std::string area_float;
};

SequenceRow make_row(const std::string& label, const std::string& f_n, const std::string& f_n1,
                     const Radical& s, const Radical& m, const Radical& l, const Radical& area) {
    SequenceRow row;
    row.n = label;
    row.f_n = f_n;
    row.f_n1 = f_n1;
    row.sides_pretty = pretty_radical(s) + ", " + pretty_radical(m) + ", " + pretty_radical(l);
    row.short_exact = to_string(s);
    row.mid_exact = to_string(m);
    row.long_exact = to_string(l);
    row.area_exact = to_string(area);
    row.area_float = radical_to_float(area, 12, Rounding::nearest);
    return row;
}

int cmd_sequence(unsigned n_max, const std::string& format) {
    if (n_max < 1 || n_max > 500) {
        throw std::invalid_argument("--n-max must lie in 1..500");
    }
    std::vector<SequenceRow> rows;
    for (unsigned n = 1; n <= n_max; ++n) {
        const GoldenTriangleEntry e = tn_entry(n);
        rows.push_back(make_row(std::to_string(n), fib(n).str(), fib(n + 1).str(), e.side_short,
                                e.side_mid, e.side_long, e.area));
    }
    const LimitTriangle limit = tn_limit();
    rows.push_back(
        make_row("limit", "", "", limit.side_short, limit.side_mid, limit.side_long, limit.area));

    if (format == "csv") {
        std::cout << "n,f_n,f_n_plus_1,side_short,side_mid,side_long,sides_pretty,area_exact,"
                     "area_float\n";
        for (const SequenceRow& r : rows) {
            std::cout << csv_field(r.n) << "," << csv_field(r.f_n) << "," << csv_field(r.f_n1)
                      << "," << csv_field(r.short_exact) << "," << csv_field(r.mid_exact) << ","
                      << csv_field(r.long_exact) << "," << csv_field(r.sides_pretty) << ","
                      << csv_field(r.area_exact) << "," << csv_field(r.area_float) << "\n";
        }
        return 0;
    }
    if (format == "json") {
        ResultDocument doc;
        doc.command = "sequence";
        doc.add_parameter("n_max", std::to_string(n_max));
        unsigned index = 1;
        for (const SequenceRow& r : rows) {
            char prefix[32];
            if (r.n == "limit") {
                std::snprintf(prefix, sizeof(prefix), "row_limit_");
            } else {
                std::snprintf(prefix, sizeof(prefix), "row_%03u_", index++);
            }
            const std::string p = prefix;
            doc.add_output(p + "n", r.n);
            if (!r.f_n.empty()) doc.add_output(p + "f_n", r.f_n);
            if (!r.f_n1.empty()) doc.add_output(p + "f_n_plus_1", r.f_n1);
            doc.add_output(p + "side_short", r.short_exact);
            doc.add_output(p + "side_mid", r.mid_exact);
            doc.add_output(p + "side_long", r.long_exact);
            doc.add_output(p + "sides_pretty", r.sides_pretty);
            doc.add_output(p + "area_exact", r.area_exact);
            doc.add_output(p + "area_float", r.area_float);
        }
        std::cout << doc.to_json();
        return 0;
    }
    std::cout << "right triangles T_n on a unit short leg (F_1 = F_2 = 1)\n";
    for (const SequenceRow& r : rows) {
        if (r.n == "limit") {
            std::cout << "limit  sides = " << r.sides_pretty << "  area = " << r.area_float
                      << "  area_exact = " << r.area_exact << "\n";
        } else {
            std::cout << "n=" << r.n << "  F_n=" << r.f_n << "  F_{n+1}=" << r.f_n1
                      << "  sides = " << r.sides_pretty << "  area = " << r.area_float
                      << "  area_exact = " << r.area_exact << "\n";
        }
    }
    return 0;
}

// ----- render -----

int cmd_render(const std::string& figure, unsigned width, unsigned height, bool annotate,
               unsigned n_max, std::string out_path, const std::string& format) {
    RenderSpec spec;
    if (figure == "fig1") spec.figure = FigureKind::fig1_min_area;
    if (figure == "fig2") spec.figure = FigureKind::fig2_sequence;
    if (figure == "fig3") spec.figure = FigureKind::fig3_construction;
    spec.width_px = width;
    spec.height_px = height;
    spec.annotate = annotate;
    spec.n_max = n_max;
    if (out_path.empty()) out_path = figure + ".svg";

    const Figure fig = render_figure(spec);
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open " + out_path + " for writing");
    file << fig.svg;
    file.close();
    if (!file) throw std::invalid_argument("failed writing " + out_path);

    Report report;
    report.doc.command = "render";
    report.doc.add_parameter("figure", figure);
    report.doc.add_parameter("width", std::to_string(width));
    report.doc.add_parameter("height", std::to_string(height));
    report.doc.add_parameter("annotate", yn(annotate));
    if (figure == "fig2") report.doc.add_parameter("n_max", std::to_string(n_max));
    report.raw("path", out_path,
               "wrote " + out_path + " (" + std::to_string(fig.svg.size()) + " bytes)");
    report.doc.add_output("bytes", std::to_string(fig.svg.size()));
    emit(report, format);
    return 0;
}

// ----- verify -----

bool verify_identities(Report& report) {
    const QPhi phi = QPhi::phi();
    bool ok = true;

    QPhi acc(1);
    unsigned bad = 0;
    for (unsigned n = 1; n <= 100 && bad == 0; ++n) {
        acc *= phi;
        const auto [f_top, f_low] = phi_pow_decompose(n - 1);
        if (acc != QPhi(BigRational(fib(n - 1)), BigRational(fib(n))) ||
            f_top != fib(n) || f_low != fib(n - 1)) {
            bad = n;
        }
    }
    if (bad == 0) {
        report.raw("eq2", "OK n=1..100", "Eq2 OK n=1..100");
    } else {
        report.raw("eq2", "FAIL at n=" + std::to_string(bad),
                   "Eq2 FAIL at n=" + std::to_string(bad));
        ok = false;
    }

    unsigned bad_sides = 0;
    unsigned bad_area = 0;
    for (unsigned n = 1; n <= 100 && bad_sides == 0 && bad_area == 0; ++n) {
        const GoldenTriangleEntry e = tn_entry(n);
        const QPhi ratio = phi * QPhi(BigRational(fib(n + 1), fib(n)));
        if (!radical_equal(e.side_short, Radical::from_qphi(QPhi(1))) ||
            !radical_equal(e.side_mid, Radical(QPhi(1), ratio)) ||
            !radical_equal(e.side_long, Radical(QPhi(1), QPhi(1) + ratio))) {
            bad_sides = n;
        }
        if (!radical_equal(tn_area(n), Radical(QPhi(BigRational(1, 2)), ratio))) bad_area = n;
    }
    if (bad_sides == 0) {
        report.raw("eq2a", "OK n=1..100", "Eq2a OK n=1..100");
    } else {
        report.raw("eq2a", "FAIL at n=" + std::to_string(bad_sides),
                   "Eq2a FAIL at n=" + std::to_string(bad_sides));
        ok = false;
    }
    if (bad_area == 0) {
        report.raw("eq2c", "OK n=1..100", "Eq2c OK n=1..100");
    } else {
        report.raw("eq2c", "FAIL at n=" + std::to_string(bad_area),
                   "Eq2c FAIL at n=" + std::to_string(bad_area));
        ok = false;
    }

    if (kepler_geometric_progression_check()) {
        report.raw("kepler_t1", "OK", "T1 sides in geometric progression: OK");
    } else {
        report.raw("kepler_t1", "FAIL", "T1 sides in geometric progression: FAIL");
        ok = false;
    }
    return ok;
}

bool verify_bounds(Report& report) {
    bool ok = true;
    const BoundsReport bounds = tn_area_bounds_check(100);
    const bool equality_right = bounds.equality_at == std::vector<unsigned>{1, 2};
    if (bounds.all_pass && equality_right) {
        report.raw("eq2b", "OK, equality at n=1,2", "Eq2b OK, equality at n=1,2");
    } else if (!bounds.all_pass) {
        const std::string at = bounds.counterexample
                                   ? " at n=" + std::to_string(*bounds.counterexample)
                                   : "";
        report.raw("eq2b", "FAIL" + at, "Eq2b FAIL" + at);
        ok = false;
    } else {
        report.raw("eq2b", "FAIL, unexpected equality set", "Eq2b FAIL, unexpected equality set");
        ok = false;
    }
    if (bounds.alternation_ok) {
        report.raw("alternation", "OK n=1..100", "area alternation OK n=1..100");
    } else {
        report.raw("alternation", "FAIL", "area alternation FAIL");
        ok = false;
    }

    const InfeasibilityProof proof = prove_r_longest_infeasible(100001);
    if (proof.infeasible && proof.grid_min > 1.0) {
        report.raw("r_longest_infeasible", "OK, apex sine >= " + fmt_f(proof.grid_min, 6),
                   "no circumscribing triangle has the radius longest: OK (apex sine >= " +
                       fmt_f(proof.grid_min, 6) + " > 1)");
    } else {
        report.raw("r_longest_infeasible", "FAIL", "radius-longest infeasibility: FAIL");
        ok = false;
    }
    return ok;
}

bool verify_construction(Report& report) {
    const auto [trace, cert] = construct_T2();
    bool ok = true;
    auto line = [&](const std::string& key, const std::string& label, bool pass) {
        report.raw(key, pass ? "OK" : "FAIL", label + ": " + (pass ? "OK" : "FAIL"));
        ok = ok && pass;
    };
    line("steps_replayable", "trace replays to " + std::to_string(trace.steps().size()) +
                                 " identical steps",
         ConstructionTrace::parse(trace.serialize()).serialize() == trace.serialize());
    line("bo_oc_ratio_phi", "BO:OC = φ exact", cert.bo_oc_ratio_is_phi);
    line("eo_diagonal", "EO = AC diagonal exact", cert.eo_matches_rect_diagonal);
    line("be_sq_two_phi", "BE^2 = 2φ exact", cert.be_sq == QPhi(0, 2));
    line("right_angle_b", "right angle at B exact", cert.right_angle_at_b);
    line("pythagoras", "BE^2 + BC^2 = EC^2 exact", cert.pythagoras);
    line("matches_t2", "sides match T_2 = (1, √(2φ), φ·√φ) exact", cert.matches_t2);
    return ok;
}

int cmd_verify(const std::string& suite, const std::string& format) {
    Report report;
    report.doc.command = "verify";
    report.doc.add_parameter("suite", suite);
    bool ok = true;
    if (suite == "identities" || suite == "all") ok = verify_identities(report) && ok;
    if (suite == "bounds" || suite == "all") ok = verify_bounds(report) && ok;
    if (suite == "construction" || suite == "all") ok = verify_construction(report) && ok;
    report.row("result", ok ? "all checks passed" : "FAILURES PRESENT");
    emit(report, format);
    return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and numeric toolkit for triangles circumscribing a semicircle"};
    app.require_subcommand(1);

    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();

    std::string problem;
    double tol = 1e-9;
    bool strict_diameter = false;
    bool both_readings = false;
    CLI::App* solve = app.add_subcommand("solve", "run an extremal solver");
    solve->fallthrough();
    solve->add_option("problem", problem, "which extremal problem")
        ->required()
        ->check(CLI::IsMember({"area", "perimeter-no-triangle", "perimeter-nonacute",
                               "perimeter-isosceles"}));
    solve->add_option("--tol", tol, "numeric tolerance")->capture_default_str();
    solve->add_flag("--strict-diameter", strict_diameter,
                    "reject candidates whose diameter containment fails");
    solve->add_flag("--both-constraint-readings", both_readings,
                    "also solve the perimeter problem with the no-triangle condition layered on");

    unsigned n_max_seq = 10;
    CLI::App* sequence = app.add_subcommand("sequence", "list the golden right-triangle family");
    sequence->fallthrough();
    sequence->add_option("--n-max", n_max_seq, "largest index (1..500)")->capture_default_str();

    std::string figure;
    unsigned width = 800;
    unsigned height = 600;
    bool no_annotate = false;
    unsigned n_max_fig = 3;
    std::string out_path;
    CLI::App* render = app.add_subcommand("render", "write an SVG figure");
    render->fallthrough();
    render->add_option("figure", figure, "which figure")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
    render->add_option("--width", width, "canvas width in px")->capture_default_str();
    render->add_option("--height", height, "canvas height in px")->capture_default_str();
    render->add_flag("--no-annotate", no_annotate, "suppress point labels");
    render->add_option("--n-max", n_max_fig, "triangles to overlay (fig2)")
        ->capture_default_str();
    render->add_option("--out", out_path, "output path (default <figure>.svg)");

    std::string suite;
    CLI::App* verify = app.add_subcommand("verify", "run the exact identity suites");
    verify->fallthrough();
    verify->add_option("suite", suite, "which suite")
        ->required()
        ->check(CLI::IsMember({"identities", "bounds", "construction", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(solve))
            return cmd_solve(problem, tol, strict_diameter, both_readings, format);
        if (app.got_subcommand(sequence)) return cmd_sequence(n_max_seq, format);
        if (app.got_subcommand(render))
            return cmd_render(figure, width, height, !no_annotate, n_max_fig, out_path, format);
        if (app.got_subcommand(verify)) return cmd_verify(suite, format);
    } catch (const NonConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
