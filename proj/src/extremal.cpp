#include "goldenext/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace goldenext {

namespace {

constexpr double kInvPhiF = 0.6180339887498949;
constexpr double kInf = std::numeric_limits<double>::infinity();

double apex_sine(double ab, double ac) { return (ab + ac) / (ab * ac); }

// Perimeter of the tangent triangle with slant lengths (ab, ac) on the given
// apex branch. Infeasible pairs (apex sine above 1) return +inf.
double perimeter_uv(double ab, double ac, bool obtuse_apex) {
    double s = apex_sine(ab, ac);
    if (s > 1.0) return kInf;
    double c = std::sqrt(std::max(0.0, 1.0 - s * s));
    if (obtuse_apex) c = -c;
    double bc = std::sqrt(ab * ab + ac * ac - 2.0 * ab * ac * c);
    return ab + ac + bc;
}

struct GoldenResult {
    double x = 0;
    double value = 0;
    double width = 0;
};

// Golden-section minimization on [lo, hi]. Deterministic; the iterate trace
// is appended to *trace when given.
template <class F>
GoldenResult golden_min(F&& f, double lo, double hi, double tol, unsigned max_iter,
                        std::vector<OptimizerIterate>* trace = nullptr) {
    double a = lo;
    double b = hi;
    double x1 = b - kInvPhiF * (b - a);
    double x2 = a + kInvPhiF * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (unsigned it = 0; it < max_iter && (b - a) > tol; ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhiF * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhiF * (b - a);
            f2 = f(x2);
        }
        if (trace) trace->push_back({it + 1, a, b, std::min(f1, f2)});
    }
    GoldenResult r;
    r.x = (f1 <= f2) ? x1 : x2;
    r.value = std::min(f1, f2);
    r.width = b - a;
    return r;
}

double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

double forward_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x)) / h;
}

double triangle_angle(double adj1, double adj2, double opposite) {
    double c = (adj1 * adj1 + adj2 * adj2 - opposite * opposite) / (2.0 * adj1 * adj2);
    return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace

bool valid_tolerance(double tol) {
    return std::isfinite(tol) && tol >= 1e-14 && tol <= 1e-3;
}

// ----- Case analysis -----

double sin_theta_r_longest(double x) {
    if (!(x > 0.0) || !(x < 1.0))
        throw std::domain_error("sin_theta_r_longest requires 0 < x < 1");
    return 1.0 / (x * (1.0 - x));
}

InfeasibilityProof prove_r_longest_infeasible(unsigned samples) {
    if (samples == 0) throw std::invalid_argument("need at least one sample");
    InfeasibilityProof proof;
    proof.samples = samples;
    proof.grid_min = kInf;
    for (unsigned i = 1; i <= samples; ++i) {
        double x = static_cast<double>(i) / (samples + 1.0);
        double v = sin_theta_r_longest(x);
        if (v < proof.grid_min) {
            proof.grid_min = v;
            proof.grid_argmin = x;
        }
    }
    // x(1-x) peaks at 1/4, so the exact minimum of the sine expression is 4;
    // a sine can never reach it, which kills this case.
    proof.analytic_min = 4.0;
    proof.analytic_argmin = 0.5;
    proof.infeasible = proof.grid_min > 1.0;
    return proof;
}

double sin_theta_ac_longest(double x) {
    if (!(x > 0.0)) throw std::domain_error("sin_theta_ac_longest requires x > 0");
    return (2.0 * x + 1.0) / (x * x + x);
}

QPhi sin_theta_ac_longest_exact(const QPhi& x) {
    if (x.sign() <= 0) throw std::domain_error("sin_theta_ac_longest requires x > 0");
    QPhi two_x_plus_1 = QPhi(BigRational(2)) * x + QPhi(BigRational(1));
    return two_x_plus_1 * (x * x + x).inverse();
}

double area_ac_longest(double x) {
    if (x < kPhiF - 1e-12)
        throw std::domain_error("area_ac_longest requires x >= phi (apex sine would exceed 1)");
    return (2.0 * x + 1.0) / 2.0;
}

QPhi area_ac_longest_exact(const QPhi& x) {
    if ((x - QPhi::phi()).sign() < 0)
        throw std::domain_error("area_ac_longest requires x >= phi (apex sine would exceed 1)");
    return (QPhi(BigRational(2)) * x + QPhi(BigRational(1))) * QPhi(BigRational(1, 2));
}

// ----- Minimum area -----

AreaSolution solve_min_area_analytic() {
    const QPhi phi = QPhi::phi();
    const QPhi one(BigRational(1));

    AreaSolution sol;
    sol.x_exact = phi;
    sol.ab_exact = phi;
    sol.ac_exact = phi * phi;
    sol.bc_exact = Radical(phi, QPhi(BigRational(2), BigRational(1)));
    sol.area_exact = area_ac_longest_exact(phi);
    sol.sin_theta_is_one_exact = sin_theta_ac_longest_exact(phi) == one;

    if (!((*sol.ac_exact - *sol.ab_exact - one).is_zero()))
        throw std::logic_error("no-triangle boundary not met at the optimum");

    sol.x = qphi_to_double(*sol.x_exact);
    sol.ab = qphi_to_double(*sol.ab_exact);
    sol.ac = qphi_to_double(*sol.ac_exact);
    sol.bc = radical_to_double(*sol.bc_exact);
    sol.area = qphi_to_double(*sol.area_exact);
    sol.sin_theta_gap = 0.0;
    sol.no_triangle_residual = 0.0;
    return sol;
}

AreaSolution solve_min_area_numeric(double tol, MinAreaBranch branch,
                                    const SolverOptions& options) {
    if (!valid_tolerance(tol))
        throw std::invalid_argument("tolerance must lie in [1e-14, 1e-3]");

    // Work with p = shorter slant, q = longer; the two branches only swap
    // labels on the way out.
    const unsigned n = std::max(options.grid_n, 16u);
    const double lo = 1.0005;
    const double hi = 8.0;
    double best_p = 0;
    double best_val = kInf;
    for (unsigned i = 0; i < n; ++i) {
        double p = lo + (hi - lo) * i / (n - 1.0);
        for (unsigned j = 0; j < n; ++j) {
            double q = lo + (hi - lo) * j / (n - 1.0);
            if (q < p + 1.0) continue;
            if (p + q > p * q) continue;
            double val = (p + q) / 2.0;
            if (val < best_val) {
                best_val = val;
                best_p = p;
            }
        }
    }
    if (!std::isfinite(best_val))
        throw NonConvergenceError("grid stage found no feasible point");

    // The area shrinks as q drops to p + 1, so refine along that edge. The
    // apex-sine cap turns into 2p+1 <= p^2+p there; the penalty keeps the
    // search one-sided without breaking unimodality.
    auto edge_objective = [](double p) {
        double violation = std::max(0.0, (2.0 * p + 1.0) - (p * p + p));
        return (2.0 * p + 1.0) / 2.0 + 50.0 * violation;
    };
    AreaSolution sol;
    GoldenResult g = golden_min(edge_objective, std::max(1.0, best_p - 0.75),
                                best_p + 0.75, tol, 200);
    if (g.width > tol)
        throw NonConvergenceError("edge refinement stalled above tolerance");

    double p = g.x;
    double q = p + 1.0;
    sol.x = p;
    sol.ab = branch == MinAreaBranch::ac_longest ? p : q;
    sol.ac = branch == MinAreaBranch::ac_longest ? q : p;
    double s = std::min(1.0, apex_sine(p, q));
    double c = std::sqrt(std::max(0.0, 1.0 - s * s));
    sol.bc = std::sqrt(p * p + q * q - 2.0 * p * q * c);
    sol.area = (p + q) / 2.0;
    sol.sin_theta_gap = 1.0 - apex_sine(p, q);
    sol.no_triangle_residual = std::abs(std::abs(sol.ac - sol.ab) - 1.0);
    sol.bracket_width = g.width;
    return sol;
}

// ----- Tangent-triangle realization -----

TriangleGeom realize_tangent_triangle(double ab, double ac, bool obtuse_apex) {
    if (!(ab > 0.0) || !(ac > 0.0))
        throw std::domain_error("slant lengths must be positive");
    double s = apex_sine(ab, ac);
    if (s > 1.0 + 1e-12)
        throw std::domain_error("no tangent triangle: apex sine exceeds 1");
    s = std::min(s, 1.0);
    double c = std::sqrt(std::max(0.0, 1.0 - s * s));
    if (obtuse_apex) c = -c;
    double bc = std::sqrt(ab * ab + ac * ac - 2.0 * ab * ac * c);

    double cos_b = std::clamp((ab * ab + bc * bc - ac * ac) / (2.0 * ab * bc), -1.0, 1.0);
    double sin_b = std::sqrt(1.0 - cos_b * cos_b);
    double cos_g = std::clamp((ac * ac + bc * bc - ab * ab) / (2.0 * ac * bc), -1.0, 1.0);
    double sin_g = std::sqrt(1.0 - cos_g * cos_g);

    // The distances from a point sliding along the base to the two slant
    // lines cross where both equal one; centering there puts the circle
    // center at the origin.
    double x_o = bc * sin_g / (sin_b + sin_g);
    TriangleGeom tri;
    tri.A = {ab * cos_b - x_o, ab * sin_b};
    tri.B = {-x_o, 0.0};
    tri.C = {bc - x_o, 0.0};
    tri.O = {0.0, 0.0};
    tri.R = 1.0;
    return tri;
}

FeasibilityReport feasibility_report(const TriangleGeom& tri) {
    FeasibilityReport rep;
    rep.diameter_contained = diameter_contained(tri);
    rep.tangency_on_segment_ab = tangency_foot_on_segment(tri, Side::AB);
    rep.tangency_on_segment_ac = tangency_foot_on_segment(tri, Side::AC);
    rep.angle_class = classify(tri);
    return rep;
}

// ----- Minimum perimeter, no-triangle constraint -----

PerimeterSolution solve_min_perimeter_no_triangle(double tol, const SolverOptions& options) {
    if (!valid_tolerance(tol))
        throw std::invalid_argument("tolerance must lie in [1e-14, 1e-3]");

    const unsigned n = std::max(options.grid_n, 16u);
    const double lo = 1.0005;
    const double hi = 10.0;
    double best_p = 0;
    double best_q = 0;
    bool best_obtuse = false;
    double best_val = kInf;
    for (unsigned i = 0; i < n; ++i) {
        double p = lo + (hi - lo) * i / (n - 1.0);
        for (unsigned j = 0; j < n; ++j) {
            double q = lo + (hi - lo) * j / (n - 1.0);
            if (q < p + 1.0) continue;
            for (bool obtuse : {false, true}) {
                double val = perimeter_uv(p, q, obtuse);
                if (val < best_val) {
                    best_val = val;
                    best_p = p;
                    best_q = q;
                    best_obtuse = obtuse;
                }
            }
        }
    }
    if (!std::isfinite(best_val))
        throw NonConvergenceError("grid stage found no feasible point");

    PerimeterSolution sol;
    sol.constraint_set = "no_triangle";
    sol.trace.push_back({0, best_p, best_q, best_val});

    // The grid minimum sits on the q = p + 1 edge (shrinking q only helps
    // until the constraint bites), so refine each apex branch along it. The
    // apex-sine cap confines the edge to p >= phi; a penalty proportional to
    // the overshoot keeps the search inside.
    auto edge = [](double p, bool obtuse) {
        double q = p + 1.0;
        double s = apex_sine(p, q);
        if (s > 1.0) {
            double bc = std::sqrt(p * p + q * q);
            return p + q + bc + 100.0 * (s - 1.0);
        }
        return perimeter_uv(p, q, obtuse);
    };

    double bracket_lo = std::max(1.05, best_p - 0.75);
    double bracket_hi = best_p + 0.75;
    GoldenResult best_branch;
    bool obtuse_won = false;
    for (bool obtuse : {false, true}) {
        std::vector<OptimizerIterate> branch_trace;
        GoldenResult g = golden_min([&](double p) { return edge(p, obtuse); },
                                    bracket_lo, bracket_hi, tol, 200, &branch_trace);
        if (g.width > tol)
            throw NonConvergenceError("edge refinement stalled above tolerance");
        if (!obtuse || g.value < best_branch.value) {
            best_branch = g;
            obtuse_won = obtuse;
            sol.trace.resize(1);
            sol.trace.insert(sol.trace.end(), branch_trace.begin(), branch_trace.end());
        }
    }

    double p = best_branch.x;
    double q = p + 1.0;
    sol.ab = p;
    sol.ac = q;
    sol.obtuse_apex = obtuse_won;
    sol.perimeter = perimeter_uv(p, q, obtuse_won);
    sol.bc = sol.perimeter - p - q;

    std::function<double(double)> along = [&](double t) { return edge(t, obtuse_won); };
    if (p > kPhiF + 1e-6) {
        sol.stationarity_residual = std::abs(central_diff(along, p, 1e-5));
    } else {
        sol.stationarity_residual = std::max(0.0, -forward_diff(along, p, 1e-5));
    }
    sol.feasibility_residual = std::max(0.0, (p + q) - p * q) / (p * q) +
                               std::max(0.0, 1.0 - (q - p));

    sol.triangle = realize_tangent_triangle(p, q, obtuse_won);
    sol.beta = triangle_angle(p, sol.bc, q);
    sol.gamma = triangle_angle(q, sol.bc, p);
    sol.feasibility = feasibility_report(sol.triangle);
    if (options.strict_diameter && !sol.feasibility.diameter_contained)
        throw NonConvergenceError("diameter containment rejected the optimum");
    return sol;
}

// ----- Minimum perimeter, non-acute constraint -----

namespace {

struct CurvePoint {
    double param = 0;
    double beta = 0;
    double gamma = 0;
    double value = kInf;
};

double perimeter_at(double beta, double gamma) {
    return perimeter(triangle_from_base_angles(BaseAngles(beta, gamma)));
}

double slant_gap(double beta, double gamma) {
    TriangleGeom tri = triangle_from_base_angles(BaseAngles(beta, gamma));
    return std::abs(side_length(tri, Side::AC) - side_length(tri, Side::AB));
}

}  // namespace

PerimeterSolution solve_min_perimeter_nonacute(double tol, const SolverOptions& options) {
    if (!valid_tolerance(tol))
        throw std::invalid_argument("tolerance must lie in [1e-14, 1e-3]");

    const double b_lo = 0.03;
    const double b_hi = std::numbers::pi / 2.0 - 0.03;
    const bool need_gap = options.require_no_triangle;

    auto feasible_extra = [&](double beta, double gamma) {
        if (need_gap && slant_gap(beta, gamma) < 1.0 - 1e-9) return false;
        if (options.strict_diameter &&
            !diameter_contained(triangle_from_base_angles(BaseAngles(beta, gamma))))
            return false;
        return true;
    };

    // Grid scan over all non-acute triangles to seed the active boundary.
    const unsigned n = std::max(options.grid_n, 16u);
    CurvePoint grid_best;
    for (unsigned i = 0; i < n; ++i) {
        double beta = 0.03 + (std::numbers::pi - 0.09) * i / (n - 1.0);
        for (unsigned j = 0; j < n; ++j) {
            double gamma = 0.03 + (std::numbers::pi - 0.09) * j / (n - 1.0);
            if (beta + gamma > std::numbers::pi - 0.03) continue;
            TriangleGeom tri = triangle_from_base_angles(BaseAngles(beta, gamma));
            if (classify(tri) == AngleClass::acute) continue;
            if (!feasible_extra(beta, gamma)) continue;
            double val = perimeter(tri);
            if (val < grid_best.value) grid_best = {beta, beta, gamma, val};
        }
    }
    if (!std::isfinite(grid_best.value))
        throw NonConvergenceError("grid stage found no feasible point");

    PerimeterSolution sol;
    sol.constraint_set = need_gap ? "no_triangle+non_acute" : "non_acute";
    sol.trace.push_back({0, grid_best.beta, grid_best.gamma, grid_best.value});

    // Candidate boundary curves: right apex (beta + gamma = pi/2) and a right
    // base angle (beta = pi/2; the gamma = pi/2 curve is its mirror image).
    CurvePoint best;
    std::vector<OptimizerIterate> best_trace;
    double vertex_corner = -1.0;

    {
        double lo_param = b_lo;
        if (need_gap) {
            // On the right-apex curve the slant gap grows monotonically away
            // from the isosceles point; bisect for the corner where it
            // reaches 1, then search the feasible side.
            double a = std::numbers::pi / 4.0 + 1e-9;
            double b = b_hi;
            if (slant_gap(b, std::numbers::pi / 2.0 - b) < 1.0)
                throw NonConvergenceError("no-triangle window missing on apex curve");
            for (int it = 0; it < 200 && (b - a) > 1e-15; ++it) {
                double mid = 0.5 * (a + b);
                if (slant_gap(mid, std::numbers::pi / 2.0 - mid) < 1.0)
                    a = mid;
                else
                    b = mid;
            }
            lo_param = b;
            vertex_corner = b;
        }
        std::vector<OptimizerIterate> curve_trace;
        GoldenResult g = golden_min(
            [&](double beta) { return perimeter_at(beta, std::numbers::pi / 2.0 - beta); },
            lo_param, b_hi, tol, 200, &curve_trace);
        if (g.width > tol)
            throw NonConvergenceError("apex-curve refinement stalled above tolerance");
        if (g.value < best.value) {
            best = {g.x, g.x, std::numbers::pi / 2.0 - g.x, g.value};
            best_trace = curve_trace;
        }
    }

    {
        // Right angle at the base vertex B: beta = pi/2, sweep gamma.
        auto right_b = [&](double gamma) {
            if (!feasible_extra(std::numbers::pi / 2.0, gamma)) return kInf;
            return perimeter_at(std::numbers::pi / 2.0, gamma);
        };
        std::vector<OptimizerIterate> curve_trace;
        GoldenResult g = golden_min(right_b, b_lo, b_hi, tol, 200, &curve_trace);
        if (std::isfinite(g.value) && g.value < best.value) {
            best = {g.x, std::numbers::pi / 2.0, g.x, g.value};
            best_trace = curve_trace;
        }
    }

    if (need_gap) {
        // Obtuse-apex stretch of the slant-gap boundary; its perimeter grows
        // with the short slant, so the search collapses onto the corner.
        auto gap_edge = [&](double p) {
            double q = p + 1.0;
            double s = apex_sine(p, q);
            if (s > 1.0) {
                double bc = std::sqrt(p * p + q * q);
                return p + q + bc + 100.0 * (s - 1.0);
            }
            return perimeter_uv(p, q, true);
        };
        std::vector<OptimizerIterate> curve_trace;
        GoldenResult g = golden_min(gap_edge, 1.05, 4.0, tol, 200, &curve_trace);
        if (g.value < best.value) {
            double p = g.x;
            double q = p + 1.0;
            double per = perimeter_uv(p, q, true);
            double bc = per - p - q;
            best = {g.x, triangle_angle(p, bc, q), triangle_angle(q, bc, p), per};
            best_trace = curve_trace;
        }
    }

    if (grid_best.value < best.value - 1e-7) {
        // The boundary curves should dominate; falling into this branch means
        // an interior obtuse point beat them, so polish it coordinate-wise.
        double beta = grid_best.beta;
        double gamma = grid_best.gamma;
        for (int round = 0; round < 40; ++round) {
            auto fb = [&](double b2) {
                TriangleGeom tri = triangle_from_base_angles(BaseAngles(b2, gamma));
                if (classify(tri) == AngleClass::acute || !feasible_extra(b2, gamma))
                    return kInf;
                return perimeter(tri);
            };
            beta = golden_min(fb, std::max(b_lo, beta - 0.1), beta + 0.1, tol, 200).x;
            auto fg = [&](double g2) {
                TriangleGeom tri = triangle_from_base_angles(BaseAngles(beta, g2));
                if (classify(tri) == AngleClass::acute || !feasible_extra(beta, g2))
                    return kInf;
                return perimeter(tri);
            };
            gamma = golden_min(fg, std::max(b_lo, gamma - 0.1), gamma + 0.1, tol, 200).x;
        }
        double val = perimeter_at(beta, gamma);
        if (val < best.value) best = {beta, beta, gamma, val};
    }

    sol.beta = best.beta;
    sol.gamma = best.gamma;
    sol.perimeter = best.value;
    sol.trace.insert(sol.trace.end(), best_trace.begin(), best_trace.end());

    TriangleGeom tri = triangle_from_base_angles(BaseAngles(sol.beta, sol.gamma));
    sol.triangle = tri;
    sol.ab = side_length(tri, Side::AB);
    sol.ac = side_length(tri, Side::AC);
    sol.bc = distance(tri.B, tri.C);
    sol.obtuse_apex = sol.beta + sol.gamma < std::numbers::pi / 2.0;
    sol.feasibility = feasibility_report(tri);

    // Stationarity along the active right-apex curve; at a corner both
    // feasible one-sided directions must be non-decreasing.
    std::function<double(double)> apex_curve = [&](double beta) {
        return perimeter_at(beta, std::numbers::pi / 2.0 - beta);
    };
    if (need_gap && vertex_corner > 0 && std::abs(sol.beta - vertex_corner) < 1e-6) {
        double d_apex = forward_diff(apex_curve, sol.beta, 1e-5);
        // The raw perimeter blows up a hair below the apex-sine cutoff, so
        // differentiate the penalized edge, which agrees with it on the
        // feasible side.
        std::function<double(double)> gap_curve = [](double p) {
            double q = p + 1.0;
            double s = apex_sine(p, q);
            if (s > 1.0)
                return p + q + std::sqrt(p * p + q * q) + 100.0 * (s - 1.0);
            return perimeter_uv(p, q, true);
        };
        double d_gap = forward_diff(gap_curve, sol.ab, 1e-5);
        sol.stationarity_residual =
            std::max(0.0, std::max(-d_apex, -d_gap));
    } else if (std::abs(sol.beta - std::numbers::pi / 2.0) < 1e-9) {
        std::function<double(double)> right_b_curve = [&](double gamma) {
            return perimeter_at(std::numbers::pi / 2.0, gamma);
        };
        sol.stationarity_residual = std::abs(central_diff(right_b_curve, sol.gamma, 1e-5));
    } else {
        sol.stationarity_residual = std::abs(central_diff(apex_curve, sol.beta, 1e-5));
    }

    double largest = std::max({sol.beta, sol.gamma,
                               std::numbers::pi - sol.beta - sol.gamma});
    sol.feasibility_residual = std::max(0.0, std::numbers::pi / 2.0 - largest);
    if (need_gap)
        sol.feasibility_residual += std::max(0.0, 1.0 - std::abs(sol.ac - sol.ab));
    return sol;
}

// ----- Minimum perimeter, isosceles family -----

PerimeterSolution solve_min_perimeter_isosceles(double tol, const SolverOptions& options) {
    if (!valid_tolerance(tol))
        throw std::invalid_argument("tolerance must lie in [1e-14, 1e-3]");
    (void)options;

    std::function<double(double)> objective = [](double beta) {
        return perimeter_at(beta, beta);
    };
    std::vector<OptimizerIterate> trace;
    GoldenResult g = golden_min(objective, 0.2, 1.35, tol, 200, &trace);
    if (g.width > tol)
        throw NonConvergenceError("isosceles refinement stalled above tolerance");

    PerimeterSolution sol;
    sol.constraint_set = "isosceles";
    sol.beta = g.x;
    sol.gamma = g.x;
    sol.perimeter = g.value;
    sol.trace = std::move(trace);

    TriangleGeom tri = triangle_from_base_angles(BaseAngles(sol.beta, sol.gamma));
    sol.triangle = tri;
    sol.ab = side_length(tri, Side::AB);
    sol.ac = side_length(tri, Side::AC);
    sol.bc = distance(tri.B, tri.C);
    sol.obtuse_apex = false;
    sol.feasibility = feasibility_report(tri);
    sol.stationarity_residual = std::abs(central_diff(objective, sol.beta, 1e-5));
    sol.feasibility_residual = 0.0;

    // Half-triangle proportions: the altitude splits the optimum into two
    // right triangles with legs h (half base) and v (height), hypotenuse s.
    double h = 0.5 * sol.bc;
    sol.v_over_h = tri.A.y / h;
    sol.s_over_h = sol.ab / h;
    return sol;
}

}  // namespace goldenext
