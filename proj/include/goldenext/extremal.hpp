#pragma once

#include "goldenext/geometry.hpp"
#include "goldenext/qphi.hpp"
#include "goldenext/radical.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace goldenext {

// Thrown when a numeric refinement cannot tighten its bracket below the
// requested tolerance. The CLI maps this to exit code 2.
class NonConvergenceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kPhiF = 1.6180339887498949;

struct SolverOptions {
    unsigned grid_n = 512;
    // Reject candidate triangles whose diameter containment fails. No
    // base-angle triangle can violate it (1/sin >= 1), so this never changes
    // an answer; it exists to make that fact checkable.
    bool strict_diameter = false;
    // Layer the no-triangle condition onto the non-acute perimeter problem
    // (the second reading of the open problem's wording).
    bool require_no_triangle = false;
};

// ----- Case analysis for the minimum-area problem -----

// Apex sine if the radius were the longest of (R, AB, AC): 1/(x(1-x)).
double sin_theta_r_longest(double x);

struct InfeasibilityProof {
    double grid_min = 0;
    double grid_argmin = 0;
    unsigned samples = 0;
    // The expression's true minimum, 4 at x = 1/2 (max of x(1-x) is 1/4).
    double analytic_min = 4.0;
    double analytic_argmin = 0.5;
    bool infeasible = false;  // grid_min > 1, so sin(theta) > 1 everywhere
};

InfeasibilityProof prove_r_longest_infeasible(unsigned samples);

// Apex sine when AC = AB + 1 is the longest: (2x+1)/(x^2+x), x = AB.
double sin_theta_ac_longest(double x);
QPhi sin_theta_ac_longest_exact(const QPhi& x);

// Area (2x+1)/2 on the feasible branch x >= phi.
double area_ac_longest(double x);
QPhi area_ac_longest_exact(const QPhi& x);

// ----- Minimum-area solutions -----

struct AreaSolution {
    // Float view, always populated.
    double x = 0;
    double ab = 0;
    double ac = 0;
    double bc = 0;
    double area = 0;

    // Exact layer, populated by the analytic solver.
    std::optional<QPhi> x_exact;
    std::optional<QPhi> ab_exact;
    std::optional<QPhi> ac_exact;
    std::optional<Radical> bc_exact;
    std::optional<QPhi> area_exact;
    bool sin_theta_is_one_exact = false;

    // Certificate residuals at the reported point.
    double sin_theta_gap = 0;       // 1 - (ab+ac)/(ab*ac)
    double no_triangle_residual = 0;  // |ac - ab - 1|
    double bracket_width = 0;       // final refinement bracket (numeric only)
};

AreaSolution solve_min_area_analytic();

enum class MinAreaBranch { ac_longest, ab_longest };

AreaSolution solve_min_area_numeric(double tol,
                                    MinAreaBranch branch = MinAreaBranch::ac_longest,
                                    const SolverOptions& options = {});

// ----- Minimum-perimeter solvers (no closed form is known) -----

struct FeasibilityReport {
    bool diameter_contained = false;
    bool tangency_on_segment_ab = false;
    bool tangency_on_segment_ac = false;
    AngleClass angle_class = AngleClass::acute;
};

struct OptimizerIterate {
    unsigned iter = 0;
    double a = 0;
    double b = 0;
    double value = 0;
};

struct PerimeterSolution {
    std::string constraint_set;
    double ab = 0;
    double ac = 0;
    double bc = 0;
    double beta = 0;
    double gamma = 0;
    double perimeter = 0;
    bool obtuse_apex = false;
    double stationarity_residual = 0;
    double feasibility_residual = 0;
    FeasibilityReport feasibility;
    TriangleGeom triangle;
    std::vector<OptimizerIterate> trace;
    // Half-triangle proportions, populated by the isosceles solver.
    std::optional<double> v_over_h;
    std::optional<double> s_over_h;
};

// Smallest perimeter when (R, AB, AC) must fail the triangle inequality.
PerimeterSolution solve_min_perimeter_no_triangle(double tol,
                                                  const SolverOptions& options = {});

// Smallest perimeter when the triangle must not be acute. With
// options.require_no_triangle the no-triangle condition is imposed as well.
PerimeterSolution solve_min_perimeter_nonacute(double tol,
                                               const SolverOptions& options = {});

// Smallest perimeter over isosceles circumscribing triangles; reproduces the
// (1, sqrt(phi), phi) half-triangle proportions.
PerimeterSolution solve_min_perimeter_isosceles(double tol,
                                                const SolverOptions& options = {});

// Realizes the tangent triangle with slant lengths (ab, ac) and the given
// apex branch as concrete coordinates with the semicircle center at the
// origin. Requires (ab+ac)/(ab*ac) <= 1.
TriangleGeom realize_tangent_triangle(double ab, double ac, bool obtuse_apex);

FeasibilityReport feasibility_report(const TriangleGeom& tri);

// Validates a user-supplied tolerance for the numeric solvers.
bool valid_tolerance(double tol);

}  // namespace goldenext
