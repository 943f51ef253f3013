#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "facetpath/complex.hpp"
#include "facetpath/metric.hpp"
#include "facetpath/simplex.hpp"

namespace facetpath {

/// Maximum number of elements reachable within `radius` steps from one
/// element of an r-regular complex under collision-free branching:
///     1 + r*d * sum_{i=0}^{radius-1} ((r-1)*d)^i
/// Exact arbitrary-precision value; the ratio-one case (r=2, d=1)
/// degenerates to 1 + 2*radius.  Requires r >= 2.
BigInt moore_ball(std::int64_t r, std::int64_t d, std::int64_t radius);

/// The d-free variant 1 + r * sum (r-1)^i, reported alongside moore_ball
/// for comparison; coincides with it at d = 1.
BigInt moore_ball_degree_only(std::int64_t r, std::int64_t radius);

/// Smallest D with moore_ball(r, d, D) >= N, by exact integer iteration.
/// Equals the ceiling of diameter_lower_bound_real whenever (r-1)d >= 2.
std::int64_t diameter_lower_bound_int(std::uint64_t n_elements, std::int64_t r,
                                      std::int64_t d);

/// The closed form
///     log(1 + (N-1)((r-1)d - 1) / (rd)) / log((r-1)d)
/// as a double, for reporting next to the integer bound.  Requires base
/// (r-1)d >= 2.
double diameter_lower_bound_real(std::uint64_t n_elements, std::int64_t r,
                                 std::int64_t d);

/// Largest rho with 1 + k*d * sum_{i=0}^{rho-1} ((k-1)*d)^i <= N: the
/// eccentricity bound the minimum-degree growth argument yields when read
/// literally.  Requires k >= 3 (the argument's hypothesis).
std::int64_t min_degree_radius_bound(std::uint64_t n_elements, std::int64_t k,
                                     std::int64_t d);

/// Smallest rho at which the claimed geometric growth reaches N: the radius
/// by which that growth, if it held, would cover the whole metric space.
/// Eccentricities beyond this are genuine counterexamples to the growth
/// claim; values between the two bounds only graze its boundary arithmetic.
/// Requires k >= 3.
std::int64_t min_degree_covering_radius(std::uint64_t n_elements, std::int64_t k,
                                        std::int64_t d);

struct BoundReport {
    // Context
    std::uint64_t n_elements = 0;  // N
    int d = 0;
    std::optional<std::int64_t> regular_r;
    std::int64_t min_degree = 0;

    // Moore ball / diameter lower bound; needs connectivity, regularity and
    // r >= 2, else skipped with a reason.
    bool moore_applicable = false;
    std::string moore_skip_reason;
    std::optional<std::int32_t> measured_diameter;
    BigInt moore_ball_at_diameter;
    BigInt degree_only_ball_at_diameter;  // comparison column
    bool moore_bound_satisfied = false;   // N <= moore_ball_at_diameter
    std::int64_t diameter_lb_int = 0;
    std::optional<double> diameter_lb_real;  // absent when (r-1)d < 2
    bool diameter_lb_holds = false;          // measured D >= diameter_lb_int

    // Minimum-degree eccentricity bound; needs connectivity and min degree
    // >= 3, else skipped with a reason.
    bool min_degree_applicable = false;
    std::string min_degree_skip_reason;
    std::int64_t min_degree_radius_bound = 0;
    std::int64_t min_degree_covering_radius = 0;
    struct Violation {
        std::uint64_t rank;
        std::int32_t eccentricity;
    };
    /// Elements whose eccentricity exceeds the covering radius.
    std::vector<Violation> min_degree_violations;
    bool min_degree_bound_holds = false;
};

/// Evaluates both bounds against measured metric data.  Violations are
/// findings, not errors; inapplicable checks carry a skip reason.
BoundReport check_bounds(const Complex& complex, const MetricReport& metric,
                         const DegreeProfile& degrees);

}  // namespace facetpath
