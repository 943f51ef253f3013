#include "facetpath/bounds.hpp"

#include <cmath>

namespace facetpath {

namespace {

void require_dimension(std::int64_t d) {
    if (d < 1) {
        throw ParameterError("dimension must be >= 1, got " + std::to_string(d));
    }
}

void require_regular_degree(std::int64_t r) {
    if (r < 2) {
        throw TheoremDomainError("the Moore bound requires degree r >= 2, got " +
                                 std::to_string(r));
    }
}

void require_min_degree(std::int64_t k) {
    if (k < 3) {
        throw TheoremDomainError(
            "the minimum-degree bound requires min degree k >= 3, got " +
            std::to_string(k));
    }
}

/// 1 + first*d * sum_{i=0}^{radius-1} ((first-1)*d)^i, exactly.
BigInt growth_series(std::int64_t first, std::int64_t d, std::int64_t radius) {
    const BigInt ratio = BigInt(first - 1) * d;
    BigInt sum = 0;
    BigInt term = 1;
    for (std::int64_t i = 0; i < radius; ++i) {
        sum += term;
        term *= ratio;
    }
    return 1 + BigInt(first) * d * sum;
}

}  // namespace

BigInt moore_ball(std::int64_t r, std::int64_t d, std::int64_t radius) {
    require_regular_degree(r);
    require_dimension(d);
    if (radius < 0) {
        throw ParameterError("radius must be >= 0, got " + std::to_string(radius));
    }
    return growth_series(r, d, radius);
}

BigInt moore_ball_degree_only(std::int64_t r, std::int64_t radius) {
    require_regular_degree(r);
    if (radius < 0) {
        throw ParameterError("radius must be >= 0, got " + std::to_string(radius));
    }
    return growth_series(r, 1, radius);
}

std::int64_t diameter_lower_bound_int(std::uint64_t n_elements, std::int64_t r,
                                      std::int64_t d) {
    require_regular_degree(r);
    require_dimension(d);
    if (n_elements == 0) {
        throw ParameterError("N must be positive");
    }
    const BigInt target = n_elements;
    const BigInt ratio = BigInt(r - 1) * d;
    const BigInt step = BigInt(r) * d;
    BigInt ball = 1;
    BigInt term = 1;  // ratio^radius
    std::int64_t radius = 0;
    while (ball < target) {
        ball += step * term;
        term *= ratio;
        ++radius;
    }
    return radius;
}

double diameter_lower_bound_real(std::uint64_t n_elements, std::int64_t r,
                                 std::int64_t d) {
    require_regular_degree(r);
    require_dimension(d);
    if (n_elements == 0) {
        throw ParameterError("N must be positive");
    }
    const std::int64_t base = (r - 1) * d;
    if (base < 2) {
        throw UndefinedBaseError("log base (r-1)d = " + std::to_string(base) +
                                 " is < 2; the closed form is undefined");
    }
    const double numerator = std::log1p(static_cast<double>(n_elements - 1) *
                                        static_cast<double>(base - 1) /
                                        (static_cast<double>(r) * static_cast<double>(d)));
    return numerator / std::log(static_cast<double>(base));
}

std::int64_t min_degree_radius_bound(std::uint64_t n_elements, std::int64_t k,
                                     std::int64_t d) {
    require_min_degree(k);
    require_dimension(d);
    if (n_elements == 0) {
        throw ParameterError("N must be positive");
    }
    const BigInt target = n_elements;
    const BigInt ratio = BigInt(k - 1) * d;
    const BigInt step = BigInt(k) * d;
    BigInt ball = 1;  // series value at radius 0
    BigInt term = 1;
    std::int64_t radius = 0;
    for (;;) {
        BigInt next = ball + step * term;
        if (next > target) break;
        ball = next;
        term *= ratio;
        ++radius;
    }
    return radius;
}

std::int64_t min_degree_covering_radius(std::uint64_t n_elements, std::int64_t k,
                                        std::int64_t d) {
    require_min_degree(k);
    require_dimension(d);
    if (n_elements == 0) {
        throw ParameterError("N must be positive");
    }
    const BigInt target = n_elements;
    const BigInt ratio = BigInt(k - 1) * d;
    const BigInt step = BigInt(k) * d;
    BigInt ball = 1;
    BigInt term = 1;
    std::int64_t radius = 0;
    while (ball < target) {
        ball += step * term;
        term *= ratio;
        ++radius;
    }
    return radius;
}

BoundReport check_bounds(const Complex& complex, const MetricReport& metric,
                         const DegreeProfile& degrees) {
    BoundReport report;
    report.n_elements = complex.element_count();
    report.d = complex.d();
    report.regular_r = degrees.regular_r;
    report.min_degree = degrees.min_degree;
    report.measured_diameter = metric.diameter;

    const bool connected = metric.diameter.has_value();
    const std::int64_t d = complex.d();

    if (!connected) {
        report.moore_skip_reason = "disconnected";
    } else if (!degrees.regular_r) {
        report.moore_skip_reason = "not-regular";
    } else if (*degrees.regular_r < 2) {
        report.moore_skip_reason = "degree-below-2";
    } else {
        const std::int64_t r = *degrees.regular_r;
        const std::int32_t measured = *metric.diameter;
        report.moore_applicable = true;
        report.moore_ball_at_diameter = moore_ball(r, d, measured);
        report.degree_only_ball_at_diameter = moore_ball_degree_only(r, measured);
        report.moore_bound_satisfied =
            BigInt(report.n_elements) <= report.moore_ball_at_diameter;
        report.diameter_lb_int = diameter_lower_bound_int(report.n_elements, r, d);
        if ((r - 1) * d >= 2) {
            report.diameter_lb_real = diameter_lower_bound_real(report.n_elements, r, d);
        }
        report.diameter_lb_holds = measured >= report.diameter_lb_int;
    }

    if (!connected) {
        report.min_degree_skip_reason = "disconnected";
    } else if (degrees.min_degree < 3) {
        report.min_degree_skip_reason = "min-degree-below-3";
    } else {
        const std::int64_t k = degrees.min_degree;
        report.min_degree_applicable = true;
        report.min_degree_radius_bound =
            min_degree_radius_bound(report.n_elements, k, d);
        report.min_degree_covering_radius =
            min_degree_covering_radius(report.n_elements, k, d);
        for (std::uint64_t rank = 0; rank < metric.eccentricities.size(); ++rank) {
            std::int32_t ecc = metric.eccentricities[rank];
            if (ecc > report.min_degree_covering_radius) {
                report.min_degree_violations.push_back({rank, ecc});
            }
        }
        report.min_degree_bound_holds = report.min_degree_violations.empty();
    }
    return report;
}

}  // namespace facetpath
