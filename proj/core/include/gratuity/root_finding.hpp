#pragma once

#include <cmath>
#include <algorithm>
#include <concepts>
#include <string>

#include "gratuity/error.hpp"

namespace gratuity {

/// Bisection on [lo, hi]. Requires f(lo) and f(hi) not to share a strict sign.
/// Stops on an exact zero or once the bracket is narrower than tol (which also
/// bounds |f| for the Lipschitz objectives used here). Deterministic.
template <std::invocable<double> F>
double solve_bracketed(F&& f, double lo, double hi, double tol) {
    if (!(tol > 0.0)) throw DomainError("tol", "tolerance must be positive");
    if (!(lo < hi)) throw DomainError("bracket", "lower end must be below upper end");

    double f_lo = f(lo);
    const double f_hi = f(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if (std::signbit(f_lo) == std::signbit(f_hi) || std::isnan(f_lo) || std::isnan(f_hi))
        throw SolverError("no sign change on bracket");

    while (hi - lo > tol) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break; // bracket at floating-point resolution
        const double f_mid = f(mid);
        if (f_mid == 0.0) return mid;
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return lo + 0.5 * (hi - lo);
}

/// Doubles `hi` (clamped to `max_hi`) until f changes sign between `lo` and `hi`. Returns the accepted upper end.
template <std::invocable<double> F>
double expand_upper_bracket(F&& f, double lo, double hi, double max_hi) {
    const bool lo_negative = std::signbit(f(lo));
    for (;;) {
        const double f_hi = f(hi);
        if (f_hi == 0.0 || std::signbit(f_hi) != lo_negative) return hi;
        if (hi >= max_hi) break;
        hi = std::min(hi * 2.0, max_hi);
    }
    throw SolverError("could not bracket a root below " + std::to_string(max_hi));
}

} // namespace gratuity
