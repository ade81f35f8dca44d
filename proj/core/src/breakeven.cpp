#include "gratuity/breakeven.hpp"

#include <cmath>
#include <string>

#include "checks.hpp"
#include "gratuity/root_finding.hpp"

namespace gratuity {

namespace {

constexpr double kZeroRate = 1e-12;
constexpr double kBracketLow = 1e-9;
constexpr double kBracketHigh = 1.0;
constexpr double kBracketMax = 10.0;
constexpr double kSolverTol = 1e-12;

BreakevenResult make_result(double rate, CompoundingMode mode, int n, const TaxPolicy& policy) {
    const double residual = policy.year_end_factor() - maturity(1.0, n, rate, mode, policy);
    return {rate, mode, n, residual};
}

void check_maturity_args(double G, int n, double r) {
    detail::require_positive("G", G);
    detail::require_count("n", n);
    detail::require_non_negative("r", r);
}

} // namespace

std::string_view to_string(CompoundingMode mode) noexcept {
    return mode == CompoundingMode::Simple ? "simple" : "continuous";
}

CompoundingMode parse_compounding_mode(std::string_view text) {
    if (text == "simple") return CompoundingMode::Simple;
    if (text == "continuous") return CompoundingMode::Continuous;
    throw ValidationError("mode", "expected \"simple\" or \"continuous\", got \"" + std::string(text) + "\"");
}

double maturity_simple(double G, int n, double r, const TaxPolicy& policy) {
    check_maturity_args(G, n, r);
    const double periods = n;
    return policy.early_factor() * G * (1.0 + (periods + 1.0) / (2.0 * periods) * r);
}

double maturity_continuous(double G, int n, double r, const TaxPolicy& policy) {
    check_maturity_args(G, n, r);
    if (r < kZeroRate) return policy.early_factor() * G;
    const double per_period = r / n;
    // e^{r/n} (e^r - 1) / (e^{r/n} - 1), with expm1 keeping small r accurate.
    const double growth = std::exp(per_period) * std::expm1(r) / std::expm1(per_period);
    return policy.early_factor() * growth * G / n;
}

double maturity(double G, int n, double r, CompoundingMode mode, const TaxPolicy& policy) {
    return mode == CompoundingMode::Simple ? maturity_simple(G, n, r, policy)
                                           : maturity_continuous(G, n, r, policy);
}

BreakevenResult breakeven_lump_simple(const TaxPolicy& policy) {
    const double rate = policy.q() * policy.delta() / policy.early_factor();
    return make_result(rate, CompoundingMode::Simple, 1, policy);
}

BreakevenResult breakeven_lump_continuous(const TaxPolicy& policy) {
    const double rate = std::log(policy.year_end_factor() / policy.early_factor());
    return make_result(rate, CompoundingMode::Continuous, 1, policy);
}

BreakevenResult breakeven_installments_simple(int n, const TaxPolicy& policy) {
    detail::require_count("n", n);
    const double periods = n;
    const double rate =
        2.0 * periods * policy.q() * policy.delta() / ((periods + 1.0) * policy.early_factor());
    return make_result(rate, CompoundingMode::Simple, n, policy);
}

BreakevenResult breakeven_installments_continuous(int n, const TaxPolicy& policy) {
    detail::require_count("n", n);
    if (policy.q() == 0.0 || policy.delta() == 0.0)
        return make_result(0.0, CompoundingMode::Continuous, n, policy);

    const double target = policy.year_end_factor();
    auto excess = [&](double r) { return maturity_continuous(1.0, n, r, policy) - target; };
    // Tiny q*delta can put the root below the usual lower end; 0 always brackets.
    const double lo = excess(kBracketLow) < 0.0 ? kBracketLow : 0.0;
    const double hi = expand_upper_bracket(excess, lo, kBracketHigh, kBracketMax);
    const double rate = solve_bracketed(excess, lo, hi, kSolverTol);
    return make_result(rate, CompoundingMode::Continuous, n, policy);
}

BreakevenResult breakeven_installments(int n, CompoundingMode mode, const TaxPolicy& policy) {
    return mode == CompoundingMode::Simple ? breakeven_installments_simple(n, policy)
                                           : breakeven_installments_continuous(n, policy);
}

} // namespace gratuity
