#include "gratuity/loan.hpp"

#include <cmath>

#include "checks.hpp"
#include "gratuity/root_finding.hpp"

namespace gratuity {

namespace {

constexpr double kZeroRate = 1e-12;
constexpr double kThresholdLow = 1e-9;
constexpr double kThresholdHigh = 1.0;
constexpr double kThresholdMax = 100.0;
constexpr double kThresholdTol = 1e-12;

// (1 + i)^periods - 1
double compound_growth(double i, int periods) {
    return std::expm1(periods * std::log1p(i));
}

// Sum of (1+i)^{k-1} for k = 1..periods, i.e. [(1+i)^periods - 1] / i.
double accumulation_factor(double i, int periods) {
    if (i < kZeroRate) return periods;
    return compound_growth(i, periods) / i;
}

} // namespace

LoanTerms::LoanTerms(double L, int m, int n, double r_c)
    : principal_(L), years_(m), periods_per_year_(n), rate_(r_c) {
    detail::require_positive("L", L);
    detail::require_count("m", m);
    detail::require_count("n", n);
    detail::require_non_negative("r_c", r_c);
}

double total_repayment(const LoanTerms& loan) {
    if (loan.rate() < kZeroRate) return loan.principal();
    const double growth = compound_growth(loan.periodic_rate(), loan.payment_count());
    return loan.years() * loan.rate() * loan.principal() * (growth + 1.0) / growth;
}

double periodic_payment(const LoanTerms& loan) {
    return total_repayment(loan) / loan.payment_count();
}

std::vector<AmortizationRow> amortization_schedule(const LoanTerms& loan) {
    const int count = loan.payment_count();
    const double i = loan.rate() < kZeroRate ? 0.0 : loan.periodic_rate();
    const double payment = periodic_payment(loan);
    const double first_reduction = payment - i * loan.principal();

    std::vector<AmortizationRow> rows;
    rows.reserve(static_cast<std::size_t>(count));
    double retired = 0.0;
    for (int k = 1; k <= count; ++k) {
        const double reduction = first_reduction * std::pow(1.0 + i, k - 1);
        retired += reduction;
        rows.push_back({k, payment, payment - reduction, reduction, loan.principal() - retired});
    }
    return rows;
}

double first_year_scheduled_reduction(const LoanTerms& loan) {
    const double i = loan.periodic_rate();
    return (periodic_payment(loan) - i * loan.principal()) *
           accumulation_factor(i, loan.periods_per_year());
}

double reduction_wait_year(const LoanTerms& loan, double G, const TaxPolicy& policy) {
    detail::require_non_negative("G", G);
    return first_year_scheduled_reduction(loan) + policy.year_end_factor() * G;
}

double reduction_installments(const LoanTerms& loan, double G, const TaxPolicy& policy) {
    detail::require_non_negative("G", G);
    const int n = loan.periods_per_year();
    const double i = loan.periodic_rate();
    const double topped_up = periodic_payment(loan) + policy.early_factor() * G / n;
    return (topped_up - i * loan.principal()) * accumulation_factor(i, n);
}

double decision_function(double r_c, int n, const TaxPolicy& policy) {
    detail::require_non_negative("r_c", r_c);
    detail::require_count("n", n);
    // One payment a year: the growth factor over r_c is exactly 1.
    if (r_c < kZeroRate || n == 1) return policy.q() * policy.delta();
    return policy.year_end_factor() - policy.early_factor() * compound_growth(r_c / n, n) / r_c;
}

std::optional<double> decision_threshold(int n, const TaxPolicy& policy) {
    detail::require_count("n", n);
    if (policy.q() == 0.0 || policy.delta() == 0.0 || n == 1) return std::nullopt;

    auto phi = [&](double r) { return decision_function(r, n, policy); };
    const double lo = phi(kThresholdLow) > 0.0 ? kThresholdLow : 0.0;
    const double hi = expand_upper_bracket(phi, lo, kThresholdHigh, kThresholdMax);
    return solve_bracketed(phi, lo, hi, kThresholdTol);
}

LoanDecision decide_loan(const LoanTerms& loan, double G, const TaxPolicy& policy) {
    const double phi = decision_function(loan.rate(), loan.periods_per_year(), policy);
    return {
        .phi_value = phi,
        .threshold = decision_threshold(loan.periods_per_year(), policy),
        .verdict = verdict_from_advantage(phi),
        .margin = reduction_wait_year(loan, G, policy) - reduction_installments(loan, G, policy),
        .total_repayment = total_repayment(loan),
    };
}

} // namespace gratuity
