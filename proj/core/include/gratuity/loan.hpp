#pragma once

#include <optional>
#include <vector>

#include "gratuity/tax.hpp"
#include "gratuity/verdict.hpp"

namespace gratuity {

/// Level-payment loan: principal `L` over `m` years in `n` payments per year,
/// nominal annual rate `r_c` compounded `n` times a year. A zero rate is
/// accepted and handled through the zero-interest limits.
class LoanTerms {
public:
    LoanTerms(double L, int m, int n, double r_c);

    [[nodiscard]] double principal() const noexcept { return principal_; }
    [[nodiscard]] int years() const noexcept { return years_; }
    [[nodiscard]] int periods_per_year() const noexcept { return periods_per_year_; }
    [[nodiscard]] double rate() const noexcept { return rate_; }

    [[nodiscard]] int payment_count() const noexcept { return years_ * periods_per_year_; }
    [[nodiscard]] double periodic_rate() const noexcept { return rate_ / periods_per_year_; }

private:
    double principal_;
    int years_;
    int periods_per_year_;
    double rate_;
};

struct AmortizationRow {
    int k;
    double payment;
    double interest_portion;
    double principal_reduction;
    double balance_after;
};

struct LoanDecision {
    double phi_value;
    std::optional<double> threshold;
    Verdict verdict;
    /// R1 - R2 for the supplied gratuity.
    double margin;
    double total_repayment;
};

/// Total paid over the life of the loan, R = mn times the level payment.
double total_repayment(const LoanTerms& loan);

/// Level payment R / (mn).
double periodic_payment(const LoanTerms& loan);

std::vector<AmortizationRow> amortization_schedule(const LoanTerms& loan);

/// Principal retired by the scheduled payments during the first year.
double first_year_scheduled_reduction(const LoanTerms& loan);

/// R1: first-year scheduled reduction plus the year-end net gratuity.
double reduction_wait_year(const LoanTerms& loan, double G, const TaxPolicy& policy);

/// R2: each payment topped up by the net installment (1-delta) G / n.
double reduction_installments(const LoanTerms& loan, double G, const TaxPolicy& policy);

/// phi(r_c) = [1 - (1-q) delta] - ((1-delta)/r_c)[(1 + r_c/n)^n - 1], so that
/// R1 - R2 = phi(r_c) G. phi(0) is the limit q delta.
double decision_function(double r_c, int n, const TaxPolicy& policy);

/// Loan rate where phi changes sign. Absent when q delta = 0 (installments are
/// never worse) or n = 1 (phi is the constant q delta, waiting never loses).
std::optional<double> decision_threshold(int n, const TaxPolicy& policy);

LoanDecision decide_loan(const LoanTerms& loan, double G, const TaxPolicy& policy);

} // namespace gratuity
