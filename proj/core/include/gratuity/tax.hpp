#pragma once

#include <vector>

namespace gratuity {

/// Exemption fraction `q` (share of the gratuity that is tax free when it is
/// collected after at least one year) and tax rate `delta` applied to the
/// taxable part and to anything collected earlier than a year.
class TaxPolicy {
public:
    /// Throws DomainError unless 0 <= q < 1 and 0 <= delta < 1.
    TaxPolicy(double q, double delta);

    /// Botswana parameters: q = 1/3, delta = 1/4.
    static TaxPolicy botswana() { return {1.0 / 3.0, 0.25}; }

    [[nodiscard]] double q() const noexcept { return q_; }
    [[nodiscard]] double delta() const noexcept { return delta_; }

    /// q + (1-q)(1-delta), written as 1 - (1-q)delta.
    [[nodiscard]] double year_end_factor() const noexcept { return 1.0 - (1.0 - q_) * delta_; }
    /// 1 - delta.
    [[nodiscard]] double early_factor() const noexcept { return 1.0 - delta_; }

    friend bool operator==(const TaxPolicy&, const TaxPolicy&) = default;

private:
    double q_;
    double delta_;
};

struct Bracket {
    double lower_bound;
    double marginal_rate;
};

/// Progressive schedule: bounds strictly increasing from 0, rates in [0,1).
class BracketSchedule {
public:
    explicit BracketSchedule(std::vector<Bracket> brackets);

    [[nodiscard]] const std::vector<Bracket>& brackets() const noexcept { return brackets_; }

    /// Bracket-wise tax due on `gross`.
    [[nodiscard]] double tax_on(double gross) const;

private:
    std::vector<Bracket> brackets_;
};

/// One year's accrued gratuity `G`, paid in `n` equal installments.
class GratuityTerms {
public:
    GratuityTerms(double G, int n);

    [[nodiscard]] double amount() const noexcept { return amount_; }
    [[nodiscard]] int installments() const noexcept { return installments_; }
    [[nodiscard]] double installment() const noexcept { return amount_ / installments_; }

private:
    double amount_;
    int installments_;
};

/// Net amount collected after exactly one year: [q + (1-q)(1-delta)] G.
double net_year_end(double G, const TaxPolicy& policy);

/// Net amount if the whole year is paid up front: (1-delta) G.
double net_early_lump(double G, const TaxPolicy& policy);

/// Net value of one of `n` equal installments: (1-delta) G / n.
double net_installment(double G, int n, const TaxPolicy& policy);

/// Collapses a bracket schedule to its average rate on `gross` and pairs it
/// with the exemption fraction `q`.
TaxPolicy effective_policy(double gross, const BracketSchedule& schedule, double q);

} // namespace gratuity
