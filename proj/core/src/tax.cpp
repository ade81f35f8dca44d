#include "gratuity/tax.hpp"

#include <algorithm>
#include <string>

#include "checks.hpp"

namespace gratuity {

using detail::require_count;
using detail::require_fraction;
using detail::require_positive;

TaxPolicy::TaxPolicy(double q, double delta) : q_(q), delta_(delta) {
    require_fraction("q", q);
    require_fraction("delta", delta);
}

BracketSchedule::BracketSchedule(std::vector<Bracket> brackets) : brackets_(std::move(brackets)) {
    if (brackets_.empty()) throw DomainError("brackets", "schedule must contain at least one bracket");
    if (brackets_.front().lower_bound != 0.0)
        throw DomainError("brackets", "first lower bound must be 0");
    for (std::size_t i = 0; i < brackets_.size(); ++i) {
        require_fraction("brackets", brackets_[i].marginal_rate);
        if (i > 0 && !(brackets_[i].lower_bound > brackets_[i - 1].lower_bound))
            throw DomainError("brackets", "lower bounds must be strictly increasing (bracket " +
                                              std::to_string(i) + ")");
    }
}

double BracketSchedule::tax_on(double gross) const {
    double tax = 0.0;
    for (std::size_t i = 0; i < brackets_.size(); ++i) {
        const double lo = brackets_[i].lower_bound;
        if (gross <= lo) break;
        const double hi = i + 1 < brackets_.size() ? brackets_[i + 1].lower_bound : gross;
        tax += (std::min(gross, hi) - lo) * brackets_[i].marginal_rate;
    }
    return tax;
}

GratuityTerms::GratuityTerms(double G, int n) : amount_(G), installments_(n) {
    require_positive("G", G);
    require_count("n", n);
}

double net_year_end(double G, const TaxPolicy& policy) {
    require_positive("G", G);
    return policy.year_end_factor() * G;
}

double net_early_lump(double G, const TaxPolicy& policy) {
    require_positive("G", G);
    return policy.early_factor() * G;
}

double net_installment(double G, int n, const TaxPolicy& policy) {
    require_positive("G", G);
    require_count("n", n);
    return policy.early_factor() * G / n;
}

TaxPolicy effective_policy(double gross, const BracketSchedule& schedule, double q) {
    require_positive("gross", gross);
    // A single bracket is a flat rate; skip the division so it round-trips exactly.
    if (schedule.brackets().size() == 1) return {q, schedule.brackets().front().marginal_rate};
    return {q, schedule.tax_on(gross) / gross};
}

} // namespace gratuity
