#include "gratuity/scenario.hpp"

#include <cmath>

#include "checks.hpp"

namespace gratuity {

TaxPolicy resolve_policy(const PolicySpec& spec) {
    if (const auto* flat = std::get_if<TaxPolicy>(&spec)) return *flat;
    const auto& brackets = std::get<BracketPolicy>(spec);
    return effective_policy(brackets.gross, brackets.schedule, brackets.q);
}

DecisionReport compare(const Scenario& scenario) {
    if (!scenario.savings && !scenario.loan)
        throw ValidationError("scenario", "needs a savings offer, a loan, or both");

    const TaxPolicy policy = resolve_policy(scenario.policy);
    const double G = scenario.gratuity.amount();
    const int n = scenario.gratuity.installments();

    DecisionReport report{
        .policy = policy,
        .G = G,
        .n = n,
        .savings_verdict = std::nullopt,
        .loan_verdict = std::nullopt,
        .annual_net = net_year_end(G, policy),
        .installment_net_total_at_maturity = net_early_lump(G, policy),
        .breakeven_simple = breakeven_installments_simple(n, policy).rate,
        .breakeven_continuous = breakeven_installments_continuous(n, policy).rate,
        .notes = "installment 1 is received at the start of the year and earns a full year of interest",
    };

    if (std::holds_alternative<BracketPolicy>(scenario.policy))
        report.notes += "; tax rate is the effective average rate of the bracket schedule";

    if (const auto& offer = scenario.savings) {
        detail::require_non_negative("savings.rate", offer->rate);
        const double breakeven = offer->mode == CompoundingMode::Simple ? report.breakeven_simple
                                                                          : report.breakeven_continuous;
        const double margin = offer->rate - breakeven;
        report.savings_verdict = SavingsAssessment{
            .verdict = verdict_from_advantage(-margin),
            .offered_rate = offer->rate,
            .mode = offer->mode,
            .breakeven_rate = breakeven,
            .margin = margin,
        };
        report.installment_net_total_at_maturity = maturity(G, n, offer->rate, offer->mode, policy);
    }

    if (const auto& loan = scenario.loan) {
        report.loan_verdict = decide_loan(*loan, G, policy);
        if (loan->periods_per_year() != n)
            report.notes += "; loan payments per year differ from gratuity installments, phi uses the loan's";
    }
    return report;
}

CurveSeries phi_curve(int n, const TaxPolicy& policy, double r_min, double r_max, int samples) {
    detail::require_count("n", n);
    if (!std::isfinite(r_min) || r_min < 0.0) throw ValidationError("min", "must be non-negative");
    if (!std::isfinite(r_max) || !(r_max > r_min)) throw ValidationError("max", "must exceed min");
    if (samples < 2) throw ValidationError("samples", "must be at least 2");

    CurveSeries series{.points = {}, .delta = policy.delta(), .q = policy.q(), .n = n};
    series.points.reserve(static_cast<std::size_t>(samples));
    const double step = (r_max - r_min) / (samples - 1);
    for (int k = 0; k < samples; ++k) {
        const double r = k + 1 == samples ? r_max : r_min + step * k;
        series.points.push_back({r, decision_function(r, n, policy)});
    }
    return series;
}

} // namespace gratuity
