#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gratuity/breakeven.hpp"
#include "gratuity/loan.hpp"
#include "gratuity/tax.hpp"
#include "gratuity/verdict.hpp"

namespace gratuity {

/// Tax described by a progressive schedule; reduced to an effective rate on `gross`.
struct BracketPolicy {
    BracketSchedule schedule;
    double gross;
    double q;
};

using PolicySpec = std::variant<TaxPolicy, BracketPolicy>;

TaxPolicy resolve_policy(const PolicySpec& spec);

/// Rate the employee could earn on the installments.
struct SavingsOffer {
    double rate;
    CompoundingMode mode;
};

struct Scenario {
    PolicySpec policy;
    GratuityTerms gratuity;
    std::optional<SavingsOffer> savings;
    std::optional<LoanTerms> loan;
};

struct SavingsAssessment {
    Verdict verdict;
    double offered_rate;
    CompoundingMode mode;
    double breakeven_rate;
    /// offered_rate - breakeven_rate
    double margin;
};

struct DecisionReport {
    TaxPolicy policy;
    double G;
    int n;
    std::optional<SavingsAssessment> savings_verdict;
    std::optional<LoanDecision> loan_verdict;
    double annual_net;
    /// Year-end value of the net installments at the offered savings rate
    /// (zero interest when no savings offer is given).
    double installment_net_total_at_maturity;
    /// Installment break-evens for both compounding modes at this n.
    double breakeven_simple;
    double breakeven_continuous;
    std::string notes;
};

struct CurvePoint {
    double r_c;
    double phi;
};

struct CurveSeries {
    std::vector<CurvePoint> points;
    double delta;
    double q;
    int n;
};

/// Throws ValidationError when neither a savings offer nor a loan is present.
DecisionReport compare(const Scenario& scenario);

/// `samples` evenly spaced loan rates on [r_min, r_max] with phi at each.
CurveSeries phi_curve(int n, const TaxPolicy& policy, double r_min, double r_max, int samples);

} // namespace gratuity
