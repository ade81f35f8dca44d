#include "gratuity/json.hpp"

#include <cmath>
#include <string>

#include "gratuity/error.hpp"

namespace gratuity::json {

namespace {

std::string path_of(const std::string& prefix, const char* key) {
    return prefix.empty() ? std::string(key) : prefix + "." + key;
}

const json& member(const json& object, const char* key, const std::string& prefix) {
    if (!object.is_object())
        throw ValidationError(prefix.empty() ? "body" : prefix, "expected a JSON object");
    const auto it = object.find(key);
    if (it == object.end()) throw ValidationError(path_of(prefix, key), "missing required field");
    return *it;
}

} // namespace

json to_json(const TaxPolicy& policy) {
    return {{"q", policy.q()}, {"delta", policy.delta()}};
}

json to_json(const BreakevenResult& result) {
    return {{"rate", result.rate},
            {"residual", result.residual},
            {"mode", to_string(result.mode)},
            {"n", result.n}};
}

json to_json(const LoanDecision& decision) {
    json out = {{"phi", decision.phi_value},
                {"verdict", to_string(decision.verdict)},
                {"margin", decision.margin},
                {"total_repayment", decision.total_repayment}};
    if (decision.threshold) out["threshold"] = *decision.threshold;
    return out;
}

json to_json(const SavingsAssessment& assessment) {
    return {{"verdict", to_string(assessment.verdict)},
            {"offered_rate", assessment.offered_rate},
            {"mode", to_string(assessment.mode)},
            {"breakeven_rate", assessment.breakeven_rate},
            {"margin", assessment.margin}};
}

json to_json(const DecisionReport& report) {
    json out = {{"policy", to_json(report.policy)},
                {"gratuity", {{"G", report.G}, {"n", report.n}}},
                {"annual_net", report.annual_net},
                {"installment_net_total_at_maturity", report.installment_net_total_at_maturity},
                {"breakeven_simple", report.breakeven_simple},
                {"breakeven_continuous", report.breakeven_continuous},
                {"notes", report.notes}};
    if (report.savings_verdict) out["savings_verdict"] = to_json(*report.savings_verdict);
    if (report.loan_verdict) out["loan_verdict"] = to_json(*report.loan_verdict);
    return out;
}

json to_json(const CurveSeries& series) {
    json points = json::array();
    for (const auto& p : series.points) points.push_back({{"r_c", p.r_c}, {"phi", p.phi}});
    return {{"q", series.q}, {"delta", series.delta}, {"n", series.n}, {"points", std::move(points)}};
}

json to_json(const std::vector<AmortizationRow>& rows) {
    json out = json::array();
    for (const auto& row : rows)
        out.push_back({{"k", row.k},
                       {"payment", row.payment},
                       {"interest_portion", row.interest_portion},
                       {"principal_reduction", row.principal_reduction},
                       {"balance_after", row.balance_after}});
    return out;
}

json to_json(const Scenario& scenario) {
    json out;
    if (const auto* flat = std::get_if<TaxPolicy>(&scenario.policy)) {
        out["policy"] = to_json(*flat);
    } else {
        const auto& spec = std::get<BracketPolicy>(scenario.policy);
        json brackets = json::array();
        for (const auto& b : spec.schedule.brackets())
            brackets.push_back({{"lower_bound", b.lower_bound}, {"marginal_rate", b.marginal_rate}});
        out["policy"] = {{"brackets", std::move(brackets)}, {"gross", spec.gross}, {"q", spec.q}};
    }
    out["gratuity"] = {{"G", scenario.gratuity.amount()}, {"n", scenario.gratuity.installments()}};
    if (scenario.savings)
        out["savings"] = {{"rate", scenario.savings->rate}, {"mode", to_string(scenario.savings->mode)}};
    if (scenario.loan)
        out["loan"] = {{"L", scenario.loan->principal()},
                       {"m", scenario.loan->years()},
                       {"n", scenario.loan->periods_per_year()},
                       {"r_c", scenario.loan->rate()}};
    return out;
}

double number_field(const json& object, const char* key, const std::string& prefix) {
    const json& value = member(object, key, prefix);
    if (!value.is_number()) throw ValidationError(path_of(prefix, key), "expected a number");
    return value.get<double>();
}

int integer_field(const json& object, const char* key, const std::string& prefix) {
    const json& value = member(object, key, prefix);
    if (value.is_number_integer()) {
        const auto v = value.get<long long>();
        if (v < 1 || v > 1'000'000'000) throw DomainError(path_of(prefix, key), "out of range");
        return static_cast<int>(v);
    }
    if (value.is_number_float()) {
        const double v = value.get<double>();
        if (v == static_cast<double>(static_cast<long long>(v)) && v >= 1 && v <= 1e9)
            return static_cast<int>(v);
    }
    throw ValidationError(path_of(prefix, key), "expected a positive integer");
}

std::string string_field(const json& object, const char* key, const std::string& prefix) {
    const json& value = member(object, key, prefix);
    if (!value.is_string()) throw ValidationError(path_of(prefix, key), "expected a string");
    return value.get<std::string>();
}

namespace {

// Rethrows domain errors from constructors with the JSON path of the section.
template <typename Build>
auto with_prefix(const std::string& prefix, Build&& build) {
    try {
        return build();
    } catch (const ValidationError& e) {
        throw ValidationError(prefix + "." + e.field(), e.message());
    } catch (const DomainError& e) {
        throw DomainError(prefix + "." + e.field(), e.message());
    }
}

} // namespace

PolicySpec policy_from_json(const json& object, const std::string& prefix) {
    if (!object.is_object()) throw ValidationError(prefix, "expected a JSON object");
    const double q = number_field(object, "q", prefix);
    if (!object.contains("brackets")) {
        const double delta = number_field(object, "delta", prefix);
        return with_prefix(prefix, [&] { return PolicySpec{TaxPolicy(q, delta)}; });
    }

    const std::string bracket_path = prefix + ".brackets";
    const json& list = object.at("brackets");
    if (!list.is_array()) throw ValidationError(bracket_path, "expected an array");
    std::vector<Bracket> brackets;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string item = bracket_path + "[" + std::to_string(i) + "]";
        brackets.push_back({number_field(list[i], "lower_bound", item),
                            number_field(list[i], "marginal_rate", item)});
    }
    const double gross = number_field(object, "gross", prefix);
    return with_prefix(prefix, [&] {
        BracketPolicy spec{BracketSchedule(std::move(brackets)), gross, q};
        // Validate q and the effective rate eagerly so errors carry this path.
        (void)resolve_policy(spec);
        return PolicySpec{std::move(spec)};
    });
}

Scenario scenario_from_json(const json& request) {
    if (!request.is_object()) throw ValidationError("body", "expected a JSON object");
    if (!request.contains("policy")) throw ValidationError("policy", "missing required field");
    PolicySpec policy = policy_from_json(request.at("policy"), "policy");

    if (!request.contains("gratuity")) throw ValidationError("gratuity", "missing required field");
    const json& g = request.at("gratuity");
    const double G = number_field(g, "G", "gratuity");
    const int n = integer_field(g, "n", "gratuity");
    GratuityTerms gratuity = with_prefix("gratuity", [&] { return GratuityTerms(G, n); });

    std::optional<SavingsOffer> savings;
    if (request.contains("savings") && !request.at("savings").is_null()) {
        const json& s = request.at("savings");
        const double rate = number_field(s, "rate", "savings");
        const std::string mode_text = string_field(s, "mode", "savings");
        if (!(rate >= 0.0) || !std::isfinite(rate)) throw DomainError("savings.rate", "must be non-negative");
        savings = SavingsOffer{rate, with_prefix("savings", [&] { return parse_compounding_mode(mode_text); })};
    }

    std::optional<LoanTerms> loan;
    if (request.contains("loan") && !request.at("loan").is_null()) {
        const json& l = request.at("loan");
        const double L = number_field(l, "L", "loan");
        const int m = integer_field(l, "m", "loan");
        const int ln = integer_field(l, "n", "loan");
        const double r_c = number_field(l, "r_c", "loan");
        loan = with_prefix("loan", [&] { return LoanTerms(L, m, ln, r_c); });
    }

    if (!savings && !loan) throw ValidationError("scenario", "needs a savings offer, a loan, or both");
    return Scenario{std::move(policy), gratuity, savings, loan};
}

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError("body", std::string("malformed JSON: ") + e.what());
    }
}

} // namespace gratuity::json
