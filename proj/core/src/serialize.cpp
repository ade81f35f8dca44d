#include "gratuity/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "gratuity/error.hpp"
#include "gratuity/json.hpp"

namespace gratuity {

namespace {

constexpr int kMachineDecimals = 6;

std::string fixed6(double v) { return format_fixed(v, kMachineDecimals); }
std::string money(double v) { return format_fixed(v, 2); }

std::string dump(const json::json& value) { return value.dump(2) + "\n"; }

void csv_row(std::ostringstream& out, std::string_view key, const std::string& value) {
    out << key << ',' << value << '\n';
}

std::string report_csv(const DecisionReport& r) {
    std::ostringstream out;
    out << "field,value\n";
    csv_row(out, "q", fixed6(r.policy.q()));
    csv_row(out, "delta", fixed6(r.policy.delta()));
    csv_row(out, "G", fixed6(r.G));
    csv_row(out, "n", std::to_string(r.n));
    csv_row(out, "annual_net", fixed6(r.annual_net));
    csv_row(out, "installment_net_total_at_maturity", fixed6(r.installment_net_total_at_maturity));
    csv_row(out, "breakeven_simple", fixed6(r.breakeven_simple));
    csv_row(out, "breakeven_continuous", fixed6(r.breakeven_continuous));
    if (const auto& s = r.savings_verdict) {
        csv_row(out, "savings.verdict", std::string(to_string(s->verdict)));
        csv_row(out, "savings.offered_rate", fixed6(s->offered_rate));
        csv_row(out, "savings.mode", std::string(to_string(s->mode)));
        csv_row(out, "savings.breakeven_rate", fixed6(s->breakeven_rate));
        csv_row(out, "savings.margin", fixed6(s->margin));
    }
    if (const auto& l = r.loan_verdict) {
        csv_row(out, "loan.verdict", std::string(to_string(l->verdict)));
        csv_row(out, "loan.phi", fixed6(l->phi_value));
        if (l->threshold) csv_row(out, "loan.threshold", fixed6(*l->threshold));
        csv_row(out, "loan.margin", fixed6(l->margin));
        csv_row(out, "loan.total_repayment", fixed6(l->total_repayment));
    }
    return out.str();
}

std::string report_text(const DecisionReport& r) {
    std::ostringstream out;
    out << "Gratuity decision report\n"
        << "  exempt fraction q          " << format_percent(r.policy.q()) << '\n'
        << "  tax rate delta             " << format_percent(r.policy.delta()) << '\n'
        << "  gratuity G                 " << money(r.G) << " in " << r.n << " installments\n"
        << "  net at year end            " << money(r.annual_net) << '\n'
        << "  installments at maturity   " << money(r.installment_net_total_at_maturity) << '\n'
        << "  break-even (simple)        " << format_percent(r.breakeven_simple) << '\n'
        << "  break-even (continuous)    " << format_percent(r.breakeven_continuous) << '\n';
    if (const auto& s = r.savings_verdict) {
        out << "Savings\n"
            << "  offered rate               " << format_percent(s->offered_rate) << " ("
            << to_string(s->mode) << ")\n"
            << "  break-even rate            " << format_percent(s->breakeven_rate) << '\n'
            << "  margin                     " << format_percent(s->margin) << '\n'
            << "  verdict                    " << describe(s->verdict) << '\n';
    }
    if (const auto& l = r.loan_verdict) {
        out << "Loan\n"
            << "  phi(r_c)                   " << fixed6(l->phi_value) << '\n'
            << "  threshold rate             " << (l->threshold ? format_percent(*l->threshold) : "none")
            << '\n'
            << "  R1 - R2                    " << money(l->margin) << '\n'
            << "  total repayment            " << money(l->total_repayment) << '\n'
            << "  verdict                    " << describe(l->verdict) << '\n';
    }
    out << "Notes: " << r.notes << '\n';
    return out.str();
}

} // namespace

Format parse_format(std::string_view tag) {
    if (tag == "json") return Format::Json;
    if (tag == "csv") return Format::Csv;
    if (tag == "text") return Format::Text;
    throw ValidationError("format", "unsupported format \"" + std::string(tag) + "\" (json, csv, text)");
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    std::string text = buf;
    if (text.starts_with('-') && text.find_first_not_of("-0.") == std::string::npos) text.erase(0, 1);
    return text;
}

std::string format_percent(double fraction) { return format_fixed(100.0 * fraction, 2) + "%"; }

std::string_view describe(Verdict verdict) noexcept {
    switch (verdict) {
    case Verdict::WaitYearEnd: return "Wait for year-end";
    case Verdict::TakeInstallments: return "Take installments";
    case Verdict::Indifferent: return "Indifferent";
    }
    return "Indifferent";
}

std::string serialize_report(const DecisionReport& report, Format format) {
    switch (format) {
    case Format::Json: return dump(json::to_json(report));
    case Format::Csv: return report_csv(report);
    case Format::Text: return report_text(report);
    }
    throw ValidationError("format", "unsupported format");
}

std::string serialize_curve(const CurveSeries& series, Format format) {
    if (format == Format::Json) return dump(json::to_json(series));
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "r_c,phi\n";
        for (const auto& p : series.points) out << fixed6(p.r_c) << ',' << fixed6(p.phi) << '\n';
        return out.str();
    }
    out << "phi(r_c) for q = " << format_percent(series.q) << ", delta = " << format_percent(series.delta)
        << ", n = " << series.n << '\n'
        << "  r_c        phi\n";
    for (const auto& p : series.points)
        out << "  " << format_percent(p.r_c) << (p.r_c < 0.1 ? "      " : "     ") << fixed6(p.phi) << '\n';
    return out.str();
}

std::string serialize_schedule(const std::vector<AmortizationRow>& rows, Format format) {
    if (format == Format::Json) return dump(json::to_json(rows));
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "k,payment,interest,principal,balance\n";
        for (const auto& r : rows)
            out << r.k << ',' << fixed6(r.payment) << ',' << fixed6(r.interest_portion) << ','
                << fixed6(r.principal_reduction) << ',' << fixed6(r.balance_after) << '\n';
        return out.str();
    }
    char line[160];
    std::snprintf(line, sizeof line, "%6s %14s %14s %14s %16s\n", "k", "payment", "interest", "principal",
                  "balance");
    out << line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%6d %14s %14s %14s %16s\n", r.k, money(r.payment).c_str(),
                      money(r.interest_portion).c_str(), money(r.principal_reduction).c_str(),
                      money(r.balance_after).c_str());
        out << line;
    }
    return out.str();
}

std::string serialize_breakeven(const BreakevenResult& result, Format format) {
    if (format == Format::Json) return dump(json::to_json(result));
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "mode,n,rate,residual\n"
            << to_string(result.mode) << ',' << result.n << ',' << fixed6(result.rate) << ','
            << format_fixed(result.residual, 12) << '\n';
        return out.str();
    }
    out << "break-even rate (" << to_string(result.mode) << ", n = " << result.n
        << "): " << format_percent(result.rate) << '\n';
    return out.str();
}

} // namespace gratuity
