#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gratuity/breakeven.hpp"
#include "gratuity/error.hpp"
#include "gratuity/json.hpp"
#include "gratuity/loan.hpp"
#include "gratuity/scenario.hpp"
#include "gratuity/serialize.hpp"

namespace gratuity::cli {

namespace {

constexpr const char* kDefaultsVariable = "GRATUITY_DEFAULTS";

// Parameters with built-in defaults (the Botswana case) that a JSON file named
// by GRATUITY_DEFAULTS may override.
struct Defaults {
    double q = 1.0 / 3.0;
    double delta = 0.25;
    int n = 12;
    std::optional<double> G;
    std::string source = "built-in";
};

Defaults load_defaults() {
    Defaults d;
    const char* path = std::getenv(kDefaultsVariable);
    if (!path || !*path) return d;
    std::ifstream in(path);
    if (!in) throw ValidationError(kDefaultsVariable, std::string("cannot read ") + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto doc = json::parse(buffer.str());
    if (!doc.is_object()) throw ValidationError(kDefaultsVariable, "expected a JSON object");
    if (doc.contains("q")) d.q = json::number_field(doc, "q");
    if (doc.contains("delta")) d.delta = json::number_field(doc, "delta");
    if (doc.contains("n")) d.n = json::integer_field(doc, "n");
    if (doc.contains("G")) d.G = json::number_field(doc, "G");
    d.source = path;
    return d;
}

double parse_number(const std::string& flag, const std::string& text) {
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size())
        throw DomainError(flag, "expected a number, got \"" + text + "\"");
    return value;
}

// Options held as text so "25%" and "0.25" both parse, and so presence is known.
struct Flags {
    std::optional<std::string> q, delta, G, rate, L, r_c, min, max, brackets, gross, input;
    std::optional<int> n, m, samples;
    std::string mode = "simple";
    std::string format = "text";
};

struct Resolved {
    TaxPolicy policy;
    int n;
    std::string banner;
};

Resolved resolve_policy_flags(const Flags& f, const Defaults& d) {
    std::ostringstream banner;
    auto tag = [](bool given) { return given ? "" : " (default)"; };
    const double q = f.q ? parse_fraction("--q", *f.q) : d.q;
    const double delta = f.delta ? parse_fraction("--delta", *f.delta) : d.delta;
    const int n = f.n.value_or(d.n);
    if (n < 1) throw DomainError("--n", "must be at least 1");
    banner << "parameters: q = " << format_fixed(q, 6) << tag(f.q.has_value())
           << ", delta = " << format_fixed(delta, 6) << tag(f.delta.has_value()) << ", n = " << n
           << tag(f.n.has_value()) << '\n';
    try {
        return {TaxPolicy(q, delta), n, banner.str()};
    } catch (const DomainError& e) {
        throw DomainError("--" + e.field(), e.message());
    }
}

double require_gratuity(const Flags& f, const Defaults& d) {
    if (f.G) return parse_number("--G", *f.G);
    if (d.G) return *d.G;
    throw DomainError("--G", "gratuity amount is required");
}

LoanTerms loan_from_flags(const Flags& f, int n) {
    if (!f.L) throw DomainError("--L", "loan principal is required");
    if (!f.r_c) throw DomainError("--r_c", "loan rate is required");
    if (!f.m) throw DomainError("--m", "loan term in years is required");
    try {
        return {parse_number("--L", *f.L), *f.m, n, parse_fraction("--r_c", *f.r_c)};
    } catch (const DomainError& e) {
        throw DomainError(e.field().starts_with("--") ? e.field() : "--" + e.field(), e.message());
    }
}

// "0:0,36000:25%" -> [(0, 0), (36000, 0.25)]
BracketSchedule parse_brackets(const std::string& text) {
    std::vector<Bracket> brackets;
    std::stringstream list(text);
    std::string item;
    while (std::getline(list, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw DomainError("--brackets", "expected lower:rate pairs, got \"" + item + "\"");
        brackets.push_back({parse_number("--brackets", item.substr(0, colon)),
                            parse_fraction("--brackets", item.substr(colon + 1))});
    }
    try {
        return BracketSchedule(std::move(brackets));
    } catch (const DomainError& e) {
        throw DomainError("--brackets", e.message());
    }
}

Scenario scenario_from_flags(const Flags& f, const Defaults& d, std::string& banner) {
    if (f.input) {
        std::ifstream in(*f.input);
        if (!in) throw DomainError("--input", "cannot read " + *f.input);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return json::scenario_from_json(json::parse(buffer.str()));
    }

    Resolved base = resolve_policy_flags(f, d);
    banner = base.banner;
    PolicySpec policy = base.policy;
    if (f.brackets) {
        if (!f.gross) throw DomainError("--gross", "required with --brackets");
        BracketPolicy spec{parse_brackets(*f.brackets), parse_number("--gross", *f.gross), base.policy.q()};
        const TaxPolicy effective = resolve_policy(spec);
        banner += "effective tax rate from brackets: " + format_fixed(effective.delta(), 6) + '\n';
        policy = std::move(spec);
    }

    const double G = require_gratuity(f, d);
    if (!(G > 0.0)) throw DomainError("--G", "must be positive");
    Scenario scenario{policy, GratuityTerms(G, base.n), std::nullopt, std::nullopt};
    if (f.rate)
        scenario.savings = SavingsOffer{parse_fraction("--rate", *f.rate), parse_compounding_mode(f.mode)};
    if (f.L || f.r_c || f.m) scenario.loan = loan_from_flags(f, base.n);
    if (!scenario.savings && !scenario.loan)
        throw DomainError("--rate", "give a savings rate (--rate) and/or a loan (--L, --m, --r_c)");
    return scenario;
}

std::string with_banner(const std::string& banner, const std::string& body, Format format) {
    return format == Format::Text ? banner + body : body;
}

void add_policy_options(CLI::App* cmd, Flags& f) {
    cmd->add_option("--q", f.q, "Tax-exempt fraction after one year (0.3333 or 33.33%)");
    cmd->add_option("--delta", f.delta, "Tax rate (0.25 or 25%)");
    cmd->add_option("--n", f.n, "Installments (or loan payments) per year");
}

void add_format_option(CLI::App* cmd, Flags& f) {
    cmd->add_option("--format", f.format, "Output format: text, json or csv");
}

void add_loan_options(CLI::App* cmd, Flags& f) {
    cmd->add_option("--L", f.L, "Loan principal");
    cmd->add_option("--m", f.m, "Loan term in years");
    cmd->add_option("--r_c,--rc", f.r_c, "Nominal annual loan rate, compounded n times a year");
}

std::string one_line(std::string text) {
    for (char& c : text)
        if (c == '\n' || c == '\r') c = ' ';
    while (!text.empty() && text.back() == ' ') text.pop_back();
    return text;
}

} // namespace

double parse_fraction(const std::string& flag, const std::string& text) {
    if (!text.empty() && text.back() == '%') return parse_number(flag, text.substr(0, text.size() - 1)) / 100.0;
    return parse_number(flag, text);
}

Outcome run(const std::vector<std::string>& args) {
    Flags f;
    CLI::App app{"Gratuity installment vs. year-end lump sum decision tool", "gratuity"};
    app.require_subcommand(1);

    auto* breakeven = app.add_subcommand("breakeven", "Minimum savings rate that makes installments worthwhile");
    add_policy_options(breakeven, f);
    breakeven->add_option("--mode", f.mode, "Interest on savings: simple or continuous");
    add_format_option(breakeven, f);

    auto* loan = app.add_subcommand("loan", "Wait-or-installments decision when repaying a loan");
    add_policy_options(loan, f);
    add_loan_options(loan, f);
    loan->add_option("--G", f.G, "Annual gratuity");
    add_format_option(loan, f);

    auto* cmp = app.add_subcommand("compare", "Full decision report for a scenario");
    add_policy_options(cmp, f);
    add_loan_options(cmp, f);
    cmp->add_option("--G", f.G, "Annual gratuity");
    cmp->add_option("--rate", f.rate, "Savings rate offered on the installments");
    cmp->add_option("--mode", f.mode, "Savings interest: simple or continuous");
    cmp->add_option("--brackets", f.brackets, "Progressive schedule as lower:rate pairs, e.g. 0:0,36000:25%");
    cmp->add_option("--gross", f.gross, "Income the bracket schedule is applied to");
    cmp->add_option("--input", f.input, "Read the scenario from a JSON request file instead of flags");
    add_format_option(cmp, f);

    auto* schedule = app.add_subcommand("schedule", "Amortization schedule of a level-payment loan");
    schedule->add_option("--n", f.n, "Payments per year");
    add_loan_options(schedule, f);
    add_format_option(schedule, f);

    auto* curve = app.add_subcommand("curve", "Sample the loan decision function phi(r_c)");
    add_policy_options(curve, f);
    curve->add_option("--min", f.min, "Lowest loan rate");
    curve->add_option("--max", f.max, "Highest loan rate");
    curve->add_option("--samples", f.samples, "Number of evenly spaced rates");
    add_format_option(curve, f);

    std::vector<const char*> argv{"gratuity"};
    for (const auto& a : args) argv.push_back(a.c_str());

    Outcome outcome;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        outcome.out = sub->help();
        return outcome;
    } catch (const CLI::ParseError& e) {
        outcome.exit_code = 2;
        outcome.err = "error: " + one_line(e.what()) + "\n";
        return outcome;
    }

    try {
        const Defaults defaults = load_defaults();
        const Format format = [&] {
            try {
                return parse_format(f.format);
            } catch (const DomainError& e) {
                throw DomainError("--format", e.message());
            }
        }();

        if (breakeven->parsed()) {
            const Resolved p = resolve_policy_flags(f, defaults);
            const CompoundingMode mode = [&] {
                try {
                    return parse_compounding_mode(f.mode);
                } catch (const DomainError& e) {
                    throw DomainError("--mode", e.message());
                }
            }();
            outcome.out = with_banner(p.banner, serialize_breakeven(breakeven_installments(p.n, mode, p.policy), format), format);
        } else if (loan->parsed()) {
            const Resolved p = resolve_policy_flags(f, defaults);
            const LoanTerms terms = loan_from_flags(f, p.n);
            const double G = require_gratuity(f, defaults);
            if (!(G >= 0.0)) throw DomainError("--G", "must be non-negative");
            const LoanDecision decision = decide_loan(terms, G, p.policy);
            std::string body;
            if (format == Format::Json) {
                body = json::to_json(decision).dump(2) + "\n";
            } else if (format == Format::Csv) {
                body = "phi,threshold,verdict,margin,total_repayment\n" + format_fixed(decision.phi_value, 6) + "," +
                       (decision.threshold ? format_fixed(*decision.threshold, 6) : "") + "," +
                       std::string(to_string(decision.verdict)) + "," + format_fixed(decision.margin, 6) + "," +
                       format_fixed(decision.total_repayment, 6) + "\n";
            } else {
                body = "phi(r_c) at " + format_percent(terms.rate()) + ": " + format_fixed(decision.phi_value, 6) +
                       "\nthreshold rate: " + (decision.threshold ? format_percent(*decision.threshold) : "none") +
                       "\nR1 - R2: " + format_fixed(decision.margin, 2) +
                       "\ntotal repayment: " + format_fixed(decision.total_repayment, 2) +
                       "\nverdict: " + std::string(describe(decision.verdict)) + "\n";
            }
            outcome.out = with_banner(p.banner, body, format);
        } else if (cmp->parsed()) {
            std::string banner;
            const Scenario scenario = scenario_from_flags(f, defaults, banner);
            outcome.out = with_banner(banner, serialize_report(compare(scenario), format), format);
        } else if (schedule->parsed()) {
            const LoanTerms terms = loan_from_flags(f, f.n.value_or(defaults.n));
            outcome.out = serialize_schedule(amortization_schedule(terms), format);
        } else if (curve->parsed()) {
            const Resolved p = resolve_policy_flags(f, defaults);
            const double lo = f.min ? parse_fraction("--min", *f.min) : 0.0;
            const double hi = f.max ? parse_fraction("--max", *f.max) : 0.5;
            const CurveSeries series = [&] {
                try {
                    return phi_curve(p.n, p.policy, lo, hi, f.samples.value_or(201));
                } catch (const DomainError& e) {
                    throw DomainError("--" + e.field(), e.message());
                }
            }();
            outcome.out = with_banner(p.banner, serialize_curve(series, format), format);
        }
    } catch (const DomainError& e) {
        outcome.exit_code = 2;
        outcome.err = "error: " + one_line(e.what()) + "\n";
        outcome.out.clear();
    } catch (const std::exception& e) {
        outcome.exit_code = 1;
        outcome.err = "internal error: " + one_line(e.what()) + "\n";
        outcome.out.clear();
    }
    return outcome;
}

} // namespace gratuity::cli
