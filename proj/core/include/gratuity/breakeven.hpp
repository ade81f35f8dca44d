#pragma once

#include <string_view>

#include "gratuity/tax.hpp"

namespace gratuity {

enum class CompoundingMode { Simple, Continuous };

std::string_view to_string(CompoundingMode mode) noexcept;
/// Accepts "simple" and "continuous"; throws ValidationError otherwise.
CompoundingMode parse_compounding_mode(std::string_view text);

/// Minimum savings rate at which early receipt matches the year-end lump sum.
struct BreakevenResult {
    double rate;
    CompoundingMode mode;
    int n;
    /// net_year_end - maturity at `rate`, with G = 1.
    double residual;
};

/// Year-end value of `n` net installments of G/n invested at simple rate `r`.
/// Installment t (1-based) is received at the start of period t and earns
/// interest for (n - t + 1)/n of a year.
double maturity_simple(double G, int n, double r, const TaxPolicy& policy);

/// As maturity_simple, with continuous compounding at rate `r`.
double maturity_continuous(double G, int n, double r, const TaxPolicy& policy);

double maturity(double G, int n, double r, CompoundingMode mode, const TaxPolicy& policy);

/// q delta / (1 - delta).
BreakevenResult breakeven_lump_simple(const TaxPolicy& policy);

/// ln{[1 - (1-q) delta] / (1 - delta)}.
BreakevenResult breakeven_lump_continuous(const TaxPolicy& policy);

/// 2 n q delta / [(n+1)(1 - delta)].
BreakevenResult breakeven_installments_simple(int n, const TaxPolicy& policy);

/// Has no closed form; solved by bisection on the (increasing) maturity value.
/// Returns rate 0 without solving when q = 0 or delta = 0.
BreakevenResult breakeven_installments_continuous(int n, const TaxPolicy& policy);

BreakevenResult breakeven_installments(int n, CompoundingMode mode, const TaxPolicy& policy);

} // namespace gratuity
