#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gratuity/loan.hpp"
#include "gratuity/scenario.hpp"

namespace gratuity {

enum class Format { Json, Csv, Text };

/// "json", "csv" or "text"; anything else is a ValidationError.
Format parse_format(std::string_view tag);

std::string serialize_report(const DecisionReport& report, Format format);
std::string serialize_curve(const CurveSeries& series, Format format);
std::string serialize_schedule(const std::vector<AmortizationRow>& rows, Format format);
std::string serialize_breakeven(const BreakevenResult& result, Format format);

/// Fixed-point rendering that never prints a negative zero.
std::string format_fixed(double value, int decimals);
/// 0.205128 -> "20.51%"
std::string format_percent(double fraction);

/// "Wait for year-end", "Take installments", "Indifferent".
std::string_view describe(Verdict verdict) noexcept;

} // namespace gratuity
