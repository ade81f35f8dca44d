#pragma once

#include <string_view>

namespace gratuity {

enum class Verdict { WaitYearEnd, TakeInstallments, Indifferent };

/// Width of the band around zero that is reported as Indifferent.
inline constexpr double kVerdictTolerance = 1e-9;

std::string_view to_string(Verdict verdict) noexcept;
Verdict parse_verdict(std::string_view text);

/// Positive advantage for waiting -> WaitYearEnd, negative -> TakeInstallments.
constexpr Verdict verdict_from_advantage(double wait_advantage) noexcept {
    if (wait_advantage > kVerdictTolerance) return Verdict::WaitYearEnd;
    if (wait_advantage < -kVerdictTolerance) return Verdict::TakeInstallments;
    return Verdict::Indifferent;
}

} // namespace gratuity
