#include "gratuity/verdict.hpp"

#include <string>

#include "gratuity/error.hpp"

namespace gratuity {

std::string_view to_string(Verdict verdict) noexcept {
    switch (verdict) {
    case Verdict::WaitYearEnd: return "WaitYearEnd";
    case Verdict::TakeInstallments: return "TakeInstallments";
    case Verdict::Indifferent: return "Indifferent";
    }
    return "Indifferent";
}

Verdict parse_verdict(std::string_view text) {
    for (auto v : {Verdict::WaitYearEnd, Verdict::TakeInstallments, Verdict::Indifferent})
        if (to_string(v) == text) return v;
    throw ValidationError("verdict", "unknown verdict \"" + std::string(text) + "\"");
}

} // namespace gratuity
