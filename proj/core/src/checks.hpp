#pragma once

#include <cmath>
#include <string>

#include "gratuity/error.hpp"

namespace gratuity::detail {

inline void require_fraction(const char* field, double v) {
    if (!std::isfinite(v) || v < 0.0 || v >= 1.0)
        throw DomainError(field, "must lie in [0, 1), got " + std::to_string(v));
}

inline void require_positive(const char* field, double v) {
    if (!std::isfinite(v) || v <= 0.0)
        throw DomainError(field, "must be positive, got " + std::to_string(v));
}

inline void require_non_negative(const char* field, double v) {
    if (!std::isfinite(v) || v < 0.0)
        throw DomainError(field, "must be non-negative, got " + std::to_string(v));
}

inline void require_count(const char* field, int v) {
    if (v < 1) throw DomainError(field, "must be at least 1, got " + std::to_string(v));
}

} // namespace gratuity::detail
