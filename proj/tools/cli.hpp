#pragma once

#include <string>
#include <vector>

namespace gratuity::cli {

struct Outcome {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Runs one invocation. `args` excludes the program name.
/// Exit codes: 0 success, 2 invalid input, 1 internal failure.
Outcome run(const std::vector<std::string>& args);

/// "0.25" -> 0.25, "25%" -> 0.25. Throws DomainError(flag, ...) otherwise.
double parse_fraction(const std::string& flag, const std::string& text);

} // namespace gratuity::cli
