#pragma once

#include "mcgauge/gauge.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace mcgauge::cli {

enum ExitCode : int { ok = 0, verification_failure = 1, input_error = 2 };

/// Runs one command line (without the program name). Gauge methods come from
/// `registry`, so tests can substitute a deliberately wrong route.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const MethodRegistry& registry = default_registry());

} // namespace mcgauge::cli
