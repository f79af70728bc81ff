#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gallai::cli {

/// Exit statuses shared by every subcommand.
enum Exit : int {
    kHolds = 0,     ///< claim holds / nothing found / success
    kViolated = 1,  ///< witness found, or value mismatch
    kUsage = 2,     ///< bad arguments or malformed input
    kBudget = 3,    ///< search budget exhausted
};

/// Runs one invocation. args[0] is the program name. The JSON report goes
/// to `out`, human diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Seed used when --seed is absent: GALLAI_FORGE_SEED if set, else 0.
std::uint64_t default_seed();

} // namespace gallai::cli
