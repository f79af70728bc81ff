#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace gallai::repro {

struct Options {
    /// Worker threads for the t = 5 certification (criterion 3 wants >= 4).
    std::size_t jobs = 4;
    bool stretch = true;
    /// Random colorings of order 16 sampled by the statistical check.
    std::size_t statistical_samples = 10'000;
    std::uint64_t seed = 0;
    std::filesystem::path scratch_dir = std::filesystem::temp_directory_path() / "gallai-forge-repro";
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    bool skipped = false;
    double seconds = 0.0;
    std::string detail;
};

inline constexpr int kCriterionCount = 9;

/// Runs one acceptance criterion (1..9) with its thresholds fixed in code.
CriterionResult run_criterion(int id, const Options& options);

/// All criteria in order. Progress lines go to `log` when non-null.
std::vector<CriterionResult> run_all(const Options& options, std::ostream* log = nullptr);

/// "[PASS] 4  lower-bound constructions  (12.3 s)  detail"
std::string format_line(const CriterionResult& r);

} // namespace gallai::repro
