#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace diffrad::cli {

// Exit codes shared by every subcommand.
inline constexpr int kVerified = 0;
inline constexpr int kViolation = 1;
inline constexpr int kHypothesesUnmet = 2;
inline constexpr int kUsageError = 3;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

using Observed = std::vector<std::pair<std::string, std::string>>;
using Expected = std::map<std::string, std::map<std::string, std::string>>;

struct FixtureResult {
    std::string name;
    Observed observed;
    std::vector<std::string> mismatches;  // "key: expected X, got Y"
    bool pass() const { return mismatches.empty(); }
};

/// Names of the built-in worked-example fixtures, in run order.
std::vector<std::string> fixture_names();
/// Values each fixture must reproduce.
Expected expected_fixture_values();
/// Computes every fixture (in parallel when jobs > 1) and compares against `expected`.
std::vector<FixtureResult> run_fixtures(const Expected& expected, long jobs);

}  // namespace diffrad::cli
