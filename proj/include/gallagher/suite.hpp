#pragma once

// The acceptance battery: ten numbered criteria, each reduced to one
// pass/fail line. Every random input comes from a seeded generator, so a run
// is a pure function of (profile, seed).

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace gallagher::acceptance {

/// quick: the stated grids. full: every grid doubled.
enum class Profile { quick, full };

Profile parse_profile(std::string_view text);
std::string to_string(Profile profile);

struct SuiteOptions {
    Profile profile = Profile::quick;
    std::uint64_t seed = 0;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    double seconds = 0;
    std::vector<std::string> notes;  // measured values and every failed check
};

inline constexpr int kCriteria = 10;

/// Runs criterion `id` in [1, kCriteria]. Exceptions other than ResourceError
/// are caught and turn the criterion red.
CriterionResult run_criterion(int id, const SuiteOptions& options);

/// Runs every criterion in order, reporting each as it finishes.
std::vector<CriterionResult> run_suite(const SuiteOptions& options,
                                       const std::function<void(const CriterionResult&)>& on_result = {});

/// "criterion  3  PASS  transform cross-validation  [0.41 s]".
std::string summary_line(const CriterionResult& result);

}  // namespace gallagher::acceptance
