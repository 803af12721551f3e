#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace stellar {

struct VerifyOptions {
    int jobs = 1;
    std::uint64_t seed = 0;
    std::uint64_t budget = 1'000'000;
    // Vertex-link size allowed for mu-vectors; the 18-vertex 5-sphere needs 17.
    int sigma_cap = 17;
};

struct CheckResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::vector<std::string> failures;
    double seconds = 0;
};

// Numbered checks of every quantitative claim covered by the library.
int check_count();
std::string check_title(int id);
CheckResult run_check(int id, const VerifyOptions& options = {});
// Runs checks in order, reporting each as it completes; stops after the first failure when asked.
std::vector<CheckResult> run_checks(const VerifyOptions& options, bool stop_on_failure,
                                    const std::function<void(const CheckResult&)>& on_result = {});
std::string to_json(const std::vector<CheckResult>& results);

}  // namespace stellar
