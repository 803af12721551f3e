// One PASS/FAIL line per numbered check; exits nonzero when any check fails.
#include <cstdio>

#include "stellar/verify.hpp"

int main()
{
    int failed = 0;
    stellar::run_checks({}, false, [&](const stellar::CheckResult& r) {
        std::printf("%s %d %s (%.1fs)\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds);
        for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
        std::fflush(stdout);
        if (!r.passed) ++failed;
    });
    std::printf("%d of %d checks failed\n", failed, stellar::check_count());
    return failed == 0 ? 0 : 1;
}
