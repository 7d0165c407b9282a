// Acceptance gate: runs every built-in verification check once and prints
// one line per criterion.  Exit code 0 iff all of them pass.

#include <cstdio>
#include <vector>

#include "futaki/verify.hpp"

int main() {
    const std::vector<futaki::CheckResult> results = futaki::run_suite(futaki::Suite::all);

    int passed = 0;
    int index = 0;
    for (const auto& result : results) {
        ++index;
        passed += result.passed ? 1 : 0;
        std::printf("criterion %d %-32s %s  %s\n", index, result.name.c_str(),
                    result.passed ? "PASS" : "FAIL", result.detail.c_str());
    }
    std::printf("%d/%d criteria passed\n", passed, index);
    return passed == index ? 0 : 1;
}
