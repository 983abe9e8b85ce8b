// One line per acceptance criterion; exits nonzero if any fails.

#include "pinidx/verify.hpp"

#include <cstdio>

int main() {
    int failed = 0;
    for (const auto& c : pinidx::verify::acceptance()) {
        std::printf("[%s] criterion %d: %s (%.3f s of %.0f s) -- %s\n", c.passed ? "PASS" : "FAIL", c.criterion,
                    c.name.c_str(), c.seconds, c.budget_seconds, c.detail.c_str());
        if (!c.passed) ++failed;
    }
    std::printf("%d of 9 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
