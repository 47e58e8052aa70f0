// Integration suite: runs every bundled verification check and prints one
// pass/fail line per criterion with expected vs computed values. Exit code is
// the number of failures.

#include "nalg/verify.hpp"

#include <chrono>
#include <cstdio>

int main() {
    int failures = 0;
    int index = 0;
    auto suite_start = std::chrono::steady_clock::now();
    for (const nalg::CheckResult& r : nalg::acceptance_criteria()) {
        ++index;
        std::printf("%s  criterion %2d: %s\n", r.pass ? "PASS" : "FAIL", index,
                    r.name.c_str());
        std::printf("      expected: %s\n", r.expected.c_str());
        std::printf("      computed: %s\n", r.computed.c_str());
        if (!r.pass) ++failures;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                suite_start)
                      .count();
    std::printf("%d/%d criteria passed in %.1f s\n", index - failures, index, secs);
    return failures;
}
