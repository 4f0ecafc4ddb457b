// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Every line carries the anchor string of the headline claim it checks;
// criteria whose commonly quoted value needed correction also print the
// note recorded by the verification library.

#include <cstdio>

#include "so3x8/verify.hpp"

int main() {
    const auto criteria = so3x8::verify::run_criteria({});
    bool all = true;
    for (const auto& criterion : criteria) {
        std::printf("[%s] %2d. %s\n", criterion.pass ? "PASS" : "FAIL",
                    criterion.id, criterion.anchor.c_str());
        if (!criterion.note.empty())
            std::printf("         note: %s\n", criterion.note.c_str());
        if (!criterion.pass) {
            for (const auto& check : criterion.checks)
                if (!check.pass)
                    std::printf("         failed: %s\n           expected: %s\n"
                                "           computed: %s\n",
                                check.claim.c_str(), check.expected.c_str(),
                                check.computed.c_str());
            all = false;
        }
    }
    std::size_t checks = 0;
    for (const auto& criterion : criteria) checks += criterion.checks.size();
    std::printf("%s: %zu criteria, %zu checks\n", all ? "ACCEPTED" : "REJECTED",
                criteria.size(), checks);
    return all ? 0 : 1;
}
