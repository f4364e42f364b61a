// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <iostream>

#include "kita/selftest.hpp"

int main(int argc, char** argv) {
    kita::SelftestOptions opts;
    if (argc > 1) opts.filter = argv[1];
    auto results = kita::run_selftest(opts);
    std::cout << kita::format_results(results);
    for (const auto& r : results)
        if (!r.pass) return 1;
    return 0;
}
