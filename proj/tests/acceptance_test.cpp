// Acceptance suite: runs every lemma-level check at full scale and prints
// one pass/fail line per criterion. Exits non-zero if any criterion fails.

#include <chrono>
#include <iostream>

#include "kripkit/checkers.hpp"

int main() {
    using clock = std::chrono::steady_clock;

    // The small scale is a contract of its own: it must finish fast and
    // report the same stable ids.
    const auto small_start = clock::now();
    const kripkit::SuiteReport small = kripkit::verify_paper_suite(kripkit::SuiteScale::Small);
    const double small_secs =
        std::chrono::duration<double>(clock::now() - small_start).count();

    const kripkit::SuiteReport report = kripkit::verify_paper_suite(kripkit::SuiteScale::Default);
    for (const kripkit::CheckResult& r : report.results)
        std::cout << r.name << "\t" << (r.holds ? "PASS" : "FAIL") << "\t"
                  << (r.holds ? r.notes : r.witness) << " [" << r.seconds << "s]\n";

    bool ok = report.all_pass();
    if (!small.all_pass()) {
        std::cout << "suite.small-scale\tFAIL\tsmall scale reports a failure\n";
        ok = false;
    } else if (small_secs >= 10.0) {
        std::cout << "suite.small-scale\tFAIL\ttook " << small_secs << "s (>= 10s)\n";
        ok = false;
    } else {
        std::cout << "suite.small-scale\tPASS\t" << small_secs << "s\n";
    }

    if (report.results.size() < 12 || small.results.size() != report.results.size()) {
        std::cout << "suite.report-shape\tFAIL\texpected >= 12 stable ids\n";
        ok = false;
    } else {
        bool stable = true;
        for (std::size_t i = 0; i < report.results.size(); ++i)
            if (report.results[i].name != small.results[i].name) stable = false;
        std::cout << (stable ? "suite.report-shape\tPASS\t" : "suite.report-shape\tFAIL\t")
                  << report.results.size() << " stable ids\n";
        ok = ok && stable;
    }

    std::cout << (ok ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << "\n";
    return ok ? 0 : 1;
}
