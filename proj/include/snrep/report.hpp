#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "snrep/int_matrix.hpp"

namespace snrep {

/// Smallest-rank witness of a failed identity. For per-element checks `rank`
/// is the element's lexicographic rank; for pair checks it is the 1-based
/// ordinal of the pair in the deterministic test sequence.
struct Counterexample {
    std::uint64_t rank;
    std::vector<int> one_line;  // 1-based notation of the offending element
    IntMatrix expected;
    IntMatrix actual;
};

/// Outcome of one named identity check. passed is true exactly when no
/// counterexample was found.
struct CheckRecord {
    std::string check_name;
    std::uint64_t elements_tested = 0;
    bool passed = true;
    std::optional<Counterexample> first_counterexample;

    /// Record a failure, keeping the smallest-rank counterexample.
    void record_failure(std::uint64_t rank, std::vector<int> one_line,
                        IntMatrix expected, IntMatrix actual) {
        passed = false;
        if (!first_counterexample || rank < first_counterexample->rank)
            first_counterexample = Counterexample{rank, std::move(one_line),
                                                  std::move(expected),
                                                  std::move(actual)};
    }
};

struct VerificationReport {
    int n = 0;
    std::vector<CheckRecord> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed)
                return false;
        return true;
    }

    /// First failing check, if any.
    const CheckRecord* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed)
                return &c;
        return nullptr;
    }
};

}  // namespace snrep
