#include <catch2/catch.hpp>

#include <map>
#include <string>

#include "snrep/oracle.hpp"

using namespace snrep;

namespace {
Permutation perm(std::vector<int> one_line) {
    return Permutation::from_one_line(one_line);
}

// Deliberately corrupted closed form: keeps the relabeled entry but drops the
// first-column subtraction. Used to prove the equality checks can fail.
IntMatrix standard_matrix_without_subtraction(const Permutation& p) {
    const int n = p.degree();
    IntMatrix b(n - 1, n - 1);
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j)
            b(i - 1, j - 1) = p.image(n + 1 - i - 1) == (n + 1 - j - 1) ? 1 : 0;
    return b;
}
}  // namespace

TEST_CASE("direct conjugation") {
    REQUIRE(conjugate_direct(Permutation::identity(3)) == IntMatrix::identity(3));
    REQUIRE(conjugate_direct(perm({2, 1, 3})) ==
            IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, -1, -1}}));
    REQUIRE_THROWS_AS(conjugate_direct(Permutation::identity(1)),
                      std::invalid_argument);

    SECTION("similarity preserves the trace, all of S_5") {
        for (const auto& p : enumerate(5))
            REQUIRE(trace(conjugate_direct(p)) == fixed_points(p));
    }
}

TEST_CASE("block structure of the conjugate") {
    REQUIRE(verify_block_structure(Permutation::identity(4)).passed);
    for (const auto& p : enumerate(4))
        REQUIRE(verify_block_structure(p).passed);
    for (const auto& p : enumerate(6))
        REQUIRE(verify_block_structure(p).passed);
}

TEST_CASE("mutation sentinel: dropping the subtraction term must be caught") {
    std::uint64_t failures = 0;
    for (const auto& p : enumerate(3)) {
        const IntMatrix mutated =
            direct_sum(IntMatrix::from_rows({{1}}), standard_matrix_without_subtraction(p));
        if (conjugate_direct(p) != mutated)
            ++failures;
    }
    REQUIRE(failures > 0);

    // The honest form passes everywhere, so the failures above come from the
    // mutation alone.
    std::uint64_t honest_failures = 0;
    for (const auto& p : enumerate(3)) {
        const IntMatrix blocked =
            direct_sum(IntMatrix::from_rows({{1}}), standard_matrix(p));
        if (conjugate_direct(p) != blocked)
            ++honest_failures;
    }
    REQUIRE(honest_failures == 0);
}

TEST_CASE("suite over S_3 matches the exhaustive element and pair counts") {
    const VerificationReport report = run_suite(3, SuiteMode::exhaustive());
    REQUIRE(report.n == 3);
    REQUIRE(report.all_passed());
    REQUIRE(report.first_failure() == nullptr);

    std::map<std::string, std::uint64_t> tested;
    for (const auto& check : report.checks) {
        REQUIRE(check.passed);
        REQUIRE(check.elements_tested > 0);
        REQUIRE_FALSE(check.first_counterexample.has_value());
        tested[check.check_name] = check.elements_tested;
    }
    REQUIRE(tested.at("orthogonality") == 6);
    REQUIRE(tested.at("casimir_commutation") == 6);
    REQUIRE(tested.at("block_structure") == 6);
    REQUIRE(tested.at("standard_block_agreement") == 6);
    REQUIRE(tested.at("det_trace_character") == 6);
    REQUIRE(tested.at("inverse_identity") == 1);
    REQUIRE(tested.at("casimir_diagonalization") == 1);
    for (RepKind kind : all_rep_kinds)
        REQUIRE(tested.at("homomorphism_" + std::string(to_string(kind))) == 36);
}

TEST_CASE("suite over S_6 is exhaustive and clean") {
    const VerificationReport report = run_suite(6, SuiteMode::exhaustive());
    REQUIRE(report.all_passed());
    for (const auto& check : report.checks)
        if (check.check_name == "orthogonality")
            REQUIRE(check.elements_tested == 720);
}

TEST_CASE("sampled suite is deterministic under a fixed seed") {
    const VerificationReport a = run_suite(10, SuiteMode::sampled(1000, 42));
    const VerificationReport b = run_suite(10, SuiteMode::sampled(1000, 42));
    REQUIRE(a.all_passed());
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        REQUIRE(a.checks[i].check_name == b.checks[i].check_name);
        REQUIRE(a.checks[i].elements_tested == b.checks[i].elements_tested);
        REQUIRE(a.checks[i].passed == b.checks[i].passed);
    }
    for (const auto& check : a.checks)
        if (check.check_name == "orthogonality")
            REQUIRE(check.elements_tested == 1000);
}

TEST_CASE("suite preconditions") {
    REQUIRE_THROWS_AS(run_suite(9, SuiteMode::exhaustive()), std::length_error);
    REQUIRE_THROWS_AS(run_suite(12, SuiteMode::exhaustive()), std::length_error);
    REQUIRE_THROWS_AS(run_suite(1, SuiteMode::exhaustive()), std::invalid_argument);
    REQUIRE_THROWS_AS(run_suite(5, SuiteMode::sampled(0, 1)), std::invalid_argument);
    REQUIRE_NOTHROW(run_suite(9, SuiteMode::sampled(25, 7)));
}

TEST_CASE("check records keep the smallest-rank counterexample") {
    CheckRecord rec{"probe"};
    rec.record_failure(9, {3, 2, 1}, IntMatrix::identity(2), IntMatrix(2, 2));
    rec.record_failure(4, {2, 3, 1}, IntMatrix::identity(2), IntMatrix(2, 2));
    rec.record_failure(7, {1, 3, 2}, IntMatrix::identity(2), IntMatrix(2, 2));
    REQUIRE_FALSE(rec.passed);
    REQUIRE(rec.first_counterexample.has_value());
    REQUIRE(rec.first_counterexample->rank == 4);
    REQUIRE(rec.first_counterexample->one_line == std::vector<int>{2, 3, 1});
}
