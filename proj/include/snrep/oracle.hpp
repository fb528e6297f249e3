#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "snrep/basis.hpp"
#include "snrep/int_matrix.hpp"
#include "snrep/perm.hpp"
#include "snrep/perm_rep.hpp"
#include "snrep/report.hpp"
#include "snrep/standard_rep.hpp"

namespace snrep {

/// inv(P) * perm_matrix(p) * P computed by brute-force exact multiplication
/// in cleared-denominator form: Q*A*P with Q = n*inv(P), then entrywise
/// division by n. Integrality of the quotient is a consequence of the theory;
/// a non-divisible entry throws std::logic_error, since it would falsify
/// either the closed forms or this implementation.
inline IntMatrix conjugate_direct(const Permutation& p) {
    const int n = p.degree();
    detail::require_standard_degree(n, "conjugate_direct");
    const IntMatrix q = p_inverse_scaled(n).numerator();
    IntMatrix m = q * perm_matrix(p) * p_matrix(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (m(i, j) % n != 0)
                throw std::logic_error(
                    "conjugate_direct: entry not divisible by the degree");
            m(i, j) /= n;
        }
    return m;
}

/// Checks that the direct conjugate equals both the block form
/// direct_sum([[1]], standard_matrix(p)) and the closed-form conjugate,
/// entrywise exactly.
inline CheckRecord verify_block_structure(const Permutation& p) {
    CheckRecord rec;
    rec.check_name = "block_structure";
    rec.elements_tested = 1;
    const IntMatrix direct = conjugate_direct(p);
    const IntMatrix blocked =
        direct_sum(IntMatrix::from_rows({{1}}), standard_matrix(p));
    if (direct != blocked) {
        rec.record_failure(p.rank(), p.one_line(), blocked, direct);
        return rec;
    }
    const IntMatrix closed = conjugated_closed_form(p);
    if (direct != closed)
        rec.record_failure(p.rank(), p.one_line(), closed, direct);
    return rec;
}

/// How run_suite walks the group: every element, or a seeded deterministic
/// sample of ranks.
struct SuiteMode {
    enum class Kind { exhaustive, sampled };

    Kind kind = Kind::exhaustive;
    std::uint64_t sample_count = 0;
    std::uint64_t seed = 0;

    static SuiteMode exhaustive() { return SuiteMode{}; }
    static SuiteMode sampled(std::uint64_t count, std::uint64_t seed) {
        return SuiteMode{Kind::sampled, count, seed};
    }
};

namespace detail {

// Ranks to visit. Exhaustive: 1..n!. Sampled: `count` seeded draws (modulo
// reduction; the slight bias is irrelevant for identity testing and keeps the
// sequence platform-independent).
inline std::vector<std::uint64_t> suite_ranks(int n, const SuiteMode& mode) {
    const std::uint64_t total = factorial(n);
    std::vector<std::uint64_t> ranks;
    if (mode.kind == SuiteMode::Kind::exhaustive) {
        ranks.reserve(static_cast<std::size_t>(total));
        for (std::uint64_t k = 1; k <= total; ++k)
            ranks.push_back(k);
    } else {
        if (mode.sample_count == 0)
            throw std::invalid_argument("run_suite: sample count must be positive");
        std::mt19937_64 rng(mode.seed);
        ranks.reserve(static_cast<std::size_t>(mode.sample_count));
        for (std::uint64_t i = 0; i < mode.sample_count; ++i)
            ranks.push_back(rng() % total + 1);
    }
    return ranks;
}

// Pairs for the homomorphism checks: all n!^2 pairs when exhaustive at
// n <= 4, otherwise seeded rank pairs (a fixed internal seed in exhaustive
// mode keeps the report deterministic).
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> suite_pairs(
    int n, const SuiteMode& mode) {
    const std::uint64_t total = factorial(n);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    if (mode.kind == SuiteMode::Kind::exhaustive && n <= 4) {
        pairs.reserve(static_cast<std::size_t>(total * total));
        for (std::uint64_t a = 1; a <= total; ++a)
            for (std::uint64_t b = 1; b <= total; ++b)
                pairs.emplace_back(a, b);
    } else {
        constexpr std::uint64_t kExhaustivePairSeed = 0x5eed0e1eu;
        constexpr std::uint64_t kPairCount = 1000;
        const bool sampled = mode.kind == SuiteMode::Kind::sampled;
        std::mt19937_64 rng(sampled ? mode.seed + 1 : kExhaustivePairSeed);
        const std::uint64_t count = sampled ? mode.sample_count : kPairCount;
        pairs.reserve(static_cast<std::size_t>(count));
        for (std::uint64_t i = 0; i < count; ++i) {
            const std::uint64_t a = rng() % total + 1;
            const std::uint64_t b = rng() % total + 1;
            pairs.emplace_back(a, b);
        }
    }
    return pairs;
}

}  // namespace detail

/// Runs every identity check over S_n and returns one record per check:
/// basis identities once per degree, orthogonality / Casimir commutation /
/// block structure / determinant-trace-character identities per element, and
/// the homomorphism law for all five representations per pair. Exhaustive
/// mode walks all n! elements and requires n <= 8; sampled mode draws a
/// seeded deterministic set of ranks. Identical (n, mode, seed) inputs
/// produce identical reports.
inline VerificationReport run_suite(int n, const SuiteMode& mode) {
    if (n < 2)
        throw std::invalid_argument("run_suite: degree must be at least 2");
    if (mode.kind == SuiteMode::Kind::exhaustive && n > 8)
        throw std::length_error(
            "run_suite: exhaustive mode is limited to n <= 8 (" +
            std::to_string(n) + "! elements is out of reach)");

    VerificationReport report;
    report.n = n;
    report.checks.push_back(verify_inverse(n));
    report.checks.push_back(verify_diagonalization(n));

    CheckRecord orthogonality{"orthogonality"};
    CheckRecord commutation{"casimir_commutation"};
    CheckRecord block{"block_structure"};
    CheckRecord block_agreement{"standard_block_agreement"};
    CheckRecord det_trace{"det_trace_character"};

    for (const std::uint64_t k : detail::suite_ranks(n, mode)) {
        const Permutation p = Permutation::unrank(n, k);

        auto merge = [&](CheckRecord& into, CheckRecord one) {
            into.elements_tested += 1;
            if (!one.passed && one.first_counterexample) {
                auto& ce = *one.first_counterexample;
                into.record_failure(ce.rank, std::move(ce.one_line),
                                    std::move(ce.expected), std::move(ce.actual));
            }
        };
        merge(orthogonality, verify_orthogonal(p));
        merge(commutation, verify_casimir_commutes(p));
        merge(block, verify_block_structure(p));

        // The standard block of the direct conjugate, cut out explicitly.
        block_agreement.elements_tested += 1;
        const IntMatrix cut = block_extract(conjugate_direct(p), 1, 1, n - 1, n - 1);
        const IntMatrix b = standard_matrix(p);
        if (cut != b)
            block_agreement.record_failure(k, p.one_line(), b, cut);

        // det A = det B = sign, trace A = fix, trace B = fix - 1, and the
        // sign-tensored character sign * (fix - 1).
        det_trace.elements_tested += 1;
        const IntMatrix a = perm_matrix(p);
        const std::int64_t sgn = sign(p);
        const std::int64_t fix = fixed_points(p);
        const bool ok = det(a) == sgn && det(b) == sgn && trace(a) == fix &&
                        trace(b) == fix - 1 &&
                        character(RepKind::standard_sign, p) == sgn * (fix - 1);
        if (!ok)
            det_trace.record_failure(k, p.one_line(), a, b);
    }

    report.checks.push_back(std::move(orthogonality));
    report.checks.push_back(std::move(commutation));
    report.checks.push_back(std::move(block));
    report.checks.push_back(std::move(block_agreement));
    report.checks.push_back(std::move(det_trace));

    for (RepKind kind : all_rep_kinds) {
        CheckRecord hom{"homomorphism_" + std::string(to_string(kind))};
        std::uint64_t ordinal = 0;
        for (const auto& [ka, kb] : detail::suite_pairs(n, mode)) {
            ++ordinal;
            ++hom.elements_tested;
            const Permutation pa = Permutation::unrank(n, ka);
            const Permutation pb = Permutation::unrank(n, kb);
            const Permutation pc = compose(pa, pb);
            const IntMatrix expected = rep_matrix(kind, pc);
            const IntMatrix actual = rep_matrix(kind, pa) * rep_matrix(kind, pb);
            if (actual != expected)
                hom.record_failure(ordinal, pc.one_line(), expected, actual);
        }
        report.checks.push_back(std::move(hom));
    }

    return report;
}

}  // namespace snrep
