#include <catch2/catch.hpp>

#include <random>

#include "snrep/perm_rep.hpp"

using namespace snrep;

namespace {
Permutation perm(std::vector<int> one_line) {
    return Permutation::from_one_line(one_line);
}
}  // namespace

TEST_CASE("perm_matrix places row i's 1 at the image of i") {
    REQUIRE(perm_matrix(Permutation::identity(3)) == IntMatrix::identity(3));
    REQUIRE(perm_matrix(perm({2, 1, 3})) ==
            IntMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
    REQUIRE(perm_matrix(perm({2, 3, 1})) ==
            IntMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
}

TEST_CASE("perm_matrix rows and columns each sum to 1, n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : enumerate(n)) {
            const IntMatrix a = perm_matrix(p);
            for (int i = 0; i < n; ++i) {
                std::int64_t row_sum = 0;
                std::int64_t col_sum = 0;
                for (int j = 0; j < n; ++j) {
                    row_sum += a(i, j);
                    col_sum += a(j, i);
                }
                REQUIRE(row_sum == 1);
                REQUIRE(col_sum == 1);
            }
        }
}

TEST_CASE("orthogonality") {
    REQUIRE(verify_orthogonal(Permutation::identity(4)).passed);
    REQUIRE(verify_orthogonal(perm({2, 1, 3})).passed);
    for (const auto& p : enumerate(5)) {
        const auto rec = verify_orthogonal(p);
        REQUIRE(rec.passed);
        REQUIRE(rec.elements_tested == 1);
        REQUIRE_FALSE(rec.first_counterexample.has_value());
    }
}

TEST_CASE("casimir matrix") {
    REQUIRE(casimir(1) == IntMatrix::from_rows({{0}}));
    REQUIRE(casimir(2) == IntMatrix::from_rows({{0, 1}, {1, 0}}));
    REQUIRE(casimir(3) == IntMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    REQUIRE_THROWS_AS(casimir(0), std::invalid_argument);
}

TEST_CASE("casimir commutes with every representation matrix") {
    REQUIRE(verify_casimir_commutes(Permutation::identity(5)).passed);

    SECTION("the product C*A is entrywise 1 - A") {
        const IntMatrix ca = casimir(3) * perm_matrix(perm({2, 3, 1}));
        REQUIRE(ca == IntMatrix::from_rows({{1, 0, 1}, {1, 1, 0}, {0, 1, 1}}));
    }

    SECTION("exhaustive through S_6") {
        for (int n = 1; n <= 6; ++n)
            for (const auto& p : enumerate(n)) {
                REQUIRE(verify_casimir_commutes(p).passed);
                const IntMatrix a = perm_matrix(p);
                const IntMatrix c = casimir(n);
                REQUIRE(c * a == a * c);
            }
    }
}

TEST_CASE("matrix map is a homomorphism") {
    SECTION("exhaustive pairs, n <= 4") {
        for (int n = 1; n <= 4; ++n) {
            const auto all = enumerate(n);
            for (const auto& p : all)
                for (const auto& q : all)
                    REQUIRE(perm_matrix(compose(p, q)) == perm_matrix(p) * perm_matrix(q));
        }
    }
    SECTION("sampled pairs, n = 5..8") {
        std::mt19937_64 rng(7);
        for (int n = 5; n <= 8; ++n) {
            const std::uint64_t total = factorial(n);
            for (int round = 0; round < 1000; ++round) {
                const auto p = Permutation::unrank(n, rng() % total + 1);
                const auto q = Permutation::unrank(n, rng() % total + 1);
                REQUIRE(perm_matrix(compose(p, q)) == perm_matrix(p) * perm_matrix(q));
            }
        }
    }
}

TEST_CASE("determinant and trace read off sign and fixed points, n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : enumerate(n)) {
            const IntMatrix a = perm_matrix(p);
            REQUIRE(det(a) == sign(p));
            REQUIRE(trace(a) == fixed_points(p));
        }
}
