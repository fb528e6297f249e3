#include <catch2/catch.hpp>

#include "snrep/basis.hpp"

using namespace snrep;

TEST_CASE("p_matrix") {
    REQUIRE(p_matrix(2) == IntMatrix::from_rows({{1, -1}, {1, 1}}));
    REQUIRE(p_matrix(3) == IntMatrix::from_rows({{1, -1, -1}, {1, 0, 1}, {1, 1, 0}}));
    REQUIRE_THROWS_AS(p_matrix(1), std::invalid_argument);
    REQUIRE_THROWS_AS(p_matrix(0), std::invalid_argument);

    SECTION("first column is all ones") {
        for (int n = 2; n <= 20; ++n) {
            const IntMatrix p = p_matrix(n);
            for (int i = 0; i < n; ++i)
                REQUIRE(p(i, 0) == 1);
        }
    }
}

TEST_CASE("p_inverse_scaled") {
    const ScaledMatrix q2 = p_inverse_scaled(2);
    REQUIRE(q2.denominator() == 2);
    REQUIRE(q2.numerator() == IntMatrix::from_rows({{1, 1}, {-1, 1}}));

    const ScaledMatrix q3 = p_inverse_scaled(3);
    REQUIRE(q3.denominator() == 3);
    REQUIRE(q3.numerator() == IntMatrix::from_rows({{1, 1, 1}, {-1, -1, 2}, {-1, 2, -1}}));

    REQUIRE_THROWS_AS(p_inverse_scaled(1), std::invalid_argument);

    SECTION("first row of the numerator is all ones") {
        for (int n = 2; n <= 20; ++n) {
            const IntMatrix q = p_inverse_scaled(n).numerator();
            for (int j = 0; j < n; ++j)
                REQUIRE(q(0, j) == 1);
        }
    }

    SECTION("scaled equality ignores a common factor") {
        const ScaledMatrix doubled(std::int64_t{2} * q3.numerator(), 6);
        REQUIRE(doubled == q3);
    }
}

TEST_CASE("two-sided inverse identity, n = 2..64") {
    REQUIRE(verify_inverse(2).passed);
    REQUIRE(verify_inverse(3).passed);
    for (int n = 2; n <= 64; ++n) {
        const auto rec = verify_inverse(n);
        REQUIRE(rec.passed);
        REQUIRE_FALSE(rec.first_counterexample.has_value());

        const IntMatrix p = p_matrix(n);
        const IntMatrix q = p_inverse_scaled(n).numerator();
        const IntMatrix n_identity = std::int64_t{n} * IntMatrix::identity(n);
        REQUIRE(p * q == n_identity);
        REQUIRE(q * p == n_identity);
    }
}

TEST_CASE("diagonalized casimir") {
    REQUIRE(diagonalized_casimir(3) == IntMatrix::diagonal({2, -1, -1}));
    REQUIRE(diagonalized_casimir(2) == IntMatrix::diagonal({1, -1}));
    REQUIRE_THROWS_AS(diagonalized_casimir(1), std::invalid_argument);

    SECTION("similarity preserves the trace of the casimir") {
        for (int n = 2; n <= 12; ++n) {
            REQUIRE(trace(diagonalized_casimir(n)) == 0);
            REQUIRE(trace(casimir(n)) == 0);
        }
    }
}

TEST_CASE("change of basis diagonalizes the casimir, n = 2..64") {
    for (int n = 2; n <= 64; ++n) {
        REQUIRE(verify_diagonalization(n).passed);
        const IntMatrix qcp =
            p_inverse_scaled(n).numerator() * casimir(n) * p_matrix(n);
        REQUIRE(qcp == std::int64_t{n} * diagonalized_casimir(n));
    }
}

TEST_CASE("all-ones column is a casimir eigenvector with eigenvalue n-1") {
    for (int n = 2; n <= 32; ++n) {
        IntMatrix ones(n, 1);
        for (int i = 0; i < n; ++i)
            ones(i, 0) = 1;
        REQUIRE(casimir(n) * ones == std::int64_t{n - 1} * ones);
    }
}

TEST_CASE("p_matrix is nonsingular, n = 2..12") {
    for (int n = 2; n <= 12; ++n)
        REQUIRE(det(p_matrix(n)) != 0);
}
