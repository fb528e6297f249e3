#pragma once

#include <stdexcept>

#include "snrep/int_matrix.hpp"
#include "snrep/perm_rep.hpp"
#include "snrep/report.hpp"

namespace snrep {

namespace detail {
inline void require_basis_degree(int n, const char* where) {
    // The (n-1)-dimensional standard representation needs n >= 2; n = 1 would
    // make it 0-dimensional.
    if (n < 2)
        throw std::invalid_argument(std::string(where) +
                                    ": degree must be at least 2");
}
}  // namespace detail

/// Change-of-basis matrix that splits off the all-ones eigenvector of the
/// Casimir invariant. In 1-based indices:
///   P(i,j) = [j==1] - [j!=1]*[i==1] + [i == n+2-j]
/// Column 1 is the all-ones vector.
inline IntMatrix p_matrix(int n) {
    detail::require_basis_degree(n, "p_matrix");
    IntMatrix p(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            std::int64_t v = (j == 1) ? 1 : 0;
            v -= (j != 1 && i == 1) ? 1 : 0;
            v += (i == n + 2 - j) ? 1 : 0;
            p(i - 1, j - 1) = v;
        }
    return p;
}

/// The exact inverse of p_matrix(n), stored as (Q, n) with
///   Q(i,j) = 2*[i==1] - 1 + n*[i == n+2-j]   (1-based),
/// so P*Q = Q*P = n*I. Row 1 of Q is all ones.
inline ScaledMatrix p_inverse_scaled(int n) {
    detail::require_basis_degree(n, "p_inverse_scaled");
    IntMatrix q(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            std::int64_t v = (i == 1) ? 1 : -1;
            v += (i == n + 2 - j) ? n : 0;
            q(i - 1, j - 1) = v;
        }
    return ScaledMatrix(std::move(q), n);
}

/// Checks P*Q == n*I and Q*P == n*I exactly (both sides; the right inverse
/// alone would not rule out a one-sided defect).
inline CheckRecord verify_inverse(int n) {
    detail::require_basis_degree(n, "verify_inverse");
    CheckRecord rec;
    rec.check_name = "inverse_identity";
    rec.elements_tested = 1;
    const IntMatrix p = p_matrix(n);
    const IntMatrix q = p_inverse_scaled(n).numerator();
    const IntMatrix n_identity = static_cast<std::int64_t>(n) * IntMatrix::identity(n);
    const IntMatrix pq = p * q;
    if (pq != n_identity) {
        rec.record_failure(1, Permutation::identity(n).one_line(), n_identity, pq);
        return rec;
    }
    const IntMatrix qp = q * p;
    if (qp != n_identity)
        rec.record_failure(1, Permutation::identity(n).one_line(), n_identity, qp);
    return rec;
}

/// The Casimir invariant after the change of basis: diag(n-1, -1, ..., -1).
inline IntMatrix diagonalized_casimir(int n) {
    detail::require_basis_degree(n, "diagonalized_casimir");
    IntMatrix d(n, n);
    for (int i = 0; i < n; ++i)
        d(i, i) = (i == 0) ? n - 1 : -1;
    return d;
}

/// Checks Q*C*P == n*D in cleared-denominator form, which is exactly
/// inv(P)*C*P == D.
inline CheckRecord verify_diagonalization(int n) {
    detail::require_basis_degree(n, "verify_diagonalization");
    CheckRecord rec;
    rec.check_name = "casimir_diagonalization";
    rec.elements_tested = 1;
    const IntMatrix q = p_inverse_scaled(n).numerator();
    const IntMatrix qcp = q * casimir(n) * p_matrix(n);
    const IntMatrix expected =
        static_cast<std::int64_t>(n) * diagonalized_casimir(n);
    if (qcp != expected)
        rec.record_failure(1, Permutation::identity(n).one_line(), expected, qcp);
    return rec;
}

}  // namespace snrep
