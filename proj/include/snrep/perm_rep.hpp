#pragma once

#include <stdexcept>

#include "snrep/int_matrix.hpp"
#include "snrep/perm.hpp"
#include "snrep/report.hpp"

namespace snrep {

/// n x n permutation-representation matrix: entry (i,j) is 1 iff p maps i to
/// j. Exactly one 1 per row and per column.
inline IntMatrix perm_matrix(const Permutation& p) {
    const int n = p.degree();
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        a(i, p.image(i)) = 1;
    return a;
}

/// The Casimir invariant of the permutation representation: zero diagonal,
/// every off-diagonal entry 1. Commutes with perm_matrix(p) for every p.
inline IntMatrix casimir(int n) {
    if (n < 1)
        throw std::invalid_argument("casimir: degree must be at least 1");
    IntMatrix c(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            c(i, j) = (i == j) ? 0 : 1;
    return c;
}

/// Checks transpose(A) * A == I for A = perm_matrix(p).
inline CheckRecord verify_orthogonal(const Permutation& p) {
    CheckRecord rec;
    rec.check_name = "orthogonality";
    rec.elements_tested = 1;
    const IntMatrix a = perm_matrix(p);
    const IntMatrix product = transpose(a) * a;
    const IntMatrix expected = IntMatrix::identity(p.degree());
    if (product != expected)
        rec.record_failure(p.rank(), p.one_line(), expected, product);
    return rec;
}

/// Checks C*A == A*C, and the stronger entrywise identity (C*A)(i,j) ==
/// 1 - A(i,j) that forces it.
inline CheckRecord verify_casimir_commutes(const Permutation& p) {
    CheckRecord rec;
    rec.check_name = "casimir_commutation";
    rec.elements_tested = 1;
    const int n = p.degree();
    const IntMatrix a = perm_matrix(p);
    const IntMatrix c = casimir(n);
    const IntMatrix ca = c * a;
    const IntMatrix ac = a * c;

    IntMatrix one_minus_a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            one_minus_a(i, j) = 1 - a(i, j);

    if (ca != one_minus_a) {
        rec.record_failure(p.rank(), p.one_line(), one_minus_a, ca);
        return rec;
    }
    if (ca != ac)
        rec.record_failure(p.rank(), p.one_line(), ca, ac);
    return rec;
}

}  // namespace snrep
