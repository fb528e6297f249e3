#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "snrep/int_matrix.hpp"
#include "snrep/perm.hpp"
#include "snrep/perm_rep.hpp"

namespace snrep {

/// The five lowest-dimensional representations handled here.
enum class RepKind { permutation, trivial, sign, standard, standard_sign };

inline constexpr RepKind all_rep_kinds[] = {
    RepKind::permutation, RepKind::trivial, RepKind::sign, RepKind::standard,
    RepKind::standard_sign};

inline std::string_view to_string(RepKind kind) {
    switch (kind) {
        case RepKind::permutation: return "permutation";
        case RepKind::trivial: return "trivial";
        case RepKind::sign: return "sign";
        case RepKind::standard: return "standard";
        case RepKind::standard_sign: return "standard_sign";
    }
    throw std::invalid_argument("to_string: unknown RepKind");
}

inline std::optional<RepKind> parse_rep_kind(std::string_view name) {
    for (RepKind kind : all_rep_kinds)
        if (name == to_string(kind))
            return kind;
    return std::nullopt;
}

/// Matrix dimension of the representation at degree n: n for permutation,
/// 1 for trivial and sign, n-1 for standard and standard_sign.
inline int dimension(RepKind kind, int n) {
    switch (kind) {
        case RepKind::permutation: return n;
        case RepKind::trivial:
        case RepKind::sign: return 1;
        case RepKind::standard:
        case RepKind::standard_sign: return n - 1;
    }
    throw std::invalid_argument("dimension: unknown RepKind");
}

namespace detail {
inline void require_standard_degree(int n, const char* where) {
    if (n < 2)
        throw std::invalid_argument(std::string(where) +
                                    ": degree must be at least 2");
}

// Entry (r,c) of perm_matrix(p) in 1-based indices, read off the one-line
// notation without materializing the matrix.
inline std::int64_t perm_entry(const Permutation& p, int r, int c) {
    return p.image(r - 1) == c - 1 ? 1 : 0;
}
}  // namespace detail

/// (n-1) x (n-1) standard-representation matrix, read directly off the
/// one-line notation. In 1-based indices over i,j in [1, n-1]:
///   B(i,j) = A(n+1-i, n+1-j) - A(n+1-i, 1)
/// where A = perm_matrix(p). Every entry lands in {-1, 0, 1}.
inline IntMatrix standard_matrix(const Permutation& p) {
    const int n = p.degree();
    detail::require_standard_degree(n, "standard_matrix");
    IntMatrix b(n - 1, n - 1);
    for (int i = 1; i <= n - 1; ++i) {
        const int r = n + 1 - i;
        const std::int64_t hit_first = detail::perm_entry(p, r, 1);
        for (int j = 1; j <= n - 1; ++j)
            b(i - 1, j - 1) = detail::perm_entry(p, r, n + 1 - j) - hit_first;
    }
    return b;
}

/// The full n x n conjugate inv(P)*A*P evaluated by its closed form, kept as
/// an independent code path from standard_matrix. In 1-based indices:
///   M(i,j) = [i==1][j==1] + [i!=1][j!=1] * (A(n+2-i, n+2-j) - A(n+2-i, 1))
/// Row 1 and column 1 vanish except for M(1,1) = 1; the lower-right block is
/// the standard representation.
inline IntMatrix conjugated_closed_form(const Permutation& p) {
    const int n = p.degree();
    detail::require_standard_degree(n, "conjugated_closed_form");
    IntMatrix m(n, n);
    m(0, 0) = 1;
    for (int i = 2; i <= n; ++i) {
        const int r = n + 2 - i;
        const std::int64_t hit_first = detail::perm_entry(p, r, 1);
        for (int j = 2; j <= n; ++j)
            m(i - 1, j - 1) = detail::perm_entry(p, r, n + 2 - j) - hit_first;
    }
    return m;
}

/// The companion irreducible representation sign(p) * standard_matrix(p).
inline IntMatrix sign_tensored_matrix(const Permutation& p) {
    detail::require_standard_degree(p.degree(), "sign_tensored_matrix");
    return static_cast<std::int64_t>(sign(p)) * standard_matrix(p);
}

/// Uniform dispatch over the five representations.
inline IntMatrix rep_matrix(RepKind kind, const Permutation& p) {
    switch (kind) {
        case RepKind::permutation:
            return perm_matrix(p);
        case RepKind::trivial:
            return IntMatrix::from_rows({{1}});
        case RepKind::sign:
            return IntMatrix::from_rows({{sign(p)}});
        case RepKind::standard:
            return standard_matrix(p);
        case RepKind::standard_sign:
            return sign_tensored_matrix(p);
    }
    throw std::invalid_argument("rep_matrix: unknown RepKind");
}

/// Character of p in the given representation, computed as the trace of the
/// actual matrix rather than from a closed form, so the trace identities stay
/// independently checkable.
inline std::int64_t character(RepKind kind, const Permutation& p) {
    return trace(rep_matrix(kind, p));
}

/// Exact rational normalized to positive denominator and lowest terms.
struct ExactRational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static ExactRational reduced(std::int64_t num, std::int64_t den) {
        if (den == 0)
            throw std::invalid_argument("ExactRational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num, den);
        return g > 1 ? ExactRational{num / g, den / g} : ExactRational{num, den};
    }

    bool operator==(const ExactRational&) const = default;
};

inline bool operator==(const ExactRational& r, std::int64_t v) {
    return r.den == 1 && r.num == v;
}

/// Character-norm irreducibility certificate: sum of squared characters over
/// all n! elements, divided by n!, in lowest terms. Equals 1 exactly for an
/// irreducible representation. Guarded at n <= 10 since it enumerates the
/// whole group.
inline ExactRational irreducibility_norm(RepKind kind, int n) {
    if (n < 1)
        throw std::invalid_argument("irreducibility_norm: degree must be at least 1");
    if (n > 10)
        throw std::length_error("irreducibility_norm: refusing to enumerate " +
                                std::to_string(n) + "! elements (limit n <= 10)");
    if (dimension(kind, n) < 1)
        throw std::invalid_argument(
            "irreducibility_norm: representation undefined at this degree");
    std::int64_t sum = 0;
    for_each_permutation(n, [&](const Permutation& p) {
        const std::int64_t chi = character(kind, p);
        sum = checked_add(sum, checked_mul(chi, chi));
    });
    return ExactRational::reduced(sum, static_cast<std::int64_t>(factorial(n)));
}

}  // namespace snrep
