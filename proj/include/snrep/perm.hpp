#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace snrep {

/// n! as an unsigned 64-bit count. Degrees above 20 do not fit and throw
/// std::length_error.
inline std::uint64_t factorial(int n) {
    if (n < 0)
        throw std::invalid_argument("factorial: negative argument");
    if (n > 20)
        throw std::length_error("factorial: " + std::to_string(n) +
                                "! exceeds 64-bit range");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<std::uint64_t>(i);
    return f;
}

/// A permutation of {1,...,n} in one-line notation.
///
/// Images are stored 0-based; the 1-based view exists only at serialization
/// boundaries (one_line, from_one_line, printing). Values are immutable after
/// construction, so concurrent reads are safe.
class Permutation {
public:
    /// Identity permutation of degree n, n >= 1.
    static Permutation identity(int n) {
        require_degree(n);
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    /// Build from 1-based one-line notation (a_1, ..., a_n).
    static Permutation from_one_line(const std::vector<int>& one_based) {
        require_degree(static_cast<int>(one_based.size()));
        const int n = static_cast<int>(one_based.size());
        std::vector<int> img(one_based.size());
        std::vector<bool> seen(one_based.size(), false);
        for (std::size_t i = 0; i < one_based.size(); ++i) {
            const int a = one_based[i];
            if (a < 1 || a > n)
                throw std::invalid_argument(
                    "Permutation: image " + std::to_string(a) +
                    " outside [1," + std::to_string(n) + "]");
            if (seen[static_cast<std::size_t>(a - 1)])
                throw std::invalid_argument(
                    "Permutation: duplicate image " + std::to_string(a));
            seen[static_cast<std::size_t>(a - 1)] = true;
            img[i] = a - 1;
        }
        return Permutation(std::move(img));
    }

    /// k-th permutation of degree n in lexicographic one-line order,
    /// 1 <= k <= n!. Inverse of rank().
    static Permutation unrank(int n, std::uint64_t k) {
        require_degree(n);
        const std::uint64_t total = factorial(n);
        if (k < 1 || k > total)
            throw std::out_of_range("Permutation::unrank: k=" +
                                    std::to_string(k) + " outside [1," +
                                    std::to_string(total) + "]");
        std::uint64_t rem = k - 1;
        std::vector<int> pool(static_cast<std::size_t>(n));
        std::iota(pool.begin(), pool.end(), 0);
        std::vector<int> img;
        img.reserve(pool.size());
        for (int i = 0; i < n; ++i) {
            const std::uint64_t f = factorial(n - 1 - i);
            const auto d = static_cast<std::size_t>(rem / f);
            rem %= f;
            img.push_back(pool[d]);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
        }
        return Permutation(std::move(img));
    }

    int degree() const { return static_cast<int>(images_.size()); }

    /// Image of i under the permutation, both 0-based.
    int image(int i) const { return images_[static_cast<std::size_t>(i)]; }

    /// 0-based image sequence.
    const std::vector<int>& images() const { return images_; }

    /// 1-based one-line notation (a_1, ..., a_n).
    std::vector<int> one_line() const {
        std::vector<int> out(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i)
            out[i] = images_[i] + 1;
        return out;
    }

    /// 1-based position of this permutation in lexicographic order.
    std::uint64_t rank() const {
        const int n = degree();
        std::vector<int> pool(static_cast<std::size_t>(n));
        std::iota(pool.begin(), pool.end(), 0);
        std::uint64_t r = 0;
        for (int i = 0; i < n; ++i) {
            const auto it =
                std::lower_bound(pool.begin(), pool.end(), images_[static_cast<std::size_t>(i)]);
            r += static_cast<std::uint64_t>(it - pool.begin()) * factorial(n - 1 - i);
            pool.erase(it);
        }
        return r + 1;
    }

    bool operator==(const Permutation&) const = default;

private:
    explicit Permutation(std::vector<int> images0) : images_(std::move(images0)) {}

    static void require_degree(int n) {
        if (n < 1)
            throw std::invalid_argument("Permutation: degree must be at least 1");
    }

    template <typename Fn>
    friend void for_each_permutation(int n, Fn&& fn);

    std::vector<int> images_;
};

/// Calls fn(const Permutation&) on every permutation of degree n in
/// lexicographic order, without materializing the whole group.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    factorial(n);  // capacity guard, throws for n > 20 or n < 0
    if (n < 1)
        throw std::invalid_argument("for_each_permutation: degree must be at least 1");
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    do {
        fn(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
}

/// Apply p first, then q: result(i) = q(p(i)). Under this convention the
/// permutation-matrix map is a homomorphism, M(compose(p,q)) = M(p)*M(q).
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("compose: degree mismatch " +
                                    std::to_string(p.degree()) + " vs " +
                                    std::to_string(q.degree()));
    const int n = p.degree();
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        img[static_cast<std::size_t>(i)] = q.image(p.image(i)) + 1;
    return Permutation::from_one_line(img);
}

inline Permutation inverse(const Permutation& p) {
    const int n = p.degree();
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        img[static_cast<std::size_t>(p.image(i))] = i + 1;
    return Permutation::from_one_line(img);
}

/// Parity of p as +1 or -1, computed from the cycle count.
inline int sign(const Permutation& p) {
    const int n = p.degree();
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
        if (visited[static_cast<std::size_t>(i)])
            continue;
        ++cycles;
        int j = i;
        while (!visited[static_cast<std::size_t>(j)]) {
            visited[static_cast<std::size_t>(j)] = true;
            j = p.image(j);
        }
    }
    return ((n - cycles) % 2 == 0) ? 1 : -1;
}

inline int fixed_points(const Permutation& p) {
    int count = 0;
    for (int i = 0; i < p.degree(); ++i)
        if (p.image(i) == i)
            ++count;
    return count;
}

/// Cycle lengths sorted descending; a partition of the degree.
inline std::vector<int> cycle_type(const Permutation& p) {
    const int n = p.degree();
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<int> lengths;
    for (int i = 0; i < n; ++i) {
        if (visited[static_cast<std::size_t>(i)])
            continue;
        int len = 0;
        int j = i;
        while (!visited[static_cast<std::size_t>(j)]) {
            visited[static_cast<std::size_t>(j)] = true;
            j = p.image(j);
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    return lengths;
}

/// All n! permutations of degree n in lexicographic order, i.e.
/// [unrank(n,1), ..., unrank(n,n!)].
inline std::vector<Permutation> enumerate(int n) {
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(factorial(n)));
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

/// Prints 1-based one-line notation, e.g. (2 3 1).
inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    os << '(';
    const auto line = p.one_line();
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (i)
            os << ' ';
        os << line[i];
    }
    return os << ')';
}

}  // namespace snrep
