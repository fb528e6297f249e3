#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snrep {

// Checked 64-bit arithmetic. Overflow throws, never wraps.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

/// Dense row-major matrix of exact 64-bit integers. Indices are 0-based.
/// Arithmetic throws std::overflow_error rather than wrapping silently.
class IntMatrix {
public:
    IntMatrix(int rows, int cols)
        : rows_(rows),
          cols_(cols),
          entries_(checked_extent(rows, cols), 0) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    /// Square diagonal matrix from the given diagonal entries.
    static IntMatrix diagonal(const std::vector<std::int64_t>& diag) {
        IntMatrix m(static_cast<int>(diag.size()), static_cast<int>(diag.size()));
        for (std::size_t i = 0; i < diag.size(); ++i)
            m(static_cast<int>(i), static_cast<int>(i)) = diag[i];
        return m;
    }

    /// Row-by-row literal, mostly for tests: from_rows({{1,0},{0,1}}).
    static IntMatrix from_rows(
        std::initializer_list<std::initializer_list<std::int64_t>> rows) {
        const int r = static_cast<int>(rows.size());
        if (r == 0)
            throw std::invalid_argument("IntMatrix: no rows");
        const int c = static_cast<int>(rows.begin()->size());
        IntMatrix m(r, c);
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != c)
                throw std::invalid_argument("IntMatrix: ragged rows");
            int j = 0;
            for (std::int64_t v : row)
                m(i, j++) = v;
            ++i;
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    std::int64_t& operator()(int i, int j) {
        return entries_[index(i, j)];
    }
    std::int64_t operator()(int i, int j) const {
        return entries_[index(i, j)];
    }

    /// Bounds-checked access; throws std::out_of_range.
    std::int64_t at(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("IntMatrix::at: index (" + std::to_string(i) +
                                    "," + std::to_string(j) + ") outside " +
                                    std::to_string(rows_) + "x" + std::to_string(cols_));
        return entries_[index(i, j)];
    }

    // Ref-qualified so that ranging over m.entries() of a temporary copies
    // instead of dangling.
    const std::vector<std::int64_t>& entries() const& { return entries_; }
    std::vector<std::int64_t> entries() && { return std::move(entries_); }

    bool operator==(const IntMatrix&) const = default;

private:
    static std::size_t checked_extent(int rows, int cols) {
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("IntMatrix: dimensions must be positive");
        return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    }

    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }

    int rows_;
    int cols_;
    std::vector<std::int64_t> entries_;
};

inline IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mul: shape mismatch " + std::to_string(a.rows()) +
                                    "x" + std::to_string(a.cols()) + " * " +
                                    std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()));
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const std::int64_t aik = a(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < b.cols(); ++j)
                c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
        }
    return c;
}

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    return mul(a, b);
}

inline IntMatrix operator*(std::int64_t s, const IntMatrix& a) {
    IntMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            c(i, j) = checked_mul(s, a(i, j));
    return c;
}

inline IntMatrix transpose(const IntMatrix& a) {
    IntMatrix t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            t(j, i) = a(i, j);
    return t;
}

inline std::int64_t trace(const IntMatrix& a) {
    if (!a.is_square())
        throw std::invalid_argument("trace: matrix is not square");
    std::int64_t t = 0;
    for (int i = 0; i < a.rows(); ++i)
        t = checked_add(t, a(i, i));
    return t;
}

/// Exact determinant via fraction-free (Bareiss) elimination. Every interior
/// division is exact; a nonzero remainder would indicate a defect and throws.
inline std::int64_t det(const IntMatrix& a) {
    if (!a.is_square())
        throw std::invalid_argument("det: matrix is not square");
    const int n = a.rows();
    IntMatrix m = a;
    std::int64_t sgn = 1;
    std::int64_t prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0)
                return 0;
            for (int j = 0; j < n; ++j)
                std::swap(m(k, j), m(pivot, j));
            sgn = -sgn;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                const std::int64_t num =
                    checked_sub(checked_mul(m(i, j), m(k, k)),
                                checked_mul(m(i, k), m(k, j)));
                if (num % prev != 0)
                    throw std::logic_error("det: inexact division in fraction-free step");
                m(i, j) = num / prev;
            }
        }
        prev = m(k, k);
    }
    return checked_mul(sgn, m(n - 1, n - 1));
}

inline bool is_identity(const IntMatrix& a) {
    if (!a.is_square())
        return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

/// Contiguous h x w submatrix with top-left corner at (row0, col0), 0-based.
inline IntMatrix block_extract(const IntMatrix& a, int row0, int col0, int h, int w) {
    if (h < 1 || w < 1 || row0 < 0 || col0 < 0 || row0 + h > a.rows() ||
        col0 + w > a.cols())
        throw std::out_of_range("block_extract: block outside matrix");
    IntMatrix b(h, w);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j)
            b(i, j) = a(row0 + i, col0 + j);
    return b;
}

/// Block-diagonal matrix diag(a, b).
inline IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            c(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            c(a.rows() + i, a.cols() + j) = b(i, j);
    return c;
}

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& a) {
    for (int i = 0; i < a.rows(); ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < a.cols(); ++j) {
            if (j)
                os << ' ';
            os << a(i, j);
        }
        os << (i + 1 == a.rows() ? "]" : "\n");
    }
    return os;
}

/// An exact rational matrix stored as an integer matrix over one positive
/// denominator: value = numerator / denominator entrywise.
class ScaledMatrix {
public:
    ScaledMatrix(IntMatrix numerator, std::int64_t denominator)
        : numerator_(std::move(numerator)), denominator_(denominator) {
        if (denominator_ < 1)
            throw std::invalid_argument("ScaledMatrix: denominator must be positive");
    }

    const IntMatrix& numerator() const { return numerator_; }
    std::int64_t denominator() const { return denominator_; }

    int rows() const { return numerator_.rows(); }
    int cols() const { return numerator_.cols(); }

private:
    IntMatrix numerator_;
    std::int64_t denominator_;
};

/// Exact equality by cross-multiplication, so (M, d) == (kM, kd) for k >= 1.
inline bool operator==(const ScaledMatrix& a, const ScaledMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (checked_mul(a.numerator()(i, j), b.denominator()) !=
                checked_mul(b.numerator()(i, j), a.denominator()))
                return false;
    return true;
}

}  // namespace snrep
