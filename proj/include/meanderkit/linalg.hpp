#ifndef MEANDERKIT_LINALG_HPP
#define MEANDERKIT_LINALG_HPP

#include <meanderkit/errors.hpp>

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace meanderkit::linalg {

using Rational = mpq_class;

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    [[nodiscard]] bool is_antisymmetric() const
    {
        if (rows_ != cols_) {
            return false;
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = i; j < cols_; ++j) {
                if ((*this)(i, j) != -(*this)(j, i)) {
                    return false;
                }
            }
        }
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

namespace detail {

inline void swap_rows(Matrix& m, std::size_t a, std::size_t b)
{
    if (a == b) {
        return;
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::swap(m(a, c), m(b, c));
    }
}

/// Reduced row echelon form in place, looking for pivots only in the first
/// `pivot_cols` columns. Returns the pivot column of each pivot row.
inline std::vector<std::size_t> reduce(Matrix& m, std::size_t pivot_cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && sgn(m(sel, col)) == 0) {
            ++sel;
        }
        if (sel == m.rows()) {
            continue;
        }
        swap_rows(m, row, sel);
        const Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) {
            m(row, c) *= inv;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0) {
                continue;
            }
            const Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                m(r, c) -= factor * m(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace detail

inline std::size_t rank(Matrix m) { return detail::reduce(m, m.cols()).size(); }

inline std::size_t nullity(const Matrix& m) { return m.cols() - rank(m); }

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct Solution {
    SolveStatus status;
    std::vector<Rational> x; ///< filled only when status is Unique
};

/// Solves A x = b exactly.
inline Solution solve(const Matrix& a, const std::vector<Rational>& b)
{
    if (b.size() != a.rows()) {
        throw PreconditionError("right-hand side has the wrong length");
    }
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            aug(r, c) = a(r, c);
        }
        aug(r, a.cols()) = b[r];
    }
    auto pivots = detail::reduce(aug, a.cols());
    for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
        if (sgn(aug(r, a.cols())) != 0) {
            return {SolveStatus::Inconsistent, {}};
        }
    }
    if (pivots.size() < a.cols()) {
        return {SolveStatus::Underdetermined, {}};
    }
    std::vector<Rational> x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        x[pivots[r]] = aug(r, a.cols());
    }
    return {SolveStatus::Unique, std::move(x)};
}

inline std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols()) {
        throw PreconditionError("inverse of a non-square matrix");
    }
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            aug(r, c) = m(r, c);
        }
        aug(r, n + r) = 1;
    }
    if (detail::reduce(aug, n).size() < n) {
        return std::nullopt;
    }
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            inv(r, c) = aug(r, n + c);
        }
    }
    return inv;
}

} // namespace meanderkit::linalg

#endif // MEANDERKIT_LINALG_HPP
