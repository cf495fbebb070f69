#include "cremona/intmat.hpp"

#include <algorithm>
#include <utility>

namespace cremona {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("matrix dimensions must be positive");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    if (rows_ == 0 || cols_ == 0)
        throw std::invalid_argument("matrix dimensions must be positive");
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("ragged initializer rows");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

std::int64_t IntMatrix::row_min(std::size_t i) const {
    auto first = entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
    return *std::min_element(first, first + static_cast<std::ptrdiff_t>(cols_));
}

std::int64_t IntMatrix::det() const {
    if (!is_square())
        throw std::invalid_argument("determinant requires a square matrix");
    const std::size_t n = rows_;
    if (n == 1)
        return entries_[0];

    // Bareiss fraction-free elimination; every division below is exact.
    std::vector<std::int64_t> a(entries_);
    auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * n + j]; };
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && at(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = k; j < n; ++j)
                std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                const std::int64_t num = checked_sub(checked_mul(at(k, k), at(i, j)),
                                                     checked_mul(at(i, k), at(k, j)));
                at(i, j) = num / prev;
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return checked_mul(sign, at(n - 1, n - 1));
}

IntMatrix IntMatrix::adjugate() const {
    if (!is_square())
        throw std::invalid_argument("adjugate requires a square matrix");
    const std::size_t n = rows_;
    IntMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t mi = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i)
                    continue;
                std::size_t mj = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == j)
                        continue;
                    minor(mi, mj) = (*this)(r, c);
                    ++mj;
                }
                ++mi;
            }
            const std::int64_t cof = minor.det();
            adj(j, i) = ((i + j) % 2 == 0) ? cof : checked_mul(cof, -1);
        }
    }
    return adj;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::int64_t aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
        }
    return c;
}

ReducedMatrix reduce_rows(const IntMatrix& m) {
    IntMatrix out = m;
    RowShifts shifts;
    shifts.shifts.resize(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const std::int64_t lo = m.row_min(i);
        shifts.shifts[i] = checked_sub(0, lo);
        if (lo != 0)
            for (std::size_t j = 0; j < m.cols(); ++j)
                out(i, j) = checked_sub(out(i, j), lo);
    }
    return {std::move(out), std::move(shifts)};
}

IntMatrix apply_shifts(const IntMatrix& reduced, const RowShifts& shifts) {
    if (shifts.shifts.size() != reduced.rows())
        throw std::invalid_argument("shift count does not match row count");
    IntMatrix out = reduced;
    for (std::size_t i = 0; i < reduced.rows(); ++i)
        for (std::size_t j = 0; j < reduced.cols(); ++j)
            out(i, j) = checked_sub(out(i, j), shifts.shifts[i]);
    return out;
}

} // namespace cremona
