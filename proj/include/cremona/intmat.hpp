#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cremona {

/// Thrown when an exact integer operation would leave the 64-bit range.
class OverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Dense integer matrix with exact (checked) arithmetic, row-major storage.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    std::int64_t& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    IntMatrix transposed() const;

    /// Exact determinant via fraction-free (Bareiss) elimination.
    std::int64_t det() const;

    /// adj(m) with m * adj(m) = det(m) * I, built from cofactors.
    IntMatrix adjugate() const;

    std::int64_t row_min(std::size_t i) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::int64_t> entries_;
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

/// Per-row amounts added while reducing; original = reduced row - shift.
struct RowShifts {
    std::vector<std::int64_t> shifts;
};

struct ReducedMatrix {
    IntMatrix matrix;
    RowShifts shifts;
};

/// Shifts each row so its minimum becomes 0.
ReducedMatrix reduce_rows(const IntMatrix& m);

/// Undoes reduce_rows: subtracts each shift from its row.
IntMatrix apply_shifts(const IntMatrix& reduced, const RowShifts& shifts);

} // namespace cremona
