#pragma once

#include <cstdint>
#include <stdexcept>

#include "cremona/intmat.hpp"

namespace cremona {

/// Thrown when an operation needs a lattice automorphism but the map is not one.
class NotBirationalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A monomial Cremona map of P^n, stored as its reduced d-stochastic
/// log-matrix: columns are monomials, rows are variables, every column
/// sums to the degree and every row touches 0.
class MonomialMap {
public:
    /// Validates stochasticity and distinct columns, reduces rows, and
    /// recomputes the degree from the reduced column sums.
    static MonomialMap from_log_matrix(const IntMatrix& m);

    static MonomialMap identity(std::size_t n);

    std::size_t dimension() const { return log_.rows() - 1; } // n
    const IntMatrix& log_matrix() const { return log_; }
    std::int64_t degree() const { return degree_; }

    /// Matrix of the induced map on the degree-0 lattice, in the basis
    /// e_i - e_0: entry (i,j) = column_j - column_0, rows 1..n.
    IntMatrix lattice_matrix() const;

    bool is_birational() const;

    bool operator==(const MonomialMap&) const = default;

private:
    MonomialMap(IntMatrix log, std::int64_t degree);

    IntMatrix log_;
    std::int64_t degree_;
};

struct InversionResult {
    MonomialMap inverse;
    std::int64_t inverse_degree;
    /// Row minima r_i of A^{-1} as exact fractions: numerator[i] / denominator.
    std::vector<std::int64_t> row_min_numerators;
    std::int64_t denominator;
};

/// Inverse map and degree from the signed adjugate: A^* = sign(det A) adj(A),
/// B_ij = (A*_ij - d r_i) / d, d' = (1 - sum_i min row_i(A*)) / d.
InversionResult invert(const MonomialMap& f);

/// Log-matrix product followed by reduction; the degree may drop.
MonomialMap compose(const MonomialMap& f, const MonomialMap& g);

/// Stochastic matrices induce the same rational map iff their difference
/// has constant rows.
bool equivalent(const IntMatrix& a, const IntMatrix& b);

} // namespace cremona
