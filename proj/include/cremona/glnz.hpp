#pragma once

#include <cstdint>
#include <random>

#include "cremona/cremap.hpp"
#include "cremona/intmat.hpp"

namespace cremona {

/// An element of GL_n(Z): an n x n integer matrix with determinant +-1.
class UnimodularMatrix {
public:
    explicit UnimodularMatrix(IntMatrix m);
    static UnimodularMatrix identity(std::size_t n);

    std::size_t dimension() const { return m_.rows(); }
    const IntMatrix& matrix() const { return m_; }

    /// Exact inverse, again unimodular: det(g) * adj(g).
    UnimodularMatrix inverse() const;

    bool operator==(const UnimodularMatrix&) const = default;

private:
    IntMatrix m_;
};

/// The (n+1)x(n+1) extension of g before reduction: column 0 is zero and
/// row 0 makes every column sum zero.
IntMatrix extended_matrix(const UnimodularMatrix& g);

/// Reduces the extension into the log-matrix A_g of a birational map.
MonomialMap to_cremona(const UnimodularMatrix& g);

/// The induced lattice automorphism in the basis e_i - e_0.
UnimodularMatrix from_cremona(const MonomialMap& f);

/// d(g): over the rows of the extension, sum of -rowMin where negative.
std::int64_t degree_of(const UnimodularMatrix& g);

struct WalkConfig {
    std::size_t n = 3;
    std::int64_t max_multiple = 4;
    std::int64_t degree_cap = 60; // restart when d or d' exceeds this
    std::uint64_t seed = 0;
};

struct WalkSample {
    UnimodularMatrix g;
    std::int64_t degree;
    std::int64_t inverse_degree;
};

/// Random walk on GL_n(Z) by elementary row/column operations: some line
/// gets that line plus a nonzero multiple of another; starts afresh from
/// the identity whenever a degree exceeds the cap or an entry overflows.
class RandomWalk {
public:
    explicit RandomWalk(const WalkConfig& config);

    /// Advances until the next in-bounds sample and returns it.
    WalkSample next();

    std::uint64_t restarts() const { return restarts_; }
    std::uint64_t overflow_restarts() const { return overflow_restarts_; }

private:
    std::uint64_t pick(std::uint64_t bound); // uniform in [0, bound)

    WalkConfig config_;
    IntMatrix current_;
    std::mt19937_64 rng_;
    std::uint64_t restarts_ = 0;
    std::uint64_t overflow_restarts_ = 0;
};

} // namespace cremona
