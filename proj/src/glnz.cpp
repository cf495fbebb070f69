#include "cremona/glnz.hpp"

#include <utility>

namespace cremona {

UnimodularMatrix::UnimodularMatrix(IntMatrix m) : m_(std::move(m)) {
    if (!m_.is_square())
        throw std::invalid_argument("unimodular matrix must be square");
    const std::int64_t det = m_.det();
    if (det != 1 && det != -1)
        throw std::invalid_argument("matrix is not unimodular: det != +-1");
}

UnimodularMatrix UnimodularMatrix::identity(std::size_t n) {
    return UnimodularMatrix(IntMatrix::identity(n));
}

UnimodularMatrix UnimodularMatrix::inverse() const {
    const std::int64_t det = m_.det();
    IntMatrix inv = m_.adjugate();
    if (det < 0)
        for (std::size_t i = 0; i < inv.rows(); ++i)
            for (std::size_t j = 0; j < inv.cols(); ++j)
                inv(i, j) = checked_sub(0, inv(i, j));
    return UnimodularMatrix(std::move(inv));
}

IntMatrix extended_matrix(const UnimodularMatrix& g) {
    const std::size_t n = g.dimension();
    IntMatrix ext(n + 1, n + 1);
    for (std::size_t j = 1; j <= n; ++j) {
        std::int64_t col_sum = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            ext(i, j) = g.matrix()(i - 1, j - 1);
            col_sum = checked_add(col_sum, ext(i, j));
        }
        ext(0, j) = checked_sub(0, col_sum);
    }
    return ext;
}

MonomialMap to_cremona(const UnimodularMatrix& g) {
    return MonomialMap::from_log_matrix(reduce_rows(extended_matrix(g)).matrix);
}

UnimodularMatrix from_cremona(const MonomialMap& f) {
    if (!f.is_birational())
        throw NotBirationalError("map does not induce a lattice automorphism");
    return UnimodularMatrix(f.lattice_matrix());
}

std::int64_t degree_of(const UnimodularMatrix& g) {
    const IntMatrix ext = extended_matrix(g);
    std::int64_t d = 0;
    for (std::size_t i = 0; i < ext.rows(); ++i) {
        const std::int64_t lo = ext.row_min(i);
        if (lo < 0)
            d = checked_add(d, checked_sub(0, lo));
    }
    return d;
}

RandomWalk::RandomWalk(const WalkConfig& config)
    : config_(config), current_(IntMatrix::identity(config.n)), rng_(config.seed) {
    if (config.n < 2)
        throw std::invalid_argument("walk dimension must be at least 2");
    if (config.max_multiple < 1)
        throw std::invalid_argument("max multiple must be positive");
    if (config.degree_cap < 2)
        throw std::invalid_argument("degree cap must be at least 2");
}

std::uint64_t RandomWalk::pick(std::uint64_t bound) {
    return rng_() % bound;
}

WalkSample RandomWalk::next() {
    const std::size_t n = config_.n;
    for (;;) {
        const bool column_op = pick(2) == 1;
        const std::size_t i = pick(n);
        std::size_t j = pick(n - 1);
        if (j >= i)
            ++j;
        std::int64_t mult =
            static_cast<std::int64_t>(pick(2 * static_cast<std::uint64_t>(config_.max_multiple))) -
            config_.max_multiple;
        if (mult >= 0)
            ++mult;

        try {
            if (column_op) {
                for (std::size_t r = 0; r < n; ++r)
                    current_(r, i) = checked_add(current_(r, i), checked_mul(mult, current_(r, j)));
            } else {
                for (std::size_t c = 0; c < n; ++c)
                    current_(i, c) = checked_add(current_(i, c), checked_mul(mult, current_(j, c)));
            }
            UnimodularMatrix g(current_);
            const std::int64_t d = degree_of(g);
            const std::int64_t d_prime = degree_of(g.inverse());
            if (d > config_.degree_cap || d_prime > config_.degree_cap) {
                ++restarts_;
                current_ = IntMatrix::identity(n);
                continue;
            }
            return WalkSample{std::move(g), d, d_prime};
        } catch (const OverflowError&) {
            ++overflow_restarts_;
            current_ = IntMatrix::identity(n);
        }
    }
}

} // namespace cremona
