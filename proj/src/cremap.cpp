#include "cremona/cremap.hpp"

#include <utility>

namespace cremona {

MonomialMap::MonomialMap(IntMatrix log, std::int64_t degree)
    : log_(std::move(log)), degree_(degree) {}

MonomialMap MonomialMap::from_log_matrix(const IntMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("log-matrix must be square");
    if (m.rows() < 3)
        throw std::invalid_argument("log-matrix needs at least 3 rows (n >= 2)");

    std::int64_t column_sum = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (m(i, j) < 0)
                throw std::invalid_argument("log-matrix entries must be nonnegative");
            s = checked_add(s, m(i, j));
        }
        if (j == 0)
            column_sum = s;
        else if (s != column_sum)
            throw std::invalid_argument("log-matrix is not stochastic: unequal column sums");
    }

    IntMatrix reduced = reduce_rows(m).matrix;
    std::int64_t degree = 0;
    for (std::size_t i = 0; i < reduced.rows(); ++i)
        degree = checked_add(degree, reduced(i, 0));
    if (degree == 0)
        throw std::invalid_argument("log-matrix reduces to degree 0");

    for (std::size_t j = 0; j < reduced.cols(); ++j)
        for (std::size_t k = j + 1; k < reduced.cols(); ++k) {
            bool same = true;
            for (std::size_t i = 0; i < reduced.rows() && same; ++i)
                same = reduced(i, j) == reduced(i, k);
            if (same)
                throw std::invalid_argument("duplicate columns: monomials must be distinct");
        }

    return MonomialMap(std::move(reduced), degree);
}

MonomialMap MonomialMap::identity(std::size_t n) {
    return MonomialMap(IntMatrix::identity(n + 1), 1);
}

IntMatrix MonomialMap::lattice_matrix() const {
    const std::size_t n = dimension();
    IntMatrix lat(n, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            lat(i - 1, j - 1) = checked_sub(log_(i, j), log_(i, 0));
    return lat;
}

bool MonomialMap::is_birational() const {
    const std::int64_t det = lattice_matrix().det();
    return det == 1 || det == -1;
}

InversionResult invert(const MonomialMap& f) {
    if (!f.is_birational())
        throw NotBirationalError("map does not induce a lattice automorphism");

    const std::int64_t d = f.degree();
    const std::int64_t det = f.log_matrix().det();
    if (det != d && det != -d)
        throw std::logic_error("internal error: |det A| != degree for a birational map");

    // A^{-1} = A^* / d with A^* integral.
    IntMatrix star = f.log_matrix().adjugate();
    if (det < 0)
        for (std::size_t i = 0; i < star.rows(); ++i)
            for (std::size_t j = 0; j < star.cols(); ++j)
                star(i, j) = checked_sub(0, star(i, j));

    const std::size_t size = star.rows();
    std::vector<std::int64_t> minima(size);
    std::int64_t minima_sum = 0;
    for (std::size_t i = 0; i < size; ++i) {
        minima[i] = star.row_min(i);
        minima_sum = checked_add(minima_sum, minima[i]);
    }

    const std::int64_t d_prime_num = checked_sub(1, minima_sum);
    if (d_prime_num % d != 0)
        throw std::logic_error("internal error: inverse degree is not integral");
    const std::int64_t d_prime = d_prime_num / d;

    IntMatrix b(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            const std::int64_t num = checked_sub(star(i, j), minima[i]);
            if (num % d != 0)
                throw std::logic_error("internal error: reduced inverse is not integral");
            b(i, j) = num / d;
        }

    MonomialMap inverse = MonomialMap::from_log_matrix(b);
    if (inverse.degree() != d_prime || inverse.log_matrix() != b)
        throw std::logic_error("internal error: inverse degree mismatch");

    return InversionResult{std::move(inverse), d_prime, std::move(minima), d};
}

MonomialMap compose(const MonomialMap& f, const MonomialMap& g) {
    if (f.dimension() != g.dimension())
        throw std::invalid_argument("compose dimension mismatch");
    return MonomialMap::from_log_matrix(matmul(f.log_matrix(), g.log_matrix()));
}

bool equivalent(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("equivalent: dimension mismatch");
    for (const IntMatrix* m : {&a, &b}) {
        std::int64_t first = 0;
        for (std::size_t j = 0; j < m->cols(); ++j) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < m->rows(); ++i)
                s = checked_add(s, (*m)(i, j));
            if (j == 0)
                first = s;
            else if (s != first)
                throw std::invalid_argument("equivalent: matrix is not stochastic");
        }
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const std::int64_t diff = checked_sub(a(i, 0), b(i, 0));
        for (std::size_t j = 1; j < a.cols(); ++j)
            if (checked_sub(a(i, j), b(i, j)) != diff)
                return false;
    }
    return true;
}

} // namespace cremona
