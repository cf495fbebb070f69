#include <doctest.h>

#include <random>

#include "cremona/intmat.hpp"

using cremona::IntMatrix;
using cremona::matmul;
using cremona::reduce_rows;

namespace {

// Independent determinant oracle: direct Laplace cofactor expansion.
std::int64_t laplace_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1)
        return m(0, 0);
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0)
            continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t mc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j)
                    continue;
                minor(r - 1, mc++) = m(r, c);
            }
        }
        const std::int64_t term = m(0, j) * laplace_det(minor);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
    IntMatrix m(n, n);
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = dist(rng);
    return m;
}

} // namespace

TEST_CASE("matmul identity and worked products") {
    const IntMatrix m{{3, -1, 2}, {0, 4, 7}, {5, 5, 5}};
    CHECK(matmul(IntMatrix::identity(3), m) == m);
    CHECK(matmul(m, IntMatrix::identity(3)) == m);

    const IntMatrix g{{1, 24}, {1, 25}};
    const IntMatrix g_inv{{25, -24}, {-1, 1}};
    CHECK(matmul(g, g_inv) == IntMatrix::identity(2));

    const IntMatrix classic{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    const IntMatrix squared{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
    CHECK(matmul(classic, classic) == squared);
}

TEST_CASE("matmul rejects mismatched shapes") {
    CHECK_THROWS_AS(matmul(IntMatrix(2, 3), IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("matmul overflow is detected") {
    IntMatrix big(2, 2);
    big(0, 0) = INT64_MAX / 2;
    big(0, 1) = INT64_MAX / 2;
    big(1, 0) = 1;
    big(1, 1) = 1;
    IntMatrix ones(2, 2);
    ones(0, 0) = ones(1, 0) = 2;
    CHECK_THROWS_AS(matmul(big, ones), cremona::OverflowError);
}

TEST_CASE("determinant matches the cofactor oracle") {
    CHECK(IntMatrix::identity(5).det() == 1);

    const IntMatrix classic{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    CHECK(laplace_det(classic) == 2);
    CHECK(classic.det() == 2);

    // triangular family log-matrix, n=3, d=3: determinant is the diagonal product
    const IntMatrix tri{{3, 2, 0, 0}, {0, 1, 2, 0}, {0, 0, 1, 2}, {0, 0, 0, 1}};
    CHECK(tri.det() == 3);

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        const IntMatrix m = random_matrix(rng, n, -6, 6);
        CHECK(m.det() == laplace_det(m));
    }
}

TEST_CASE("determinant requires a square matrix") {
    CHECK_THROWS_AS(IntMatrix(2, 3).det(), std::invalid_argument);
}

TEST_CASE("adjugate worked examples") {
    CHECK(IntMatrix::identity(4).adjugate() == IntMatrix::identity(4));

    const IntMatrix g{{1, 24}, {1, 25}};
    const IntMatrix expected{{25, -24}, {-1, 1}};
    CHECK(g.adjugate() == expected);

    const IntMatrix classic{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    const IntMatrix adj{{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}};
    CHECK(classic.adjugate() == adj);
}

TEST_CASE("m * adj(m) == det(m) * I, including singular matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        IntMatrix m = random_matrix(rng, n, -5, 5);
        if (trial % 4 == 0) // force a singular case
            for (std::size_t j = 0; j < n; ++j)
                m(n - 1, j) = m(0, j);
        const IntMatrix prod = matmul(m, m.adjugate());
        const std::int64_t det = m.det();
        IntMatrix expected(n, n);
        for (std::size_t i = 0; i < n; ++i)
            expected(i, i) = det;
        CHECK(prod == expected);
    }
}

TEST_CASE("det is multiplicative") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        const IntMatrix a = random_matrix(rng, n, -4, 4);
        const IntMatrix b = random_matrix(rng, n, -4, 4);
        CHECK(matmul(a, b).det() == a.det() * b.det());
    }
}

TEST_CASE("matmul is associative") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng() % 3;
        const IntMatrix a = random_matrix(rng, n, -4, 4);
        const IntMatrix b = random_matrix(rng, n, -4, 4);
        const IntMatrix c = random_matrix(rng, n, -4, 4);
        CHECK(matmul(matmul(a, b), c) == matmul(a, matmul(b, c)));
    }
}

TEST_CASE("reduce_rows on the Example 1 matrices") {
    const IntMatrix pre{{0, -2, -49}, {0, 1, 24}, {0, 1, 25}};
    const auto reduced = reduce_rows(pre);
    CHECK(reduced.matrix == IntMatrix{{49, 47, 0}, {0, 1, 24}, {0, 1, 25}});
    CHECK(reduced.shifts.shifts == std::vector<std::int64_t>{49, 0, 0});

    const IntMatrix neg{{0, 2, 49}, {0, -1, -24}, {0, -1, -25}};
    const auto r2 = reduce_rows(neg);
    CHECK(r2.matrix == IntMatrix{{0, 2, 49}, {24, 23, 0}, {25, 24, 0}});
    CHECK(r2.shifts.shifts == std::vector<std::int64_t>{0, 24, 25});
}

TEST_CASE("reduce_rows leaves reduced matrices unchanged") {
    const IntMatrix m{{0, 3, 1}, {2, 0, 5}, {1, 4, 0}};
    const auto reduced = reduce_rows(m);
    CHECK(reduced.matrix == m);
    CHECK(reduced.shifts.shifts == std::vector<std::int64_t>{0, 0, 0});
}

TEST_CASE("reduce_rows properties: idempotence and round trip") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        const IntMatrix m = random_matrix(rng, n, -50, 50);
        const auto reduced = reduce_rows(m);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(reduced.matrix.row_min(i) == 0);
        CHECK(reduce_rows(reduced.matrix).matrix == reduced.matrix);
        CHECK(apply_shifts(reduced.matrix, reduced.shifts) == m);
    }
}
