#include <doctest.h>

#include "cremona/families.hpp"
#include "cremona/glnz.hpp"

using cremona::build;
using cremona::Family;
using cremona::FamilySpec;
using cremona::IntMatrix;
using cremona::predicted_inverse_degree;

TEST_CASE("triangular displays for n = 2 and n = 3") {
    for (std::int64_t d = 2; d <= 6; ++d) {
        const std::int64_t c = d - 1;
        const auto f2 = build({Family::triangular, 2, d});
        CHECK(f2.log_matrix() == IntMatrix{{c + 1, c, 0}, {0, 1, c}, {0, 0, 1}});
        CHECK(f2.degree() == d);

        const auto f3 = build({Family::triangular, 3, d});
        CHECK(f3.log_matrix() ==
              IntMatrix{{c + 1, c, 0, 0}, {0, 1, c, 0}, {0, 0, 1, c}, {0, 0, 0, 1}});
    }
}

TEST_CASE("chain-loop and classic quadratic") {
    const auto chain = build({Family::chain_loop, 3, 2});
    CHECK(chain.log_matrix() == IntMatrix{{2, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}});
    CHECK(chain.degree() == 2);

    const auto classic = build({Family::classic_quadratic, 2, 2});
    CHECK(classic.log_matrix() == IntMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(cremona::equivalent(
        cremona::compose(classic, classic).log_matrix(), IntMatrix::identity(3)));
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(build({Family::triangular, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(build({Family::triangular, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(build({Family::classic_quadratic, 3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(cremona::inverse_matrix_oracle({Family::chain_loop, 3, 2}),
                    std::invalid_argument);
}

TEST_CASE("predicted inverse degrees") {
    CHECK(predicted_inverse_degree({Family::triangular, 3, 3}) == 7);
    CHECK(predicted_inverse_degree({Family::triangular, 3, 5}) == 21); // Table 1 maximum
    CHECK(predicted_inverse_degree({Family::chain_loop, 3, 2}) == 3);
    CHECK(predicted_inverse_degree({Family::classic_quadratic, 2, 2}) == 2);
}

TEST_CASE("closed form agrees with the inversion machinery") {
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::int64_t d = 2; d <= 12; ++d) {
            const FamilySpec spec{Family::triangular, n, d};
            const auto inv = cremona::invert(build(spec));
            const std::int64_t predicted = predicted_inverse_degree(spec);
            CHECK(inv.inverse_degree == predicted);
            if (d > 2) {
                std::int64_t power = 1;
                for (std::size_t i = 0; i < n; ++i)
                    power *= d - 1;
                CHECK(predicted == (power - 1) / (d - 2));
            }
        }
}

TEST_CASE("raw Theorem-2 sum equals the closed form for even and odd n") {
    for (std::size_t n = 2; n <= 7; ++n)
        for (std::int64_t d = 3; d <= 9; ++d) {
            const auto f = build({Family::triangular, n, d});
            const auto inv = cremona::invert(f);
            // d' = (1 - sum of row minima of A*) / d, straight from the row minima
            std::int64_t numerator = 1;
            for (const std::int64_t m : inv.row_min_numerators)
                numerator -= m;
            CHECK(numerator % d == 0);
            CHECK(numerator / d == predicted_inverse_degree({Family::triangular, n, d}));
        }
}

TEST_CASE("inverse matrix oracle") {
    const std::int64_t d = 4, c = d - 1;
    CHECK(cremona::inverse_matrix_oracle({Family::triangular, 2, d}) ==
          IntMatrix{{1, -c, c * c}, {0, 1, -c}, {0, 0, 1}});
    CHECK(cremona::inverse_matrix_oracle({Family::triangular, 3, d}) ==
          IntMatrix{{1, -c, c * c, -c * c * c},
                    {0, 1, -c, c * c},
                    {0, 0, 1, -c},
                    {0, 0, 0, 1}});

    // B with its first row divided by d is the exact inverse of A,
    // so B * A = diag(d, 1, ..., 1).
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::int64_t deg = 2; deg <= 7; ++deg) {
            const auto a = build({Family::triangular, n, deg}).log_matrix();
            const auto b = cremona::inverse_matrix_oracle({Family::triangular, n, deg});
            const auto prod = cremona::matmul(b, a);
            IntMatrix expected = IntMatrix::identity(n + 1);
            expected(0, 0) = deg;
            CHECK(prod == expected);
        }
}

TEST_CASE("chain-loop attains d' = n for 2 <= n <= 8") {
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto f = build({Family::chain_loop, n, 2});
        CHECK(f.degree() == 2);
        CHECK(cremona::invert(f).inverse_degree == static_cast<std::int64_t>(n));
    }
}

TEST_CASE("triangular with d = 2 coincides with chain-loop") {
    for (std::size_t n = 2; n <= 6; ++n) {
        CHECK(build({Family::triangular, n, 2}) == build({Family::chain_loop, n, 2}));
        CHECK(predicted_inverse_degree({Family::triangular, n, 2}) ==
              predicted_inverse_degree({Family::chain_loop, n, 2}));
    }
}
