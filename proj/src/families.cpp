#include "cremona/families.hpp"

namespace cremona {

namespace {

void validate(const FamilySpec& spec) {
    switch (spec.name) {
    case Family::triangular:
        if (spec.n < 2 || spec.d < 2)
            throw std::invalid_argument("triangular family requires n >= 2 and d >= 2");
        return;
    case Family::chain_loop:
        if (spec.n < 2)
            throw std::invalid_argument("chain-loop family requires n >= 2");
        return;
    case Family::classic_quadratic:
        if (spec.n != 2)
            throw std::invalid_argument("classic quadratic map lives in P^2");
        return;
    }
    throw std::invalid_argument("unknown family");
}

IntMatrix triangular_log(std::size_t n, std::int64_t d) {
    IntMatrix a(n + 1, n + 1);
    a(0, 0) = d;
    for (std::size_t i = 1; i <= n; ++i) {
        a(i - 1, i) = d - 1;
        a(i, i) = 1;
    }
    return a;
}

} // namespace

MonomialMap build(const FamilySpec& spec) {
    validate(spec);
    switch (spec.name) {
    case Family::triangular:
        return MonomialMap::from_log_matrix(triangular_log(spec.n, spec.d));
    case Family::chain_loop:
        return MonomialMap::from_log_matrix(triangular_log(spec.n, 2));
    case Family::classic_quadratic:
    default:
        return MonomialMap::from_log_matrix(IntMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    }
}

std::int64_t predicted_inverse_degree(const FamilySpec& spec) {
    validate(spec);
    switch (spec.name) {
    case Family::triangular: {
        const std::int64_t c = spec.d - 1;
        std::int64_t sum = 0;
        std::int64_t power = 1;
        for (std::size_t i = 0; i < spec.n; ++i) {
            sum = checked_add(sum, power);
            power = checked_mul(power, c);
        }
        return sum;
    }
    case Family::chain_loop:
        return static_cast<std::int64_t>(spec.n);
    case Family::classic_quadratic:
    default:
        return 2;
    }
}

IntMatrix inverse_matrix_oracle(const FamilySpec& spec) {
    if (spec.name != Family::triangular)
        throw std::invalid_argument("inverse oracle is defined for the triangular family only");
    validate(spec);
    const std::size_t size = spec.n + 1;
    IntMatrix b(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        std::int64_t power = 1;
        for (std::size_t j = i; j < size; ++j) {
            b(i, j) = power;
            power = checked_mul(power, 1 - spec.d);
        }
    }
    return b;
}

} // namespace cremona
