#pragma once

#include <cstdint>

#include "cremona/cremap.hpp"

namespace cremona {

enum class Family {
    triangular,        // (x_0^d : x_0^{d-1} x_1 : ... : x_{n-1}^{d-1} x_n)
    chain_loop,        // (x_0^2 : x_0 x_1 : ... : x_{n-1} x_n), degree 2
    classic_quadratic, // (x_1 x_2 : x_0 x_2 : x_0 x_1) in P^2
};

struct FamilySpec {
    Family name;
    std::size_t n = 2;
    std::int64_t d = 2; // ignored where the family forces it
};

MonomialMap build(const FamilySpec& spec);

/// Closed-form inverse degree: triangular gives 1 + c + ... + c^{n-1} with
/// c = d-1; chain-loop gives n; the classic quadratic gives 2.
std::int64_t predicted_inverse_degree(const FamilySpec& spec);

/// Upper-triangular B with b_ij = (1-d)^{j-i}; dividing its first row by d
/// yields the exact inverse of the triangular family's log-matrix.
IntMatrix inverse_matrix_oracle(const FamilySpec& spec);

} // namespace cremona
