#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "cremona/intmat.hpp"

namespace cremona {

/// Exponents of one monomial: n+1 nonnegative integers summing to d.
using ExponentVector = std::vector<std::int64_t>;

/// All C(n+d, n) exponent vectors of degree d in n+1 variables,
/// in lexicographic order.
std::vector<ExponentVector> monomials_of_degree(std::size_t n, std::int64_t d);

/// Exact counts of inverse degrees.
struct DegreeHistogram {
    std::map<std::int64_t, std::uint64_t> counts;

    std::uint64_t total() const;
    void add(std::int64_t d_prime, std::uint64_t count = 1);
    void merge(const DegreeHistogram& other);
};

/// Absent values strictly between the smallest and largest observed d'.
std::vector<std::int64_t> gaps_of(const DegreeHistogram& h);

struct CensusReport {
    std::size_t n = 0;
    std::int64_t d = 0;
    std::uint64_t total_combinations = 0;
    std::uint64_t surviving = 0;
    DegreeHistogram histogram;
    std::vector<std::int64_t> gaps;
    std::int64_t min_d_prime = 0;
    std::int64_t max_d_prime = 0;
};

/// Indices into monomials_of_degree(n, d), strictly increasing.
using MonomialSelection = std::vector<std::size_t>;

/// Exhausts all combinations of n+1 distinct degree-d monomials, keeping
/// those that stay reduced at degree d and induce a lattice automorphism,
/// and tallies their inverse degrees. The report is identical for every
/// jobs value.
CensusReport enumerate_maps(std::size_t n, std::int64_t d, unsigned jobs = 1);

/// The surviving selections whose inverse degree lies in targets.
std::map<std::int64_t, std::vector<MonomialSelection>>
extremal_witnesses(std::size_t n, std::int64_t d, const std::set<std::int64_t>& targets,
                   unsigned jobs = 1);

/// Log-matrix (columns are the selected monomials) for a selection.
IntMatrix selection_log_matrix(const std::vector<ExponentVector>& monomials,
                               const MonomialSelection& selection);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

} // namespace cremona
