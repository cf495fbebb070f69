#include "cremona/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

#include "cremona/cremap.hpp"

namespace cremona {

std::vector<ExponentVector> monomials_of_degree(std::size_t n, std::int64_t d) {
    if (n < 2)
        throw std::invalid_argument("dimension must be at least 2");
    if (d < 1)
        throw std::invalid_argument("degree must be positive");
    std::vector<ExponentVector> out;
    ExponentVector current(n + 1, 0);
    // lexicographic recursion over the first n positions; the last is forced
    auto rec = [&](auto&& self, std::size_t pos, std::int64_t remaining) -> void {
        if (pos == n) {
            current[pos] = remaining;
            out.push_back(current);
            return;
        }
        for (std::int64_t e = 0; e <= remaining; ++e) {
            current[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

std::uint64_t DegreeHistogram::total() const {
    std::uint64_t t = 0;
    for (const auto& [dp, c] : counts)
        t += c;
    return t;
}

void DegreeHistogram::add(std::int64_t d_prime, std::uint64_t count) {
    counts[d_prime] += count;
}

void DegreeHistogram::merge(const DegreeHistogram& other) {
    for (const auto& [dp, c] : other.counts)
        counts[dp] += c;
}

std::vector<std::int64_t> gaps_of(const DegreeHistogram& h) {
    std::vector<std::int64_t> gaps;
    DegreeHistogram observed;
    for (const auto& [dp, c] : h.counts)
        if (c > 0)
            observed.counts[dp] = c;
    if (observed.counts.empty())
        throw std::invalid_argument("gaps of an empty histogram");
    const std::int64_t lo = observed.counts.begin()->first;
    const std::int64_t hi = observed.counts.rbegin()->first;
    for (std::int64_t v = lo + 1; v < hi; ++v)
        if (!observed.counts.contains(v))
            gaps.push_back(v);
    return gaps;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > static_cast<unsigned __int128>(UINT64_MAX))
            throw OverflowError("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

IntMatrix selection_log_matrix(const std::vector<ExponentVector>& monomials,
                               const MonomialSelection& selection) {
    const std::size_t size = monomials.front().size();
    IntMatrix log(size, selection.size());
    for (std::size_t j = 0; j < selection.size(); ++j)
        for (std::size_t i = 0; i < size; ++i)
            log(i, j) = monomials[selection[j]][i];
    return log;
}

namespace {

constexpr std::size_t kMaxSize = 16; // n+1 never approaches this at desk scale

// Determinant of a small integer matrix, unchecked: entries are bounded by
// the degree, so Hadamard's bound keeps everything far below 2^63.
std::int64_t small_det(std::int64_t a[][kMaxSize], std::size_t n) {
    if (n == 2)
        return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if (n == 3)
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    // Bareiss for the rest
    std::int64_t sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = k; j < n; ++j)
                std::swap(a[k][j], a[p][j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

struct Enumerator {
    std::size_t n;
    std::size_t cols; // n + 1
    const std::vector<ExponentVector>& monomials;
    const std::set<std::int64_t>* targets = nullptr;

    std::vector<std::uint32_t> zero_mask;     // rows where the exponent is 0
    std::vector<std::uint32_t> nonzero_mask;  // rows where the exponent is > 0
    std::vector<std::uint32_t> suffix_zero;   // OR of zero_mask[i..]
    std::vector<std::uint32_t> suffix_nonzero;
    std::uint32_t full = 0;

    std::array<std::size_t, kMaxSize> selection{};
    DegreeHistogram histogram;
    std::map<std::int64_t, std::vector<MonomialSelection>> witnesses;

    Enumerator(std::size_t n_, const std::vector<ExponentVector>& monomials_)
        : n(n_), cols(n_ + 1), monomials(monomials_) {
        const std::size_t count = monomials.size();
        full = (std::uint32_t{1} << cols) - 1;
        zero_mask.resize(count);
        nonzero_mask.resize(count);
        for (std::size_t m = 0; m < count; ++m)
            for (std::size_t i = 0; i < cols; ++i) {
                if (monomials[m][i] == 0)
                    zero_mask[m] |= std::uint32_t{1} << i;
                else
                    nonzero_mask[m] |= std::uint32_t{1} << i;
            }
        suffix_zero.assign(count + 1, 0);
        suffix_nonzero.assign(count + 1, 0);
        for (std::size_t m = count; m-- > 0;) {
            suffix_zero[m] = suffix_zero[m + 1] | zero_mask[m];
            suffix_nonzero[m] = suffix_nonzero[m + 1] | nonzero_mask[m];
        }
    }

    void survivor(std::int64_t d_prime) {
        histogram.add(d_prime);
        if (targets && targets->contains(d_prime))
            witnesses[d_prime].emplace_back(selection.begin(),
                                            selection.begin() + static_cast<std::ptrdiff_t>(cols));
    }

    void leaf() {
        std::int64_t lat[kMaxSize][kMaxSize];
        const ExponentVector& base = monomials[selection[0]];
        for (std::size_t j = 1; j < cols; ++j) {
            const ExponentVector& col = monomials[selection[j]];
            for (std::size_t i = 1; i < cols; ++i)
                lat[i - 1][j - 1] = col[i] - base[i];
        }
        const std::int64_t det = small_det(lat, n);
        if (det != 1 && det != -1)
            return;
        MonomialSelection sel(selection.begin(),
                              selection.begin() + static_cast<std::ptrdiff_t>(cols));
        const auto map = MonomialMap::from_log_matrix(selection_log_matrix(monomials, sel));
        survivor(invert(map).inverse_degree);
    }

    void recurse(std::size_t depth, std::size_t start, std::uint32_t zero_cover,
                 std::uint32_t nonzero_cover) {
        if ((zero_cover | suffix_zero[start]) != full ||
            (nonzero_cover | suffix_nonzero[start]) != full)
            return;
        if (depth == cols) {
            if (zero_cover == full && nonzero_cover == full)
                leaf();
            return;
        }
        const std::size_t last = monomials.size() - (cols - depth);
        for (std::size_t m = start; m <= last; ++m) {
            selection[depth] = m;
            recurse(depth + 1, m + 1, zero_cover | zero_mask[m], nonzero_cover | nonzero_mask[m]);
        }
        // leaf() never fires here when depth < cols
    }
};

// Runs the census with workers pulling first-column indices from a shared
// counter; partial results are merged in index order, so the outcome does
// not depend on scheduling.
void run_census(std::size_t n, std::int64_t d, unsigned jobs,
                const std::set<std::int64_t>* targets, DegreeHistogram& histogram,
                std::map<std::int64_t, std::vector<MonomialSelection>>& witnesses) {
    if (n < 2)
        throw std::invalid_argument("dimension must be at least 2");
    if (d < 2)
        throw std::invalid_argument("census degree must be at least 2");
    if (n + 1 >= kMaxSize)
        throw std::invalid_argument("dimension too large for the census kernel");
    if (jobs == 0)
        jobs = 1;

    const auto monomials = monomials_of_degree(n, d);
    const std::size_t count = monomials.size();
    const std::size_t first_limit = count - n; // last viable first index

    std::vector<Enumerator> partials;
    partials.reserve(first_limit);
    for (std::size_t i = 0; i < first_limit; ++i) {
        partials.emplace_back(n, monomials);
        partials.back().targets = targets;
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= first_limit)
                return;
            Enumerator& e = partials[i];
            e.selection[0] = i;
            e.recurse(1, i + 1, e.zero_mask[i], e.nonzero_mask[i]);
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t)
            threads.emplace_back(worker);
        for (auto& t : threads)
            t.join();
    }

    for (const Enumerator& e : partials) {
        histogram.merge(e.histogram);
        for (const auto& [dp, sels] : e.witnesses) {
            auto& dst = witnesses[dp];
            dst.insert(dst.end(), sels.begin(), sels.end());
        }
    }
}

} // namespace

CensusReport enumerate_maps(std::size_t n, std::int64_t d, unsigned jobs) {
    CensusReport report;
    report.n = n;
    report.d = d;
    std::map<std::int64_t, std::vector<MonomialSelection>> unused;
    run_census(n, d, jobs, nullptr, report.histogram, unused);
    report.total_combinations =
        binomial(binomial(static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(d),
                          static_cast<std::uint64_t>(n)),
                 static_cast<std::uint64_t>(n) + 1);
    report.surviving = report.histogram.total();
    if (report.surviving > 0) {
        report.gaps = gaps_of(report.histogram);
        report.min_d_prime = report.histogram.counts.begin()->first;
        report.max_d_prime = report.histogram.counts.rbegin()->first;
    }
    return report;
}

std::map<std::int64_t, std::vector<MonomialSelection>>
extremal_witnesses(std::size_t n, std::int64_t d, const std::set<std::int64_t>& targets,
                   unsigned jobs) {
    DegreeHistogram histogram;
    std::map<std::int64_t, std::vector<MonomialSelection>> witnesses;
    run_census(n, d, jobs, &targets, histogram, witnesses);
    return witnesses;
}

} // namespace cremona
