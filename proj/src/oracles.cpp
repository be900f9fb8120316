#include "motcalc/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "motcalc/errors.hpp"

namespace motcalc::verify {

namespace {

// Extend a non-increasing prefix of parts, each at most `w`, with at most
// `slots` parts remaining; tallies the weight of every completed partition.
void enumerate_partitions(unsigned slots, unsigned max_part, unsigned weight,
                          std::map<unsigned, Integer>& tally) {
    tally[weight] += 1;
    if (slots == 0) return;
    for (unsigned part = 1; part <= max_part; ++part)
        enumerate_partitions(slots - 1, part, weight + part, tally);
}

}  // namespace

TateMotive partitions_in_box(unsigned d, unsigned w) {
    std::map<unsigned, Integer> tally;
    enumerate_partitions(d, w, 0, tally);
    return TateMotive(std::move(tally));
}

TateMotive gaussian_binomial(unsigned n, unsigned d) {
    if (d > n)
        throw DomainError("gaussian_binomial requires d <= n, got d=" + std::to_string(d) +
                          ", n=" + std::to_string(n));
    // row[k] holds the coefficients of G(m, d') along the recurrence; we fill
    // a triangle of raw coefficient vectors, never touching TateMotive ops.
    std::vector<std::vector<Integer>> prev, cur;
    prev = {{Integer(1)}};  // G(0,0) = 1
    for (unsigned m = 1; m <= n; ++m) {
        cur.assign(std::min(m, d) + 1, {});
        for (unsigned k = 0; k <= std::min(m, d); ++k) {
            if (k == 0 || k == m) {
                cur[k] = {Integer(1)};
                continue;
            }
            const std::vector<Integer>& left = prev[k - 1];   // G(m-1, k-1)
            const std::vector<Integer>& right = prev[k];      // G(m-1, k)
            std::vector<Integer> coeffs(std::max(left.size(), right.size() + k), Integer(0));
            for (std::size_t i = 0; i < left.size(); ++i) coeffs[i] += left[i];
            for (std::size_t i = 0; i < right.size(); ++i) coeffs[i + k] += right[i];
            cur[k] = std::move(coeffs);
        }
        prev = std::move(cur);
    }
    std::map<unsigned, Integer> mult;
    const std::vector<Integer>& result = prev[d];
    for (std::size_t i = 0; i < result.size(); ++i)
        if (result[i] != 0) mult[static_cast<unsigned>(i)] = result[i];
    return TateMotive(std::move(mult));
}

TateMotive permutation_length_profile(unsigned n) {
    if (n == 0 || n > 9)
        throw DomainError("permutation_length_profile requires 1 <= n <= 9, got " +
                          std::to_string(n));
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0U);
    std::map<unsigned, Integer> tally;
    do {
        unsigned inversions = 0;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        tally[inversions] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return TateMotive(std::move(tally));
}

TateMotive cell_motive(const CellModel& m) {
    if (m.cells.empty()) throw DomainError("a cell model needs at least one cell");
    std::map<unsigned, Integer> tally;
    for (unsigned dim : m.cells) tally[dim] += 1;
    return TateMotive(std::move(tally));
}

TateMotive kunneth_cells(const CellModel& a, const CellModel& b) {
    if (a.cells.empty() || b.cells.empty())
        throw DomainError("a cell model needs at least one cell");
    std::map<unsigned, Integer> tally;
    for (unsigned da : a.cells)
        for (unsigned db : b.cells) tally[da + db] += 1;
    return TateMotive(std::move(tally));
}

}  // namespace motcalc::verify
