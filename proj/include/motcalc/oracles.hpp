#pragma once

#include <vector>

#include "motcalc/tate_motive.hpp"

namespace motcalc::verify {

// Explicit cellular variety, given by the dimensions of its affine cells.
struct CellModel {
    std::vector<unsigned> cells;

    bool operator==(const CellModel&) const = default;
};

// mult[k] = number of partitions fitting in a d x w box with weight k,
// found by exhaustive enumeration (no q-binomial shortcuts).
TateMotive partitions_in_box(unsigned d, unsigned w);

// Coefficients of the Gaussian binomial [n choose d]_q via the recurrence
// G(n,d) = G(n-1,d-1) + q^d * G(n-1,d).  Throws if d > n.
TateMotive gaussian_binomial(unsigned n, unsigned d);

// mult[k] = number of permutations of n letters with exactly k inversions,
// counted by listing all n! permutations.  Requires 1 <= n <= 9.
TateMotive permutation_length_profile(unsigned n);

TateMotive cell_motive(const CellModel& m);

// mult[k] = #{(i,j) : a.cells[i] + b.cells[j] = k}, counted directly.
TateMotive kunneth_cells(const CellModel& a, const CellModel& b);

}  // namespace motcalc::verify
