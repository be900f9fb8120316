#pragma once

#include <set>
#include <vector>

#include "motcalc/integer.hpp"

namespace motcalc {

// Cartan datum of an irreducible finite type, Bourbaki numbering throughout:
//   A_n  chain 1-2-...-n
//   B_n  chain with alpha_n short       C_n  chain with alpha_n long
//   D_n  chain 1..n-2 with n-1 and n both attached to n-2
//   E_n  chain 1-3-4-...-n with 2 attached to 4
//   F_4  1-2=>3-4 (alpha_1, alpha_2 long)       G_2  alpha_1 short
//
// cartan(i, j) = <alpha_i, alpha_j^vee> = 2(alpha_i, alpha_j)/(alpha_j, alpha_j),
// 0-indexed; the public surface uses 1-based simple-root indices.
class RootSystem {
public:
    // Valid pairs: A_n n>=1, B_n n>=2, C_n n>=3, D_n n>=4, E_6..E_8, F_4, G_2.
    // Anything else is rejected with a descriptive error.
    static RootSystem build(char type_letter, unsigned rank);

    char type_letter() const { return type_; }
    unsigned rank() const { return rank_; }
    unsigned num_positive_roots() const { return num_positive_roots_; }

    int cartan(unsigned i, unsigned j) const { return cartan_[i * rank_ + j]; }
    const std::vector<int>& cartan_matrix() const { return cartan_; }

    // "A3", "G2", ...
    std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

private:
    RootSystem() = default;

    char type_ = 'A';
    unsigned rank_ = 1;
    std::vector<int> cartan_;
    unsigned num_positive_roots_ = 0;
};

// The parabolic is described by the simple roots generating its Levi factor.
// Empty set = Borel (W_P trivial), full set = all of G (W^P trivial).
struct ParabolicSpec {
    std::set<unsigned> levi;  // 1-based simple-root indices

    static ParabolicSpec borel() { return {}; }
};

// Throws DomainError when a Levi index is outside 1..rank.
void validate_parabolic(const RootSystem& rs, const ParabolicSpec& p);

// Weyl-group order and positive-root count of an arbitrary finite-type Cartan
// matrix (possibly reducible), recognized component by component from the
// Dynkin diagram. Used for exact orbit-size estimates before any enumeration
// starts, and as the closed-form side of the order cross-checks.
struct DiagramInfo {
    Integer weyl_order = 1;
    unsigned num_positive_roots = 0;
};

// cartan is a row-major size x size matrix.
DiagramInfo classify_cartan(const std::vector<int>& cartan, unsigned size);

// Principal submatrix of the Cartan matrix on the Levi's simple roots
// (ascending index order).
std::vector<int> levi_cartan(const RootSystem& rs, const ParabolicSpec& p);

Integer closed_form_weyl_order(const RootSystem& rs);
DiagramInfo levi_diagram_info(const RootSystem& rs, const ParabolicSpec& p);

// dim G/P = |Phi+| - |Phi+_Levi|.
unsigned gp_dimension(const RootSystem& rs, const ParabolicSpec& p);

// |W| / |W_Levi|, the exact number of minimal coset representatives.
Integer coset_count(const RootSystem& rs, const ParabolicSpec& p);

}  // namespace motcalc
