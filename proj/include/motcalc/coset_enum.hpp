#pragma once

#include <cstdint>
#include <vector>

#include "motcalc/root_system.hpp"
#include "motcalc/tate_motive.hpp"

namespace motcalc {

// Default bound on the number of orbit points any single enumeration may
// visit. Overridable per call, via the CLI --max-orbit flag, or the
// MOTCALC_MAX_ORBIT environment variable.
inline constexpr std::uint64_t kDefaultMaxOrbit = 10'000'000;

// Multiset of lengths of the minimal coset representatives in W^P: counts_[l]
// is the number of w in W^P with l(w) = l.
class CosetLengthProfile {
public:
    explicit CosetLengthProfile(std::vector<std::uint64_t> counts);

    std::uint64_t count(unsigned length) const;
    unsigned max_length() const { return static_cast<unsigned>(counts_.size()) - 1; }
    std::uint64_t total() const;

    // Poincare duality of G/P: count(l) == count(max_length - l).
    bool is_palindrome() const;

    TateMotive to_motive() const;
    const std::vector<std::uint64_t>& counts() const { return counts_; }

    // "0:1 1:1 2:2" style, same rendering as the motive it induces.
    std::string to_string() const;

    bool operator==(const CosetLengthProfile&) const = default;

private:
    std::vector<std::uint64_t> counts_;
};

// Enumerates W/W_P as the W-orbit of rho_P = sum of fundamental weights off
// the Levi, by breadth-first search with exact integer weight coordinates.
// The BFS depth of an orbit point is the length of the minimal representative
// of its coset. Throws ResourceError when |W^P| (known in closed form before
// any traversal) exceeds max_orbit.
CosetLengthProfile coset_lengths(const RootSystem& rs, const ParabolicSpec& p,
                                 std::uint64_t max_orbit = kDefaultMaxOrbit);

// Length profile of the Levi's own Weyl group W_P, enumerated the same way on
// the Levi's Cartan matrix. Used by the factorization cross-checks.
CosetLengthProfile levi_length_profile(const RootSystem& rs, const ParabolicSpec& p,
                                       std::uint64_t max_orbit = kDefaultMaxOrbit);

// |W| by enumeration (empty Levi), subject to the same cap.
Integer weyl_order(const RootSystem& rs, std::uint64_t max_orbit = kDefaultMaxOrbit);

// M(G/P) = sum over w in W^P of L^{l(w)}: one Tate summand per cell of the
// Bruhat decomposition.
TateMotive gp_motive(const RootSystem& rs, const ParabolicSpec& p,
                     std::uint64_t max_orbit = kDefaultMaxOrbit);

}  // namespace motcalc
