#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "motcalc/integer.hpp"

namespace motcalc {

// A finite direct sum of Tate objects 1(-n) with n >= 0, stored as a sparse
// twist -> multiplicity map. The stored map is always normalized: entries are
// strictly positive and keyed by ascending twist, the zero motive is the
// empty map, and equality is structural on the normalized map.
//
// The multiplicity at twist p is the rank of CH^p, so the whole vector is the
// coefficient list of the Poincare polynomial in the Lefschetz class L.
class TateMotive {
public:
    // The zero motive.
    TateMotive() = default;

    // Normalizes zero entries away; rejects negative multiplicities.
    explicit TateMotive(std::map<unsigned, Integer> multiplicities);

    // The motive of a point, 1.
    static TateMotive unit();

    // L^n = 1(-n).
    static TateMotive lefschetz_power(unsigned n);

    const std::map<unsigned, Integer>& multiplicities() const { return mult_; }

    // Rank of CH^twist; zero when the twist is absent.
    Integer multiplicity(unsigned twist) const;

    // Domain-named alias: the rank of CH^p of any variety with this motive.
    Integer chow_rank(unsigned p) const { return multiplicity(p); }

    // Total rank; the number of cells for a cellular variety.
    Integer rank() const;

    bool is_zero() const { return mult_.empty(); }

    // Largest supported twist. The motive must be nonzero.
    unsigned top_twist() const;

    // Poincare duality at dimension dim: mult[n] == mult[dim-n] for all
    // 0 <= n <= dim and no support above dim.
    bool is_self_dual(unsigned dim) const;

    // Tensor with L^k: every twist shifts up by k.
    TateMotive twisted_by(unsigned k) const;

    // "1 + L + 2·L^2" style, ascending powers; "0" for the zero motive.
    std::string to_string() const;

    // "0:1 1:1 2:2" style, ascending twists; empty for the zero motive.
    std::string multiplicity_line() const;

    // Direct sum: pointwise addition of multiplicities.
    friend TateMotive operator+(const TateMotive& a, const TateMotive& b);

    // Tensor product: twists add, so multiplicity vectors convolve.
    friend TateMotive operator*(const TateMotive& a, const TateMotive& b);

    bool operator==(const TateMotive&) const = default;

private:
    std::map<unsigned, Integer> mult_;
};

std::ostream& operator<<(std::ostream& os, const TateMotive& m);

}  // namespace motcalc
