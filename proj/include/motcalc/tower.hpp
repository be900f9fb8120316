#pragma once

#include <variant>
#include <vector>

#include "motcalc/fibre.hpp"
#include "motcalc/tate_motive.hpp"

namespace motcalc {

// Base of a tower. A base need not be pure Tate: FreeChowBase carries only
// the free Chow ranks by codimension, which is all the rank-level computation
// consumes. Torsion is not tracked.
struct PointBase {
    bool operator==(const PointBase&) const = default;
};

struct TateBase {
    TateMotive motive;
    bool operator==(const TateBase&) const = default;
};

struct FreeChowBase {
    std::vector<Integer> ranks;  // indexed by codimension p, size dim+1
    unsigned dim = 0;
    bool operator==(const FreeChowBase&) const = default;
};

using BaseSpec = std::variant<PointBase, TateBase, FreeChowBase>;

struct TowerSpec {
    BaseSpec base;
    std::vector<FibreSpec> fibres;  // applied left to right; may be empty
};

void validate_base(const BaseSpec& base);

// Chow rank vector of the base alone, indexed by codimension.
std::vector<Integer> base_chow_ranks(const BaseSpec& base);

// Motive of the total space: base motive tensored with every fibre motive in
// order. Rejects FreeChowBase, which carries no motive; use tower_chow_ranks.
TateMotive tower_motive(const TowerSpec& t, std::uint64_t max_orbit = kDefaultMaxOrbit);

// Chow rank vector of the total space: the base rank vector convolved with
// each fibre's multiplicity vector. Works for every base.
std::vector<Integer> tower_chow_ranks(const TowerSpec& t,
                                      std::uint64_t max_orbit = kDefaultMaxOrbit);

}  // namespace motcalc
