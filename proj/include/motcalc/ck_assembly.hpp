#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motcalc/coset_enum.hpp"
#include "motcalc/fibre.hpp"
#include "motcalc/integer.hpp"

namespace motcalc {

// One labeled summand of a Chow–Künneth style decomposition.
struct CKComponent {
    std::string label;
    long long weight = 0;
    std::vector<Integer> chow_ranks;  // index = codimension, entries >= 0

    bool operator==(const CKComponent&) const = default;
};

Integer ck_total_rank(const std::vector<CKComponent>& components);

// Tensors each base component with the fibre motive: a twist n of
// multiplicity m contributes m copies of the component with label suffix
// "⊗L^n", weight raised by 2n, and Chow ranks shifted up by n.  Result is
// ordered by weight, then label.
std::vector<CKComponent> ck_assemble(const std::vector<CKComponent>& base_components,
                                     const FibreSpec& fibre,
                                     std::uint64_t max_orbit = kDefaultMaxOrbit);

}  // namespace motcalc
