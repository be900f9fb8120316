#include "motcalc/ck_assembly.hpp"

#include <algorithm>

#include "motcalc/errors.hpp"

namespace motcalc {

Integer ck_total_rank(const std::vector<CKComponent>& components) {
    Integer total(0);
    for (const CKComponent& c : components)
        for (const Integer& r : c.chow_ranks) total += r;
    return total;
}

std::vector<CKComponent> ck_assemble(const std::vector<CKComponent>& base_components,
                                     const FibreSpec& fibre, std::uint64_t max_orbit) {
    for (const CKComponent& c : base_components)
        for (const Integer& r : c.chow_ranks)
            if (r < 0) throw DomainError("CK component ranks must be nonnegative");

    const TateMotive fm = fibre_motive(fibre, max_orbit);
    std::vector<CKComponent> out;
    for (const CKComponent& c : base_components) {
        for (const auto& [twist, mult] : fm.multiplicities()) {
            CKComponent shifted;
            shifted.label = c.label + "⊗L^" + std::to_string(twist);
            shifted.weight = c.weight + 2LL * twist;
            shifted.chow_ranks.assign(twist, Integer(0));
            shifted.chow_ranks.insert(shifted.chow_ranks.end(), c.chow_ranks.begin(),
                                      c.chow_ranks.end());
            for (Integer copy = 0; copy < mult; ++copy) out.push_back(shifted);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const CKComponent& a, const CKComponent& b) {
        return a.weight != b.weight ? a.weight < b.weight : a.label < b.label;
    });
    return out;
}

}  // namespace motcalc
