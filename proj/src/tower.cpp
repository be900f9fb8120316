#include "motcalc/tower.hpp"

#include <string>

#include "motcalc/errors.hpp"

namespace motcalc {

namespace {

std::vector<Integer> dense_multiplicities(const TateMotive& m) {
    std::vector<Integer> out;
    if (m.is_zero()) return out;
    out.assign(m.top_twist() + 1, Integer(0));
    for (const auto& [twist, count] : m.multiplicities()) out[twist] = count;
    return out;
}

std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Integer> out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

void validate_base(const BaseSpec& base) {
    if (const auto* fc = std::get_if<FreeChowBase>(&base)) {
        if (fc->ranks.size() != static_cast<std::size_t>(fc->dim) + 1)
            throw DomainError("FreeChowBase needs dim+1 = " + std::to_string(fc->dim + 1) +
                              " ranks, got " + std::to_string(fc->ranks.size()));
        for (const Integer& r : fc->ranks)
            if (r < 0) throw DomainError("Chow ranks must be nonnegative");
    }
}

std::vector<Integer> base_chow_ranks(const BaseSpec& base) {
    validate_base(base);
    if (std::holds_alternative<PointBase>(base)) return {Integer(1)};
    if (const auto* tb = std::get_if<TateBase>(&base)) return dense_multiplicities(tb->motive);
    return std::get<FreeChowBase>(base).ranks;
}

TateMotive tower_motive(const TowerSpec& t, std::uint64_t max_orbit) {
    validate_base(t.base);
    if (std::holds_alternative<FreeChowBase>(t.base))
        throw DomainError(
            "a FreeChowBase carries no motive; use tower_chow_ranks for rank output");

    TateMotive acc = std::holds_alternative<PointBase>(t.base)
                         ? TateMotive::unit()
                         : std::get<TateBase>(t.base).motive;
    for (const FibreSpec& f : t.fibres) acc = acc * fibre_motive(f, max_orbit);
    return acc;
}

std::vector<Integer> tower_chow_ranks(const TowerSpec& t, std::uint64_t max_orbit) {
    std::vector<Integer> ranks = base_chow_ranks(t.base);
    for (const FibreSpec& f : t.fibres)
        ranks = convolve(ranks, dense_multiplicities(fibre_motive(f, max_orbit)));
    return ranks;
}

}  // namespace motcalc
