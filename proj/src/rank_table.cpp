#include "motcalc/rank_table.hpp"

#include <sstream>

#include "motcalc/errors.hpp"

namespace motcalc {

RankTable::RankTable(std::map<Key, Integer> entries_by_qp) : entries_(std::move(entries_by_qp)) {
    for (auto it = entries_.begin(); it != entries_.end();) {
        if (it->second < 0) throw DomainError("rank table entries must be nonnegative");
        if (it->second == 0)
            it = entries_.erase(it);
        else
            ++it;
    }
}

void RankTable::add(unsigned p, unsigned q, const Integer& rank) {
    if (rank < 0) throw DomainError("rank table entries must be nonnegative");
    if (rank == 0) return;
    Integer& slot = entries_[{q, p}];
    slot += rank;
    if (slot == 0) entries_.erase({q, p});
}

const Integer& RankTable::rank(unsigned p, unsigned q) const {
    static const Integer zero(0);
    auto it = entries_.find({q, p});
    return it == entries_.end() ? zero : it->second;
}

std::string RankTable::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [qp, r] : entries_) {
        if (!first) os << '\n';
        first = false;
        os << "p=" << qp.second << " q=" << qp.first << " rank=" << r.get_str();
    }
    return os.str();
}

RankTable higher_chow_table(const RankTable& base, const std::vector<FibreSpec>& fibres,
                            std::uint64_t max_orbit) {
    RankTable acc = base;
    for (const FibreSpec& f : fibres) {
        const TateMotive fm = fibre_motive(f, max_orbit);
        RankTable next;
        for (const auto& [qp, r] : acc.entries())
            for (const auto& [shift, mult] : fm.multiplicities())
                next.add(qp.second + shift, qp.first, r * mult);
        acc = std::move(next);
    }
    return acc;
}

}  // namespace motcalc
