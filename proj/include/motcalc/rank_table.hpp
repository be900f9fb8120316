#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "motcalc/coset_enum.hpp"
#include "motcalc/fibre.hpp"
#include "motcalc/integer.hpp"

namespace motcalc {

// Two-variable rank table indexed by (p, q): codimension p, level q.
// Entries with rank zero are dropped; iteration order is row-major,
// q ascending then p ascending.
class RankTable {
  public:
    using Key = std::pair<unsigned, unsigned>;  // stored as (q, p)

    RankTable() = default;
    explicit RankTable(std::map<Key, Integer> entries_by_qp);

    // Convenience: set/accumulate a single entry, given as (p, q).
    void add(unsigned p, unsigned q, const Integer& rank);

    const Integer& rank(unsigned p, unsigned q) const;  // zero if absent
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    // Sorted (q, p) -> rank, the canonical row-major order.
    const std::map<Key, Integer>& entries() const { return entries_; }

    // One line per entry: "p=<p> q=<q> rank=<r>".
    std::string to_string() const;

    bool operator==(const RankTable&) const = default;

  private:
    std::map<Key, Integer> entries_;
};

// Tensors the base table against each fibre in turn: every fibre cell of
// dimension i shifts the p-index by i, leaving q untouched.
RankTable higher_chow_table(const RankTable& base, const std::vector<FibreSpec>& fibres,
                            std::uint64_t max_orbit = kDefaultMaxOrbit);

}  // namespace motcalc
