#include "motcalc/coset_enum.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <utility>

#include "motcalc/errors.hpp"

namespace motcalc {

namespace {

// Weights in fundamental-weight coordinates: coord i is <lambda, alpha_i^vee>.
// Coordinates stay tiny (bounded by the height of the highest coroot), int32
// is ample for every supported rank.
using Weight = std::vector<std::int32_t>;

// s_i(lambda)_j = lambda_j - lambda_i * cartan[i][j]; fixes lambda iff
// lambda_i == 0.
Weight reflect(const Weight& w, unsigned i, const std::vector<int>& cartan, unsigned k) {
    Weight out = w;
    const std::int32_t wi = w[i];
    for (unsigned j = 0; j < k; ++j) out[j] -= wi * static_cast<std::int32_t>(cartan[i * k + j]);
    return out;
}

// Level-by-level orbit BFS from `start`. A simple reflection either fixes a
// point or moves it to the adjacent level (lengths change by exactly one), so
// each new level is the deduplicated set of images of the current level that
// do not fall back into the previous one. Returns the level sizes, which are
// the coset length counts.
std::vector<std::uint64_t> orbit_level_sizes(const std::vector<int>& cartan, unsigned k,
                                             Weight start, const Integer& expected_total) {
    std::vector<std::uint64_t> sizes;
    std::vector<Weight> prev;
    std::vector<Weight> cur{std::move(start)};
    Integer seen = 1;
    sizes.push_back(1);

    while (true) {
        std::vector<Weight> next;
        next.reserve(cur.size() * k);
        for (const Weight& w : cur)
            for (unsigned i = 0; i < k; ++i) {
                if (w[i] == 0) continue;
                Weight q = reflect(w, i, cartan, k);
                if (!std::binary_search(prev.begin(), prev.end(), q)) next.push_back(std::move(q));
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.empty()) break;

        seen += static_cast<unsigned long>(next.size());
        if (seen > expected_total)
            throw InternalError("orbit enumeration exceeded the closed-form coset count " +
                                expected_total.get_str());
        sizes.push_back(next.size());
        prev = std::move(cur);
        cur = std::move(next);
    }

    if (seen != expected_total)
        throw InternalError("orbit enumeration found " + seen.get_str() +
                            " points, closed form expects " + expected_total.get_str());
    return sizes;
}

void check_cap(const Integer& orbit_size, std::uint64_t max_orbit, const std::string& what) {
    if (orbit_size > static_cast<unsigned long>(max_orbit)) {
        std::ostringstream os;
        os << what << " has orbit size " << orbit_size.get_str() << ", exceeding the orbit cap "
           << max_orbit << " (raise --max-orbit or MOTCALC_MAX_ORBIT)";
        throw ResourceError(os.str(), orbit_size);
    }
}

}  // namespace

CosetLengthProfile::CosetLengthProfile(std::vector<std::uint64_t> counts)
    : counts_(std::move(counts)) {
    if (counts_.empty()) throw DomainError("a coset length profile cannot be empty");
    while (counts_.size() > 1 && counts_.back() == 0) counts_.pop_back();
}

std::uint64_t CosetLengthProfile::count(unsigned length) const {
    return length < counts_.size() ? counts_[length] : 0;
}

std::uint64_t CosetLengthProfile::total() const {
    std::uint64_t t = 0;
    for (auto c : counts_) t += c;
    return t;
}

bool CosetLengthProfile::is_palindrome() const {
    for (std::size_t i = 0, j = counts_.size() - 1; i < j; ++i, --j)
        if (counts_[i] != counts_[j]) return false;
    return true;
}

TateMotive CosetLengthProfile::to_motive() const {
    std::map<unsigned, Integer> mult;
    for (unsigned l = 0; l < counts_.size(); ++l)
        if (counts_[l] != 0) mult[l] = Integer(static_cast<unsigned long>(counts_[l]));
    return TateMotive(std::move(mult));
}

std::string CosetLengthProfile::to_string() const { return to_motive().multiplicity_line(); }

CosetLengthProfile coset_lengths(const RootSystem& rs, const ParabolicSpec& p,
                                 std::uint64_t max_orbit) {
    validate_parabolic(rs, p);
    const Integer expected = coset_count(rs, p);
    std::ostringstream what;
    what << "W^P for " << rs.name() << " levi={";
    bool first = true;
    for (unsigned i : p.levi) {
        if (!first) what << ',';
        first = false;
        what << i;
    }
    what << '}';
    check_cap(expected, max_orbit, what.str());

    const unsigned k = rs.rank();
    Weight start(k, 1);
    for (unsigned i : p.levi) start[i - 1] = 0;
    auto sizes = orbit_level_sizes(rs.cartan_matrix(), k, std::move(start), expected);

    CosetLengthProfile profile{std::move(sizes)};
    if (profile.max_length() != gp_dimension(rs, p))
        throw InternalError("maximal coset length " + std::to_string(profile.max_length()) +
                            " does not match dim G/P " + std::to_string(gp_dimension(rs, p)));
    return profile;
}

CosetLengthProfile levi_length_profile(const RootSystem& rs, const ParabolicSpec& p,
                                       std::uint64_t max_orbit) {
    validate_parabolic(rs, p);
    if (p.levi.empty()) return CosetLengthProfile{{1}};
    const DiagramInfo info = levi_diagram_info(rs, p);
    check_cap(info.weyl_order, max_orbit, "W_P for " + rs.name());
    const unsigned k = static_cast<unsigned>(p.levi.size());
    auto sizes = orbit_level_sizes(levi_cartan(rs, p), k, Weight(k, 1), info.weyl_order);
    return CosetLengthProfile{std::move(sizes)};
}

Integer weyl_order(const RootSystem& rs, std::uint64_t max_orbit) {
    return Integer(static_cast<unsigned long>(
        coset_lengths(rs, ParabolicSpec::borel(), max_orbit).total()));
}

TateMotive gp_motive(const RootSystem& rs, const ParabolicSpec& p, std::uint64_t max_orbit) {
    return coset_lengths(rs, p, max_orbit).to_motive();
}

}  // namespace motcalc
