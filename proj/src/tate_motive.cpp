#include "motcalc/tate_motive.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "motcalc/errors.hpp"

namespace motcalc {

TateMotive::TateMotive(std::map<unsigned, Integer> multiplicities)
    : mult_(std::move(multiplicities)) {
    for (auto it = mult_.begin(); it != mult_.end();) {
        if (it->second < 0)
            throw DomainError("multiplicity at twist " + std::to_string(it->first) +
                              " is negative (" + it->second.get_str() + ")");
        if (it->second == 0)
            it = mult_.erase(it);
        else
            ++it;
    }
}

TateMotive TateMotive::unit() { return lefschetz_power(0); }

TateMotive TateMotive::lefschetz_power(unsigned n) {
    TateMotive m;
    m.mult_[n] = 1;
    return m;
}

Integer TateMotive::multiplicity(unsigned twist) const {
    auto it = mult_.find(twist);
    return it == mult_.end() ? Integer(0) : it->second;
}

Integer TateMotive::rank() const {
    Integer total = 0;
    for (const auto& [twist, count] : mult_) total += count;
    return total;
}

unsigned TateMotive::top_twist() const {
    if (mult_.empty()) throw DomainError("the zero motive has no top twist");
    return mult_.rbegin()->first;
}

bool TateMotive::is_self_dual(unsigned dim) const {
    if (!mult_.empty() && top_twist() > dim) return false;
    for (unsigned n = 0; n <= dim; ++n)
        if (multiplicity(n) != multiplicity(dim - n)) return false;
    return true;
}

TateMotive TateMotive::twisted_by(unsigned k) const {
    TateMotive out;
    for (const auto& [twist, count] : mult_) out.mult_[twist + k] = count;
    return out;
}

TateMotive operator+(const TateMotive& a, const TateMotive& b) {
    TateMotive out = a;
    for (const auto& [twist, count] : b.mult_) {
        auto [it, inserted] = out.mult_.emplace(twist, count);
        if (!inserted) it->second += count;
    }
    return out;
}

TateMotive operator*(const TateMotive& a, const TateMotive& b) {
    TateMotive out;
    for (const auto& [i, ci] : a.mult_)
        for (const auto& [j, cj] : b.mult_) {
            auto [it, inserted] = out.mult_.emplace(i + j, ci * cj);
            if (!inserted) it->second += ci * cj;
        }
    return out;
}

std::string TateMotive::to_string() const {
    if (mult_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [twist, count] : mult_) {
        if (!first) os << " + ";
        first = false;
        if (twist == 0) {
            os << count.get_str();
            continue;
        }
        if (count != 1) os << count.get_str() << "·";
        os << "L";
        if (twist > 1) os << "^" << twist;
    }
    return os.str();
}

std::string TateMotive::multiplicity_line() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [twist, count] : mult_) {
        if (!first) os << ' ';
        first = false;
        os << twist << ':' << count.get_str();
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TateMotive& m) {
    return os << m.to_string();
}

}  // namespace motcalc
