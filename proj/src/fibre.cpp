#include "motcalc/fibre.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "motcalc/errors.hpp"

namespace motcalc {

namespace {

bool is_point(const Grassmannian& g) { return g.d == 0 || g.d == g.n; }

// Gaussian-binomial recurrence on multiplicity vectors:
//   Gr(d,n) = Gr(d-1,n-1) (+) L^d Gr(d,n-1),   Gr(0,m) = Gr(m,m) = 1.
// The exhaustive partition enumerator in verify is the independent second
// route to these numbers.
TateMotive grassmannian_motive(unsigned d, unsigned n) {
    std::vector<std::vector<TateMotive>> table(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        const unsigned dmax = std::min(m, d);
        table[m].resize(dmax + 1);
        for (unsigned e = 0; e <= dmax; ++e) {
            if (e == 0 || e == m)
                table[m][e] = TateMotive::unit();
            else
                table[m][e] = table[m - 1][e - 1] + table[m - 1][e].twisted_by(e);
        }
    }
    return table[n][d];
}

unsigned parse_unsigned(std::string_view tok, const std::string& what) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw DomainError("cannot parse " + what + " from '" + std::string(tok) + "'");
    return value;
}

std::vector<unsigned> parse_comma_list(std::string_view tok, const std::string& what) {
    std::vector<unsigned> out;
    std::size_t pos = 0;
    while (pos < tok.size()) {
        std::size_t comma = tok.find(',', pos);
        if (comma == std::string_view::npos) comma = tok.size();
        out.push_back(parse_unsigned(tok.substr(pos, comma - pos), what));
        pos = comma + 1;
    }
    return out;
}

std::vector<std::string_view> tokenize(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos >= text.size()) break;
        std::size_t end = text.find(' ', pos);
        if (end == std::string_view::npos) end = text.size();
        tokens.push_back(text.substr(pos, end - pos));
        pos = end;
    }
    return tokens;
}

}  // namespace

void validate_fibre(const FibreSpec& f) {
    std::visit(
        [](const auto& spec) {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, Grassmannian>) {
                if (spec.d > spec.n)
                    throw DomainError("Grassmannian Gr(" + std::to_string(spec.d) + "," +
                                      std::to_string(spec.n) + ") needs d <= n");
            } else if constexpr (std::is_same_v<T, Homogeneous>) {
                auto rs = RootSystem::build(spec.type_letter, spec.rank);
                validate_parabolic(rs, ParabolicSpec{spec.levi});
            } else if constexpr (std::is_same_v<T, ExplicitCells>) {
                if (spec.cells.empty()) throw DomainError("explicit cell list cannot be empty");
            }
        },
        f);
}

TateMotive fibre_motive(const FibreSpec& f, std::uint64_t max_orbit) {
    validate_fibre(f);
    return std::visit(
        [&](const auto& spec) -> TateMotive {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, ProjectiveSpace>) {
                std::map<unsigned, Integer> mult;
                for (unsigned i = 0; i <= spec.n; ++i) mult[i] = 1;
                return TateMotive(std::move(mult));
            } else if constexpr (std::is_same_v<T, Grassmannian>) {
                if (is_point(spec)) return TateMotive::unit();
                return grassmannian_motive(spec.d, spec.n);
            } else if constexpr (std::is_same_v<T, Homogeneous>) {
                auto rs = RootSystem::build(spec.type_letter, spec.rank);
                return gp_motive(rs, ParabolicSpec{spec.levi}, max_orbit);
            } else {
                std::map<unsigned, Integer> mult;
                for (unsigned c : spec.cells) mult[c] += 1;
                return TateMotive(std::move(mult));
            }
        },
        f);
}

unsigned fibre_dimension(const FibreSpec& f) {
    validate_fibre(f);
    return std::visit(
        [](const auto& spec) -> unsigned {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, ProjectiveSpace>) {
                return spec.n;
            } else if constexpr (std::is_same_v<T, Grassmannian>) {
                return spec.d * (spec.n - spec.d);
            } else if constexpr (std::is_same_v<T, Homogeneous>) {
                auto rs = RootSystem::build(spec.type_letter, spec.rank);
                return gp_dimension(rs, ParabolicSpec{spec.levi});
            } else {
                return *std::max_element(spec.cells.begin(), spec.cells.end());
            }
        },
        f);
}

FibreSpec parse_fibre(std::string_view text) {
    auto tokens = tokenize(text);
    if (tokens.empty()) throw DomainError("empty fibre description");
    const std::string_view kind = tokens[0];

    FibreSpec f;
    if (kind == "P") {
        if (tokens.size() != 2) throw DomainError("expected 'P n'");
        f = ProjectiveSpace{parse_unsigned(tokens[1], "projective space dimension")};
    } else if (kind == "Gr") {
        if (tokens.size() != 3) throw DomainError("expected 'Gr d n'");
        f = Grassmannian{parse_unsigned(tokens[1], "Grassmannian d"),
                         parse_unsigned(tokens[2], "Grassmannian n")};
    } else if (kind == "GP") {
        if (tokens.size() != 3 && tokens.size() != 4)
            throw DomainError("expected 'GP <letter> <rank> [levi=i,j,...]'");
        if (tokens[1].size() != 1) throw DomainError("root system type must be a single letter");
        Homogeneous h;
        h.type_letter = tokens[1][0];
        h.rank = parse_unsigned(tokens[2], "root system rank");
        if (tokens.size() == 4) {
            std::string_view levi = tokens[3];
            if (!levi.starts_with("levi="))
                throw DomainError("expected levi=... , got '" + std::string(levi) + "'");
            levi.remove_prefix(5);
            if (!levi.empty())
                for (unsigned i : parse_comma_list(levi, "Levi simple-root index")) h.levi.insert(i);
        }
        f = std::move(h);
    } else if (kind == "cells") {
        if (tokens.size() != 2) throw DomainError("expected 'cells d1,d2,...'");
        f = ExplicitCells{parse_comma_list(tokens[1], "cell dimension")};
    } else {
        throw DomainError("unknown fibre kind '" + std::string(kind) +
                          "'; expected P, Gr, GP or cells");
    }
    validate_fibre(f);
    return f;
}

std::string fibre_to_string(const FibreSpec& f) {
    std::ostringstream os;
    std::visit(
        [&](const auto& spec) {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, ProjectiveSpace>) {
                os << "P " << spec.n;
            } else if constexpr (std::is_same_v<T, Grassmannian>) {
                os << "Gr " << spec.d << ' ' << spec.n;
            } else if constexpr (std::is_same_v<T, Homogeneous>) {
                os << "GP " << spec.type_letter << ' ' << spec.rank;
                if (!spec.levi.empty()) {
                    os << " levi=";
                    bool first = true;
                    for (unsigned i : spec.levi) {
                        if (!first) os << ',';
                        first = false;
                        os << i;
                    }
                }
            } else {
                os << "cells ";
                bool first = true;
                for (unsigned c : spec.cells) {
                    if (!first) os << ',';
                    first = false;
                    os << c;
                }
            }
        },
        f);
    return os.str();
}

}  // namespace motcalc
