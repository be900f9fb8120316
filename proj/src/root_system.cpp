#include "motcalc/root_system.hpp"

#include <algorithm>
#include <string>

#include "motcalc/errors.hpp"

namespace motcalc {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

unsigned classical_positive_roots(char type, unsigned n) {
    switch (type) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
        case 'E': return n == 6 ? 36u : n == 7 ? 63u : 120u;
        case 'F': return 24;
        case 'G': return 6;
    }
    throw DomainError("unknown type letter");
}

Integer classical_weyl_order(char type, unsigned n) {
    switch (type) {
        case 'A': return factorial(n + 1);
        case 'B':
        case 'C': return integer_pow(2, n) * factorial(n);
        case 'D': return integer_pow(2, n - 1) * factorial(n);
        case 'E': return n == 6 ? Integer(51840) : n == 7 ? Integer(2903040) : Integer(696729600);
        case 'F': return 1152;
        case 'G': return 12;
    }
    throw DomainError("unknown type letter");
}

}  // namespace

RootSystem RootSystem::build(char type_letter, unsigned rank) {
    auto reject = [&] {
        throw DomainError("invalid root system " + std::string(1, type_letter) +
                          std::to_string(rank) +
                          "; valid finite types are A_n (n>=1), B_n (n>=2), C_n (n>=3), "
                          "D_n (n>=4), E_6, E_7, E_8, F_4, G_2");
    };
    switch (type_letter) {
        case 'A': if (rank < 1) reject(); break;
        case 'B': if (rank < 2) reject(); break;
        case 'C': if (rank < 3) reject(); break;
        case 'D': if (rank < 4) reject(); break;
        case 'E': if (rank < 6 || rank > 8) reject(); break;
        case 'F': if (rank != 4) reject(); break;
        case 'G': if (rank != 2) reject(); break;
        default: reject();
    }
    if (rank > 1024)
        throw DomainError("rank " + std::to_string(rank) + " exceeds the supported maximum 1024");

    RootSystem rs;
    rs.type_ = type_letter;
    rs.rank_ = rank;
    rs.cartan_.assign(static_cast<std::size_t>(rank) * rank, 0);
    auto at = [&](unsigned i, unsigned j) -> int& { return rs.cartan_[i * rank + j]; };
    for (unsigned i = 0; i < rank; ++i) at(i, i) = 2;
    auto bond = [&](unsigned i, unsigned j) { at(i, j) = -1; at(j, i) = -1; };  // 0-indexed

    switch (type_letter) {
        case 'A':
            for (unsigned i = 0; i + 1 < rank; ++i) bond(i, i + 1);
            break;
        case 'B':  // alpha_n short
            for (unsigned i = 0; i + 1 < rank; ++i) bond(i, i + 1);
            at(rank - 2, rank - 1) = -2;
            break;
        case 'C':  // alpha_n long
            for (unsigned i = 0; i + 1 < rank; ++i) bond(i, i + 1);
            at(rank - 1, rank - 2) = -2;
            break;
        case 'D':
            for (unsigned i = 0; i + 2 < rank; ++i) bond(i, i + 1);
            bond(rank - 3, rank - 1);
            break;
        case 'E':
            bond(0, 2);
            for (unsigned i = 2; i + 1 < rank; ++i) bond(i, i + 1);
            bond(1, 3);
            break;
        case 'F':
            bond(0, 1); bond(1, 2); bond(2, 3);
            at(1, 2) = -2;
            break;
        case 'G':
            bond(0, 1);
            at(1, 0) = -3;
            break;
    }
    rs.num_positive_roots_ = classical_positive_roots(type_letter, rank);
    return rs;
}

void validate_parabolic(const RootSystem& rs, const ParabolicSpec& p) {
    for (unsigned i : p.levi)
        require(i >= 1 && i <= rs.rank(),
                "Levi simple-root index " + std::to_string(i) + " is outside 1.." +
                    std::to_string(rs.rank()));
}

DiagramInfo classify_cartan(const std::vector<int>& cartan, unsigned size) {
    auto at = [&](unsigned i, unsigned j) { return cartan[i * size + j]; };

    DiagramInfo info;
    std::vector<char> seen(size, 0);
    for (unsigned start = 0; start < size; ++start) {
        if (seen[start]) continue;
        // collect the connected component of `start`
        std::vector<unsigned> comp{start};
        seen[start] = 1;
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (unsigned j = 0; j < size; ++j)
                if (!seen[j] && at(comp[k], j) != 0) {
                    seen[j] = 1;
                    comp.push_back(j);
                }

        const unsigned n = static_cast<unsigned>(comp.size());
        std::vector<unsigned> degree(n, 0);
        int max_bond = 1;
        unsigned double_a = 0, double_b = 0;  // endpoints of a double edge, if any
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = a + 1; b < n; ++b) {
                int m = at(comp[a], comp[b]) * at(comp[b], comp[a]);
                if (m == 0) continue;
                ++degree[a];
                ++degree[b];
                if (m > max_bond) max_bond = m;
                if (m == 2) { double_a = a; double_b = b; }
            }

        char type;
        if (n == 1) {
            type = 'A';
        } else if (max_bond == 3) {
            type = 'G';
        } else if (max_bond == 2) {
            type = (n == 4 && degree[double_a] == 2 && degree[double_b] == 2) ? 'F' : 'B';
        } else {
            unsigned branch = n;
            for (unsigned a = 0; a < n; ++a)
                if (degree[a] == 3) branch = a;
            if (branch == n) {
                type = 'A';
            } else {
                // arm lengths: walk from each leaf to the branch node
                std::vector<unsigned> arms;
                for (unsigned a = 0; a < n; ++a) {
                    if (degree[a] != 1) continue;
                    unsigned len = 0, cur = a, prev = n;
                    while (cur != branch) {
                        ++len;
                        unsigned next = n;
                        for (unsigned b = 0; b < n; ++b)
                            if (b != prev && b != cur && at(comp[cur], comp[b]) != 0) next = b;
                        prev = cur;
                        cur = next;
                        if (cur == n) throw InternalError("disconnected arm in Dynkin diagram");
                    }
                    arms.push_back(len);
                }
                std::sort(arms.begin(), arms.end());
                if (arms.size() != 3) throw InternalError("unexpected branch shape in Dynkin diagram");
                if (arms[0] == 1 && arms[1] == 1)
                    type = 'D';
                else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
                    type = 'E';
                else
                    throw InternalError("Dynkin diagram is not of finite type");
            }
        }

        info.weyl_order *= classical_weyl_order(type, n);
        info.num_positive_roots += classical_positive_roots(type, n);
    }
    return info;
}

std::vector<int> levi_cartan(const RootSystem& rs, const ParabolicSpec& p) {
    validate_parabolic(rs, p);
    std::vector<unsigned> idx(p.levi.begin(), p.levi.end());
    const unsigned k = static_cast<unsigned>(idx.size());
    std::vector<int> sub(static_cast<std::size_t>(k) * k, 0);
    for (unsigned a = 0; a < k; ++a)
        for (unsigned b = 0; b < k; ++b)
            sub[a * k + b] = rs.cartan(idx[a] - 1, idx[b] - 1);
    return sub;
}

Integer closed_form_weyl_order(const RootSystem& rs) {
    return classical_weyl_order(rs.type_letter(), rs.rank());
}

DiagramInfo levi_diagram_info(const RootSystem& rs, const ParabolicSpec& p) {
    if (p.levi.empty()) return DiagramInfo{};
    return classify_cartan(levi_cartan(rs, p), static_cast<unsigned>(p.levi.size()));
}

unsigned gp_dimension(const RootSystem& rs, const ParabolicSpec& p) {
    return rs.num_positive_roots() - levi_diagram_info(rs, p).num_positive_roots;
}

Integer coset_count(const RootSystem& rs, const ParabolicSpec& p) {
    Integer order = closed_form_weyl_order(rs);
    Integer levi = levi_diagram_info(rs, p).weyl_order;
    if (!mpz_divisible_p(order.get_mpz_t(), levi.get_mpz_t()))
        throw InternalError("Levi order does not divide the Weyl order");
    return order / levi;
}

}  // namespace motcalc
