#pragma once

#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "motcalc/coset_enum.hpp"
#include "motcalc/tate_motive.hpp"

namespace motcalc {

// Declarative fibre descriptions, one per fibre class a tower may use.
// Surface syntax (one fibre per string):
//   "P n"                          projective space P^n
//   "Gr d n"                       Grassmannian of d-planes in n-space
//   "GP <letter> <rank> levi=..."  homogeneous space G/P, Bourbaki numbering
//   "cells d1,d2,..."              explicit cellular variety by affine cell dims

struct ProjectiveSpace {
    unsigned n = 1;
    bool operator==(const ProjectiveSpace&) const = default;
};

struct Grassmannian {
    unsigned d = 1;
    unsigned n = 2;
    bool operator==(const Grassmannian&) const = default;
};

struct Homogeneous {
    char type_letter = 'A';
    unsigned rank = 1;
    std::set<unsigned> levi;  // 1-based; empty = Borel
    bool operator==(const Homogeneous&) const = default;
};

struct ExplicitCells {
    std::vector<unsigned> cells;  // affine cell dimensions, order preserved
    bool operator==(const ExplicitCells&) const = default;
};

using FibreSpec = std::variant<ProjectiveSpace, Grassmannian, Homogeneous, ExplicitCells>;

// Rejects Grassmannians with d > n, empty cell lists, bad root data.
// Gr(0,n) and Gr(n,n) are accepted and normalize to a point.
void validate_fibre(const FibreSpec& f);

TateMotive fibre_motive(const FibreSpec& f, std::uint64_t max_orbit = kDefaultMaxOrbit);

// n for P^n, d(n-d) for Gr(d,n), dim G/P for homogeneous fibres, the largest
// cell dimension for explicit cell lists.
unsigned fibre_dimension(const FibreSpec& f);

FibreSpec parse_fibre(std::string_view text);
std::string fibre_to_string(const FibreSpec& f);

}  // namespace motcalc
