#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motcalc/coset_enum.hpp"

namespace motcalc::verify {

struct SuiteOptions {
    unsigned bound = 6;
    std::uint64_t seed = 1729;  // embedded in the report for reproducibility
    std::uint64_t max_orbit = kDefaultMaxOrbit;
};

struct CaseResult {
    std::string id;
    bool passed = true;
    std::string detail;  // counterexample on failure, note on skip
};

struct SuiteReport {
    std::string suite;
    unsigned bound = 0;
    std::uint64_t seed = 0;
    std::vector<CaseResult> cases;  // sorted by case id

    bool all_passed() const;
    std::size_t failure_count() const;

    // One line per case: "<suite> <case-id> PASS|FAIL <detail>".
    std::string to_text() const;
};

// The six recognized suite names, in canonical order.
const std::vector<std::string>& suite_names();

// Runs one cross-check suite; throws DomainError on an unknown name.
//   grassmann    Gr(d,n) constructor vs. box partitions vs. Gaussian binomial
//                vs. type-A coset enumeration, n <= bound
//   duality      palindromicity/self-duality of every parabolic profile for
//                every type of rank <= bound (over-cap orbits are skipped)
//   flags        type-A Borel profile vs. permutation inversion counts
//   kunneth      `bound` random cell-model pairs, product cells vs. tensor
//   weyl-orders  enumerated |W| vs. closed form, all types of rank <= bound
//   tower        `bound` random towers: associativity + rank multiplicativity
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace motcalc::verify
