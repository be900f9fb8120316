#include <doctest.h>

#include "motcalc/errors.hpp"
#include "motcalc/oracles.hpp"
#include "motcalc/suites.hpp"

using namespace motcalc;
using namespace motcalc::verify;

namespace {

TateMotive motive(std::map<unsigned, Integer> m) { return TateMotive(std::move(m)); }

}  // namespace

TEST_CASE("partitions in a box") {
    CHECK(partitions_in_box(2, 2) == motive({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
    CHECK(partitions_in_box(0, 7) == TateMotive::unit());
    CHECK(partitions_in_box(1, 4) == motive({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}));
    CHECK(partitions_in_box(3, 2) == partitions_in_box(2, 3));
    for (unsigned d = 0; d <= 4; ++d)
        for (unsigned w = 0; d + w <= 8; ++w)
            CHECK(partitions_in_box(d, w) == gaussian_binomial(d + w, d));
}

TEST_CASE("gaussian binomials") {
    CHECK(gaussian_binomial(4, 2) == motive({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
    CHECK(gaussian_binomial(7, 0) == TateMotive::unit());
    CHECK(gaussian_binomial(7, 7) == TateMotive::unit());
    CHECK(gaussian_binomial(5, 1) ==
          motive({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}));
    CHECK(gaussian_binomial(6, 3) ==
          motive({{0, 1}, {1, 1}, {2, 2}, {3, 3}, {4, 3}, {5, 3}, {6, 3}, {7, 2}, {8, 1},
                  {9, 1}}));
    CHECK_THROWS_AS((void)gaussian_binomial(3, 4), DomainError);
    // Total rank is the ordinary binomial.
    CHECK(gaussian_binomial(8, 4).rank() == 70);
}

TEST_CASE("permutation inversion profiles") {
    CHECK(permutation_length_profile(1) == TateMotive::unit());
    CHECK(permutation_length_profile(3) == motive({{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
    CHECK(permutation_length_profile(4) ==
          motive({{0, 1}, {1, 3}, {2, 5}, {3, 6}, {4, 5}, {5, 3}, {6, 1}}));
    CHECK(permutation_length_profile(6).rank() == 720);
    CHECK_THROWS_AS((void)permutation_length_profile(0), DomainError);
    CHECK_THROWS_AS((void)permutation_length_profile(10), DomainError);
}

TEST_CASE("cell motives and Kunneth products") {
    CHECK(cell_motive({{0, 1, 1, 2}}) == motive({{0, 1}, {1, 2}, {2, 1}}));
    CHECK_THROWS_AS((void)cell_motive({{}}), DomainError);

    CHECK(kunneth_cells({{0, 1}}, {{0, 1}}) == motive({{0, 1}, {1, 2}, {2, 1}}));
    CHECK(kunneth_cells({{0}}, {{0, 2, 2}}) == cell_motive({{0, 2, 2}}));
    CHECK(kunneth_cells({{0, 1, 2}}, {{0, 1}}) ==
          motive({{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
    const CellModel a{{0, 3, 3, 5}};
    const CellModel b{{1, 1, 2}};
    CHECK(kunneth_cells(a, b) == cell_motive(a) * cell_motive(b));
}

TEST_CASE("all suites pass at a small bound") {
    for (const std::string& name : suite_names()) {
        SuiteOptions opts;
        opts.bound = 4;
        const SuiteReport report = run_suite(name, opts);
        INFO(report.to_text());
        CHECK(report.all_passed());
        CHECK(report.failure_count() == 0);
        CHECK(report.suite == name);
        CHECK(report.bound == 4);
        CHECK(report.seed == 1729);
        CHECK_FALSE(report.cases.empty());
    }
}

TEST_CASE("unknown suite and bad bounds are rejected") {
    CHECK_THROWS_AS((void)run_suite("bogus"), DomainError);
    SuiteOptions zero;
    zero.bound = 0;
    CHECK_THROWS_AS((void)run_suite("grassmann", zero), DomainError);
}

TEST_CASE("reports are deterministic and sorted") {
    SuiteOptions opts;
    opts.bound = 6;
    opts.seed = 42;
    const SuiteReport a = run_suite("kunneth", opts);
    const SuiteReport b = run_suite("kunneth", opts);
    CHECK(a.to_text() == b.to_text());
    CHECK(a.seed == 42);
    for (std::size_t i = 1; i < a.cases.size(); ++i) CHECK(a.cases[i - 1].id < a.cases[i].id);

    const SuiteReport tower_a = run_suite("tower", opts);
    const SuiteReport tower_b = run_suite("tower", opts);
    CHECK(tower_a.to_text() == tower_b.to_text());
}

TEST_CASE("report lines follow the documented shape") {
    SuiteOptions opts;
    opts.bound = 2;
    const SuiteReport report = run_suite("flags", opts);
    const std::string text = report.to_text();
    CHECK(text.find("flags flag-n1 PASS") != std::string::npos);
    CHECK(text.find("flags flag-n2 PASS") != std::string::npos);
}

TEST_CASE("over-cap cases are skipped, not failed") {
    SuiteOptions opts;
    opts.bound = 4;
    opts.max_orbit = 100;  // even A4's Weyl group is bigger
    const SuiteReport report = run_suite("weyl-orders", opts);
    CHECK(report.all_passed());
    bool saw_skip = false;
    for (const CaseResult& c : report.cases)
        if (c.detail.find("skipped") != std::string::npos) saw_skip = true;
    CHECK(saw_skip);
}

TEST_CASE("duality suite covers every parabolic up to the bound") {
    SuiteOptions opts;
    opts.bound = 3;
    const SuiteReport report = run_suite("duality", opts);
    // A1 A2 A3 B2 B3 C3 G2 contribute 2 + 4 + 8 + 4 + 8 + 8 + 4 subsets.
    CHECK(report.cases.size() == 38);
    CHECK(report.all_passed());
}
