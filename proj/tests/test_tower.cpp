#include <doctest.h>

#include "motcalc/ck_assembly.hpp"
#include "motcalc/errors.hpp"
#include "motcalc/rank_table.hpp"
#include "motcalc/tower.hpp"

using namespace motcalc;

namespace {

TateMotive motive(std::map<unsigned, Integer> m) { return TateMotive(std::move(m)); }

std::vector<Integer> ranks(std::vector<long> values) {
    std::vector<Integer> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

}  // namespace

TEST_CASE("base validation and Chow ranks") {
    CHECK(base_chow_ranks(PointBase{}) == ranks({1}));
    CHECK(base_chow_ranks(TateBase{motive({{0, 1}, {2, 3}})}) == ranks({1, 0, 3}));
    CHECK(base_chow_ranks(FreeChowBase{ranks({1, 2, 1}), 2}) == ranks({1, 2, 1}));
    CHECK_THROWS_AS((void)base_chow_ranks(FreeChowBase{ranks({1, 2}), 2}), DomainError);
    CHECK_THROWS_AS((void)base_chow_ranks(FreeChowBase{ranks({1, -1, 1}), 2}), DomainError);
}

TEST_CASE("tower motive tensors base and fibres") {
    TowerSpec square{PointBase{}, {ProjectiveSpace{1}, ProjectiveSpace{1}}};
    CHECK(tower_motive(square) == motive({{0, 1}, {1, 2}, {2, 1}}));

    TowerSpec cube{PointBase{}, {ProjectiveSpace{1}, ProjectiveSpace{1}, ProjectiveSpace{1}}};
    CHECK(tower_motive(cube) == motive({{0, 1}, {1, 3}, {2, 3}, {3, 1}}));

    TowerSpec bare{PointBase{}, {}};
    CHECK(tower_motive(bare) == TateMotive::unit());

    TowerSpec twisted{TateBase{motive({{0, 1}, {2, 3}})}, {ProjectiveSpace{1}}};
    CHECK(tower_motive(twisted) == motive({{0, 1}, {1, 1}, {2, 3}, {3, 3}}));
}

TEST_CASE("a free-Chow base has ranks but no motive") {
    TowerSpec t{FreeChowBase{ranks({1, 2, 1}), 2}, {ProjectiveSpace{1}}};
    CHECK_THROWS_WITH_AS((void)tower_motive(t),
                         doctest::Contains("tower_chow_ranks"), DomainError);
    CHECK(tower_chow_ranks(t) == ranks({1, 3, 3, 1}));
}

TEST_CASE("tower Chow ranks convolve") {
    TowerSpec t{PointBase{}, {Grassmannian{2, 4}}};
    CHECK(tower_chow_ranks(t) == ranks({1, 1, 2, 1, 1}));

    TowerSpec plane{PointBase{}, {ProjectiveSpace{2}}};
    CHECK(tower_chow_ranks(plane) == ranks({1, 1, 1}));

    TowerSpec none{PointBase{}, {}};
    CHECK(tower_chow_ranks(none) == ranks({1}));

    TowerSpec both{TateBase{motive({{0, 1}, {1, 1}})}, {ProjectiveSpace{1}}};
    CHECK(tower_chow_ranks(both) == ranks({1, 2, 1}));

    TowerSpec empty_fibres{FreeChowBase{ranks({2, 0, 5}), 2}, {}};
    CHECK(tower_chow_ranks(empty_fibres) == ranks({2, 0, 5}));

    TowerSpec zero_base{TateBase{TateMotive()}, {ProjectiveSpace{3}}};
    CHECK(tower_chow_ranks(zero_base).empty());
    CHECK(tower_motive(zero_base).is_zero());
}

TEST_CASE("rank table basics") {
    RankTable t;
    CHECK(t.empty());
    CHECK(t.rank(0, 0) == 0);
    t.add(1, 0, 2);
    t.add(0, 1, 1);
    t.add(1, 0, 3);
    CHECK(t.rank(1, 0) == 5);
    CHECK(t.size() == 2);
    CHECK_THROWS_AS(t.add(0, 0, -1), DomainError);

    // Entries iterate row-major: q ascending, then p.
    RankTable ordered;
    ordered.add(2, 1, 1);
    ordered.add(0, 0, 1);
    ordered.add(1, 1, 1);
    ordered.add(3, 0, 1);
    std::vector<std::pair<unsigned, unsigned>> seen;
    for (const auto& [qp, r] : ordered.entries()) seen.push_back({qp.second, qp.first});
    CHECK(seen == std::vector<std::pair<unsigned, unsigned>>{{0, 0}, {3, 0}, {1, 1}, {2, 1}});
    CHECK(ordered.to_string() ==
          "p=0 q=0 rank=1\np=3 q=0 rank=1\np=1 q=1 rank=1\np=2 q=1 rank=1");

    std::map<RankTable::Key, Integer> negative{{{0, 0}, Integer(-2)}};
    CHECK_THROWS_AS(RankTable(std::move(negative)), DomainError);
    std::map<RankTable::Key, Integer> zeros{{{0, 0}, Integer(0)}};
    CHECK(RankTable(std::move(zeros)).empty());
}

TEST_CASE("higher Chow convolution shifts p at fixed q") {
    RankTable point;
    point.add(0, 0, 1);
    RankTable out = higher_chow_table(point, {ProjectiveSpace{1}});
    CHECK(out.rank(0, 0) == 1);
    CHECK(out.rank(1, 0) == 1);
    CHECK(out.size() == 2);

    RankTable shifted;
    shifted.add(1, 1, 1);
    out = higher_chow_table(shifted, {ProjectiveSpace{1}});
    CHECK(out.rank(1, 1) == 1);
    CHECK(out.rank(2, 1) == 1);
    CHECK(out.size() == 2);

    RankTable line;
    line.add(0, 0, 1);
    line.add(1, 0, 1);
    out = higher_chow_table(line, {ProjectiveSpace{1}});
    CHECK(out.rank(0, 0) == 1);
    CHECK(out.rank(1, 0) == 2);
    CHECK(out.rank(2, 0) == 1);

    // Fibres apply left to right; the result matches the tower convolution.
    RankTable base;
    base.add(0, 0, 1);
    const std::vector<FibreSpec> fibres = {ProjectiveSpace{2}, Grassmannian{1, 3}};
    const RankTable table = higher_chow_table(base, fibres);
    const std::vector<Integer> vec = tower_chow_ranks(TowerSpec{PointBase{}, fibres});
    for (unsigned p = 0; p < vec.size(); ++p) CHECK(table.rank(p, 0) == vec[p]);
    CHECK(higher_chow_table(base, {}) == base);
}

TEST_CASE("ck_assemble tensors labeled components with the fibre") {
    const std::vector<CKComponent> start = {{"h0", 0, ranks({1})}};
    const std::vector<CKComponent> out = ck_assemble(start, ProjectiveSpace{1});
    REQUIRE(out.size() == 2);
    CHECK(out[0].label == "h0⊗L^0");
    CHECK(out[0].weight == 0);
    CHECK(out[0].chow_ranks == ranks({1}));
    CHECK(out[1].label == "h0⊗L^1");
    CHECK(out[1].weight == 2);
    CHECK(out[1].chow_ranks == ranks({0, 1}));

    CHECK(ck_assemble({}, Grassmannian{2, 4}).empty());
}

TEST_CASE("ck_assemble splits multiplicities into copies") {
    // Point components tensored with Gr(2,4): one copy per Schubert cell.
    const std::vector<CKComponent> point = {{"1", 0, ranks({1})}};
    const std::vector<CKComponent> out = ck_assemble(point, Grassmannian{2, 4});
    REQUIRE(out.size() == 6);
    std::vector<long long> weights;
    for (const CKComponent& c : out) weights.push_back(c.weight);
    CHECK(weights == std::vector<long long>{0, 2, 4, 4, 6, 8});
    CHECK(out[2].label == out[3].label);  // the two middle cells share a twist
    CHECK(out[2].chow_ranks == ranks({0, 0, 1}));
}

TEST_CASE("ck_assemble conservation and ordering") {
    const std::vector<CKComponent> comps = {{"b", 5, ranks({2, 1})},
                                            {"a", 5, ranks({1})},
                                            {"c", 0, ranks({0, 3})}};
    const FibreSpec fibre = ExplicitCells{{0, 1, 1, 3}};
    const std::vector<CKComponent> out = ck_assemble(comps, fibre);
    const Integer fibre_rank = fibre_motive(fibre).rank();
    CHECK(ck_total_rank(out) == ck_total_rank(comps) * fibre_rank);
    CHECK(Integer(static_cast<unsigned long>(out.size())) ==
          Integer(static_cast<unsigned long>(comps.size())) * fibre_rank);
    for (std::size_t i = 1; i < out.size(); ++i) {
        const bool ordered = out[i - 1].weight < out[i].weight ||
                             (out[i - 1].weight == out[i].weight &&
                              out[i - 1].label <= out[i].label);
        CHECK(ordered);
    }
    CHECK_THROWS_AS((void)ck_assemble({{"x", 0, ranks({-1})}}, ProjectiveSpace{1}), DomainError);
}
