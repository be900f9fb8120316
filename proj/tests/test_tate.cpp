#include <doctest.h>

#include "motcalc/errors.hpp"
#include "motcalc/tate_motive.hpp"

using motcalc::DomainError;
using motcalc::Integer;
using motcalc::TateMotive;

namespace {

TateMotive motive(std::map<unsigned, Integer> m) { return TateMotive(std::move(m)); }

}  // namespace

TEST_CASE("zero motive") {
    TateMotive zero;
    CHECK(zero.is_zero());
    CHECK(zero.rank() == 0);
    CHECK(zero.to_string() == "0");
    CHECK(zero.multiplicity_line().empty());
    CHECK_THROWS_AS((void)zero.top_twist(), DomainError);
}

TEST_CASE("unit and lefschetz powers") {
    CHECK(TateMotive::unit().rank() == 1);
    CHECK(TateMotive::unit().to_string() == "1");
    CHECK(TateMotive::unit().top_twist() == 0);
    CHECK(TateMotive::lefschetz_power(3) == motive({{3, 1}}));
    CHECK(TateMotive::lefschetz_power(0) == TateMotive::unit());
}

TEST_CASE("constructor normalizes") {
    CHECK(motive({{1, 0}, {2, 3}}) == motive({{2, 3}}));
    CHECK(motive({{1, 0}}).is_zero());
    CHECK_THROWS_AS(motive({{1, -2}}), DomainError);
}

TEST_CASE("direct sum is pointwise") {
    const TateMotive a = motive({{0, 1}, {2, 1}});
    const TateMotive b = motive({{2, 2}, {5, 1}});
    CHECK(a + b == motive({{0, 1}, {2, 3}, {5, 1}}));
    CHECK(a + TateMotive() == a);
    CHECK(a + b == b + a);
}

TEST_CASE("tensor is convolution") {
    const TateMotive p2 = motive({{0, 1}, {1, 2}, {2, 1}});  // coefficients 1,2,1
    const TateMotive p1 = motive({{0, 1}, {1, 1}});
    CHECK(p2 * p1 == motive({{0, 1}, {1, 3}, {2, 3}, {3, 1}}));
    CHECK(p1 * p2 == p2 * p1);
    CHECK((p1 * p1) * p2 == p1 * (p1 * p2));
    CHECK(p1 * TateMotive::unit() == p1);
    CHECK((p1 * TateMotive()).is_zero());
}

TEST_CASE("twist shifts all indices") {
    const TateMotive m = motive({{0, 1}, {1, 2}});
    CHECK(m.twisted_by(3) == motive({{3, 1}, {4, 2}}));
    CHECK(m.twisted_by(0) == m);
    CHECK(m.twisted_by(2) == m * TateMotive::lefschetz_power(2));
}

TEST_CASE("rank adds multiplicities exactly") {
    CHECK(motive({{0, 1}, {4, 5}}).rank() == 6);
    const Integer big("1267650600228229401496703205376");  // 2^100
    CHECK(motive({{0, big}, {1, big}}).rank() == big * 2);
}

TEST_CASE("self-duality is a palindrome test") {
    CHECK(motive({{0, 1}, {1, 1}, {2, 1}}).is_self_dual(2));
    CHECK(motive({{0, 1}, {1, 3}, {2, 3}, {3, 1}}).is_self_dual(3));
    CHECK_FALSE(motive({{0, 1}, {1, 2}}).is_self_dual(1));
    CHECK(TateMotive::unit().is_self_dual(0));
    CHECK_FALSE(motive({{0, 1}, {1, 1}}).is_self_dual(2));
}

TEST_CASE("rendering") {
    const TateMotive m = motive({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}});
    CHECK(m.to_string() == "1 + L + 2·L^2 + L^3 + L^4");
    CHECK(m.multiplicity_line() == "0:1 1:1 2:2 3:1 4:1");
    CHECK(motive({{1, 1}}).to_string() == "L");
    CHECK(motive({{0, 3}}).to_string() == "3");
    CHECK(motive({{2, 5}}).to_string() == "5·L^2");
}

TEST_CASE("accessors") {
    const TateMotive m = motive({{0, 1}, {3, 4}});
    CHECK(m.multiplicity(0) == 1);
    CHECK(m.multiplicity(1) == 0);
    CHECK(m.multiplicity(3) == 4);
    CHECK(m.top_twist() == 3);
    CHECK(m.multiplicities().size() == 2);
}

TEST_CASE("chow_rank reads the graded piece") {
    const TateMotive gr24 = motive({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}});
    CHECK(gr24.chow_rank(2) == 2);
    CHECK(TateMotive::unit().chow_rank(1) == 0);
    CHECK(motive({{0, 1}, {1, 1}}).chow_rank(1) == 1);
    // Twisting shifts the graded pieces.
    const TateMotive m = motive({{0, 2}, {1, 5}});
    for (unsigned p = 3; p <= 4; ++p) CHECK(m.twisted_by(3).chow_rank(p) == m.chow_rank(p - 3));
}

TEST_CASE("algebraic identities") {
    const TateMotive a = motive({{0, 1}, {1, 2}});
    const TateMotive b = motive({{1, 1}, {3, 4}});
    const TateMotive c = motive({{0, 2}, {2, 1}});
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b).rank() == a.rank() + b.rank());
    CHECK((a * b).rank() == a.rank() * b.rank());
    // Self-dual tensor self-dual is self-dual at the summed dimension.
    const TateMotive sd1 = motive({{0, 1}, {1, 1}});                  // dim 1
    const TateMotive sd2 = motive({{0, 1}, {1, 2}, {2, 1}});          // dim 2
    CHECK(sd1.is_self_dual(1));
    CHECK(sd2.is_self_dual(2));
    CHECK((sd1 * sd2).is_self_dual(3));
}
