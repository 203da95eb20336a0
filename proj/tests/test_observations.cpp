#include "doctest.h"

#include "moonshine/observations.hpp"
#include "oracles.hpp"

using namespace moonshine;

TEST_CASE("checkCongruence") {
    const auto yhh = checkCongruence(SeriesName::Delta, 1, 24, 70);
    CHECK(yhh.residue == 42);
    CHECK(yhh.lo == 1);
    CHECK(yhh.hi == 24);
    CHECK(yhh.modulus == 70);

    CHECK(checkCongruence("j", 1, 24, 70).residue == 42);
    CHECK(checkCongruence(SeriesName::Delta, 1, 1, 5).residue == 1);

    SUBCASE("exact sums match the product-expansion oracle") {
        const auto taus = oracle::tauByProduct(24);
        ExactInt tauSum = 0;
        for (const auto& t : taus) tauSum += t * t;
        CHECK(yhh.sumOfSquares == tauSum);
        CHECK(yhh.sumOfSquares == ExactInt("1205975842063062"));

        const auto js = oracle::jByLongDivision(26);
        ExactInt jSum = 0;
        for (int m = 1; m <= 24; ++m) jSum += js[m + 1] * js[m + 1];
        CHECK(checkCongruence(SeriesName::J, 1, 24, 70).sumOfSquares == jSum);
        CHECK(jSum == ExactInt("1354122807420479577276982518165534609358397061559942"));
    }

    SUBCASE("split ranges combine") {
        for (auto name : {SeriesName::J, SeriesName::Delta}) {
            const auto lo = checkCongruence(name, 1, 12, 70);
            const auto hi = checkCongruence(name, 13, 24, 70);
            const auto all = checkCongruence(name, 1, 24, 70);
            CHECK(lo.sumOfSquares + hi.sumOfSquares == all.sumOfSquares);
            CHECK((lo.residue + hi.residue) % 70 == all.residue);
        }
    }

    SUBCASE("residue stays in [0, modulus)") {
        const auto r = checkCongruence(SeriesName::J, -1, 3, 1);
        CHECK(r.residue == 0);
        CHECK(checkCongruence(SeriesName::J, -1, -1, 7).residue == 1);
    }

    SUBCASE("errors") {
        CHECK_THROWS_AS(checkCongruence("sigma", 1, 2, 3), std::invalid_argument);
        CHECK_THROWS_AS(checkCongruence(SeriesName::E4, 1, 2, 3), std::invalid_argument);
        CHECK_THROWS_AS(checkCongruence(SeriesName::J, -2, 2, 3), std::domain_error);
        CHECK_THROWS_AS(checkCongruence(SeriesName::Delta, 0, 2, 3), std::domain_error);
        CHECK_THROWS_AS(checkCongruence(SeriesName::Delta, 3, 2, 3), std::invalid_argument);
        CHECK_THROWS_AS(checkCongruence(SeriesName::Delta, 1, 2, 0), std::invalid_argument);
    }
}

TEST_CASE("observationReport") {
    const auto [jm, yhh] = observationReport();
    CHECK((jm.sequence == SeriesName::J));
    CHECK((yhh.sequence == SeriesName::Delta));
    CHECK(jm.residue == 42);
    CHECK(yhh.residue == 42);
    CHECK(observationReport().second.sumOfSquares == yhh.sumOfSquares);

    // A different range just reports what it computes.
    const auto shorter = checkCongruence(SeriesName::J, 1, 23, 70);
    CHECK(shorter.residue < 70);
}

TEST_CASE("cannonball") {
    using S = std::vector<CannonballSolution>;
    CHECK(cannonball(10) == S{{1, 1}});
    CHECK(cannonball(100) == S{{1, 1}, {24, 70}});
    CHECK(cannonball(100).front().trivial());
    CHECK_FALSE(cannonball(100).back().trivial());
    CHECK_THROWS_AS(cannonball(0), std::invalid_argument);

    const auto big = cannonball(1000000);
    CHECK(big == S{{1, 1}, {24, 70}});
    for (const auto& s : big) {
        ExactInt sum = 0;
        for (std::uint64_t i = 1; i <= s.n; ++i) sum += ExactInt(i) * i;
        CHECK(sum == s.m * s.m);
    }

    const auto small = cannonball(10000);
    REQUIRE(small.size() <= big.size());
    CHECK(std::equal(small.begin(), small.end(), big.begin()));

    CHECK(cannonball(1000000, 4) == big);
    CHECK(cannonball(7, 16) == S{{1, 1}});
}

TEST_CASE("moonshine and Weyl identities") {
    const auto m = moonshineIdentity();
    CHECK(m.c1 == 196884);
    CHECK(m.monsterDimension == 196883);
    CHECK(m.holds);

    const auto w = weylNormIdentity();
    CHECK(w.sumOfSquares == 24 * 25 * 49 / 6);
    CHECK(w.sumOfSquares == 4900);
    CHECK(w.timelikeSquared == 4900);
    CHECK(w.holds);
}
