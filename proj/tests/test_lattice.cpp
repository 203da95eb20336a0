#include "doctest.h"

#include "moonshine/lattice.hpp"
#include "moonshine/lorentz.hpp"
#include "moonshine/modforms.hpp"
#include "oracles.hpp"

using namespace moonshine;

TEST_CASE("lll") {
    SUBCASE("identity is already reduced") {
        const GramMatrix id(IntMatrix::identity(5));
        const auto r = lll(id);
        CHECK(r.gram == id);
        CHECK(r.transform == IntMatrix::identity(5));
    }
    SUBCASE("1x1") {
        const auto r = lll(GramMatrix{{4}});
        CHECK(r.gram == GramMatrix{{4}});
        CHECK(r.transform == IntMatrix::identity(1));
    }
    SUBCASE("swap of a long first vector") {
        const auto r = lll(GramMatrix{{4, 0}, {0, 1}});
        CHECK(r.gram == GramMatrix{{1, 0}, {0, 4}});
    }
    SUBCASE("random 6x6 against a box search for the minimum") {
        std::mt19937_64 rng(606);
        for (int t = 0; t < 5; ++t) {
            const GramMatrix g = oracle::randomPositiveDefinite(rng, 6, 2);
            const auto r = lll(g);
            CHECK(r.gram.determinant() == g.determinant());
            CHECK(g.transformed(r.transform) == r.gram);
            ExactInt minDiag = g(0, 0);
            for (std::size_t i = 1; i < 6; ++i) minDiag = std::min(minDiag, ExactInt(g(i, i)));
            CHECK(r.gram(0, 0) <= minDiag);
            // no lattice vector in a small box beats the LLL bound 2^(n-1) * b1^2
            const auto counts = oracle::boxCounts(g, r.gram(0, 0).get_si(), 1);
            std::int64_t boxMin = 0;
            for (const auto& [norm, c] : counts)
                if (c > 0 && boxMin == 0) boxMin = norm;
            if (boxMin > 0) CHECK(r.gram(0, 0) <= 32 * boxMin);
        }
    }
    SUBCASE("invariants on random inputs") { CHECK(oracle::checkLllInvariants(4242, 150) == ""); }
    SUBCASE("other delta") {
        std::mt19937_64 rng(3);
        const GramMatrix g = oracle::randomPositiveDefinite(rng, 5);
        const auto r = lll(g, ExactRational(99, 100));
        const auto gs = gramSchmidt(r.gram);
        for (std::size_t i = 1; i < 5; ++i) {
            const ExactRational m = gs.mu[i][i - 1];
            CHECK(gs.pivots[i] >= (ExactRational(99, 100) - m * m) * gs.pivots[i - 1]);
        }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(lll(GramMatrix{{1, 2}, {2, 1}}), NotPositiveDefinite);
        CHECK_THROWS_AS(lll(GramMatrix{{0}}), NotPositiveDefinite);
        CHECK_THROWS_AS(lll(GramMatrix{{-2, 0}, {0, 1}}), NotPositiveDefinite);
        CHECK_THROWS_AS(lll(GramMatrix{{2}}, ExactRational(1, 4)), std::invalid_argument);
        CHECK_THROWS_AS(lll(GramMatrix{{2}}, ExactRational(1)), std::invalid_argument);
    }
}

TEST_CASE("shortVectors") {
    SUBCASE("Z^2") {
        const auto c = shortVectors(GramMatrix(IntMatrix::identity(2)), 1);
        CHECK(c.countsByNorm.at(1) == 4);
        CHECK(c.countsByNorm.size() == 1);
    }
    SUBCASE("A2 against the box") {
        const GramMatrix a2{{2, 1}, {1, 2}};
        const auto brute = oracle::boxCounts(a2, 2, 2);
        CHECK(brute.at(2) == 6);
        CHECK(shortVectors(a2, 2).countsByNorm == brute);
    }
    SUBCASE("E8 against 240 sigma_3") {
        const GramMatrix e8 = e8Gram();
        CHECK(e8.determinant() == 1);
        for (std::size_t i = 0; i < 8; ++i) CHECK(e8(i, i) == 2);
        const auto c = shortVectors(e8, 6);
        for (std::int64_t n = 1; n <= 3; ++n) CHECK(c.countsByNorm.at(2 * n) == 240 * sigma(3, n));
        CHECK(c.countsByNorm.at(2) == 240);
        CHECK(c.countsByNorm.at(4) == 2160);
        for (std::int64_t k : {1, 3, 5}) CHECK(c.countsByNorm.at(k) == 0);
        CHECK(shortVectors(e8, 6, 4).countsByNorm == c.countsByNorm);
    }
    SUBCASE("dimension <= 4 against the box") { CHECK(oracle::checkEnumerationAgainstBox(17, 60) == ""); }
    SUBCASE("basis change leaves counts alone") {
        std::mt19937_64 rng(11);
        for (int t = 0; t < 20; ++t) {
            const std::size_t n = 2 + t % 3;
            const GramMatrix g = oracle::randomPositiveDefinite(rng, n, 2);
            const GramMatrix h = g.transformed(oracle::randomUnimodular(rng, n));
            const auto a = shortVectors(g, 10), b = shortVectors(h, 10);
            CHECK(a.countsByNorm == b.countsByNorm);
            for (const auto& [norm, count] : a.countsByNorm) CHECK(mpz_even_p(count.get_mpz_t()));
        }
    }
    SUBCASE("parallel split gives identical counts") {
        std::mt19937_64 rng(5);
        const GramMatrix g = oracle::randomPositiveDefinite(rng, 6, 2);
        CHECK(shortVectors(g, 40, 3).countsByNorm == shortVectors(g, 40, 1).countsByNorm);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(shortVectors(GramMatrix{{1, 2}, {2, 1}}, 4), NotPositiveDefinite);
        CHECK_THROWS_AS(shortVectors(GramMatrix{{2}}, 0), std::invalid_argument);
    }
    SUBCASE("json") {
        const auto c = shortVectors(GramMatrix{{2, 1}, {1, 2}}, 2);
        const auto j = toJson(c);
        CHECK(j.at("maxNorm") == "2");
        CHECK(j.at("counts").at("2") == "6");
        const auto back = shortVectorCountFromJson(nlohmann::json::parse(j.dump()));
        CHECK(back.maxNorm == c.maxNorm);
        CHECK(back.countsByNorm == c.countsByNorm);
        CHECK(c.total() == 6);
    }
}

TEST_CASE("thetaCheckLeech") {
    const auto r = thetaCheckLeech(2);
    CHECK(r.e4CubedWeight == 1);
    CHECK(r.deltaWeight == -720);
    REQUIRE(r.comparisons.size() == 1);
    CHECK(r.comparisons[0].enumerated == 0);
    CHECK(r.comparisons[0].seriesCoefficient == 0);
    CHECK(r.allMatch);
    CHECK_THROWS_AS(thetaCheckLeech(3), std::invalid_argument);
    CHECK_THROWS_AS(thetaCheckLeech(8), std::invalid_argument);
}
