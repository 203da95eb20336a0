#include "doctest.h"

#include "moonshine/hnf.hpp"
#include "moonshine/matrix.hpp"
#include "oracles.hpp"

using namespace moonshine;

TEST_CASE("determinant agrees with the Leibniz expansion") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> e(-20, 20);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int t = 0; t < 10; ++t) {
            IntMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = e(rng);
            CHECK(determinant(m) == oracle::leibnizDeterminant(m));
        }
    }
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK(determinant(IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
}

TEST_CASE("inverseUnimodular") {
    std::mt19937_64 rng(7);
    const IntMatrix u = oracle::randomUnimodular(rng, 5, 30);
    const auto inv = inverseUnimodular(u);
    REQUIRE(inv.has_value());
    CHECK(u * *inv == IntMatrix::identity(5));
    CHECK_FALSE(inverseUnimodular(IntMatrix{{2, 0}, {0, 1}}).has_value());
}

TEST_CASE("Hermite normal form") {
    SUBCASE("identity") {
        const auto r = hermiteNormalForm(IntMatrix::identity(4));
        CHECK(r.h == IntMatrix::identity(4));
        CHECK(r.u == IntMatrix::identity(4));
        CHECK(r.rank == 4);
    }
    SUBCASE("2x2") {
        const IntMatrix m{{2, 0}, {1, 1}};
        const auto r = hermiteNormalForm(m);
        CHECK(r.u * m == r.h);
        const ExactInt du = oracle::leibnizDeterminant(r.u);
        CHECK((du == 1 || du == -1));
        CHECK(isHermiteNormalForm(r.h));
        CHECK(r.h == IntMatrix{{1, 1}, {0, 2}});
    }
    SUBCASE("random 5x5 preserves |det|") {
        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<long> e(-9, 9);
        for (int t = 0; t < 20; ++t) {
            IntMatrix m(5, 5);
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = 0; j < 5; ++j) m(i, j) = e(rng);
            const auto r = hermiteNormalForm(m);
            const ExactInt dm = oracle::leibnizDeterminant(m);
            const ExactInt dh = oracle::leibnizDeterminant(r.h);
            CHECK((dh == dm || dh == -dm));
            CHECK(r.u * m == r.h);
        }
    }
    SUBCASE("column vector gives the gcd and a kernel") {
        const IntMatrix f{{6}, {10}, {15}};
        const auto r = hermiteNormalForm(f);
        CHECK(r.rank == 1);
        CHECK(r.h(0, 0) == 1);
        for (std::size_t i = 1; i < 3; ++i) {
            IntMatrix row(1, 3);
            for (std::size_t j = 0; j < 3; ++j) row(0, j) = r.u(i, j);
            CHECK((row * f)(0, 0) == 0);
        }
    }
    SUBCASE("zero matrix") {
        const auto r = hermiteNormalForm(IntMatrix(3, 2));
        CHECK(r.rank == 0);
        CHECK(r.u == IntMatrix::identity(3));
    }
    CHECK(oracle::checkHnfUnimodular(31337, 200) == "");

    CHECK_FALSE(isHermiteNormalForm(IntMatrix{{1, 0}, {1, 1}}));
    CHECK_FALSE(isHermiteNormalForm(IntMatrix{{1, 3}, {0, 2}}));
    CHECK_FALSE(isHermiteNormalForm(IntMatrix{{-1, 0}, {0, 1}}));
}

TEST_CASE("Gram matrices") {
    CHECK_THROWS_AS(GramMatrix({{1, 2}, {3, 4}}), std::invalid_argument);

    const GramMatrix a2{{2, 1}, {1, 2}};
    CHECK(a2.isEven());
    CHECK(a2.determinant() == 3);
    CHECK(a2.isPositiveDefinite());

    const GramMatrix hyperbolic{{0, 1}, {1, 0}};
    const Inertia in = hyperbolic.inertia();
    CHECK(in.positive == 1);
    CHECK(in.negative == 1);
    CHECK(in.zero == 0);

    const Inertia degenerate = GramMatrix{{1, 1}, {1, 1}}.inertia();
    CHECK(degenerate.positive == 1);
    CHECK(degenerate.zero == 1);

    const std::vector<ExactInt> x{1, -1};
    CHECK(a2.norm(x) == 2);

    const nlohmann::json j = toJson(a2);
    CHECK(j.at("dim") == "2");
    CHECK(j.at("entries")[0][1] == "1");
    CHECK(gramFromJson(j) == a2);
    CHECK(gramFromJson(nlohmann::json::parse(j.dump())) == a2);
    CHECK(gramFromJson(nlohmann::json::parse(R"({"dim": 1, "entries": [["4"]]})")) == GramMatrix{{4}});
    CHECK_THROWS(gramFromJson(nlohmann::json::parse(R"({"dim": "2", "entries": [["4"]]})")));
}
