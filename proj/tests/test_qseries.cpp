#include "doctest.h"

#include "moonshine/modforms.hpp"
#include "moonshine/qseries.hpp"
#include "oracles.hpp"

using namespace moonshine;

namespace {

LaurentSeries geometric(std::int64_t order) {
    std::vector<ExactInt> ones(static_cast<std::size_t>(order), 1);
    return LaurentSeries::fromCoefficients(0, std::move(ones));
}

}  // namespace

TEST_CASE("coeff reads inside the truncation and refuses beyond it") {
    const auto s = LaurentSeries::fromCoefficients(0, {1, -1, 0, 0});
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == -1);
    CHECK(s.coeff(-5) == 0);
    CHECK(s.coeff(3) == 0);
    CHECK_THROWS_AS(s.coeff(4), TruncationError);

    CHECK(delta(6).coeff(2) == -24);
    CHECK(jInvariant(2).coeff(-1) == 1);
    CHECK_THROWS_AS(jInvariant(2).coeff(2), TruncationError);
}

TEST_CASE("valuation is tight and leading zeros are dropped") {
    const auto s = LaurentSeries::fromCoefficients(-3, {0, 0, 5, 1});
    CHECK(s.valuation() == -1);
    CHECK(s.order() == 1);
    CHECK(s.coefficients().size() == 2);

    const auto z = LaurentSeries::fromCoefficients(2, {0, 0, 0});
    CHECK(z.isZero());
    CHECK(z.order() == 5);
    CHECK(z.coeff(4) == 0);
}

TEST_CASE("add") {
    const auto a = LaurentSeries::fromCoefficients(0, {1, 1});
    const auto b = LaurentSeries::fromCoefficients(0, {1, -1});
    CHECK(add(a, b) == LaurentSeries::fromCoefficients(0, {2, 0}));

    const auto pole = LaurentSeries::monomial(1, -1, 3);
    const auto lin = LaurentSeries::monomial(1, 1, 3);
    const auto sum = add(pole, lin);
    CHECK(sum.valuation() == -1);
    CHECK(sum.coeff(-1) == 1);
    CHECK(sum.coeff(0) == 0);
    CHECK(sum.coeff(1) == 1);

    SUBCASE("cancellation gives the zero series") {
        const auto d = delta(20);
        const auto z = add(d, negate(d));
        CHECK(z.isZero());
        CHECK(z.order() == 20);
    }
    SUBCASE("leading cancellation re-tightens the valuation") {
        const auto x = LaurentSeries::fromCoefficients(0, {1, 2, 3});
        const auto y = LaurentSeries::fromCoefficients(0, {-1, 0, 1});
        const auto s = add(x, y);
        CHECK(s.valuation() == 1);
        CHECK(s.coeff(1) == 2);
    }
    SUBCASE("result order is the smaller order") {
        CHECK(add(eulerProduct(10), eulerProduct(4)).order() == 4);
    }
}

TEST_CASE("mul") {
    const auto oneMinusQ = LaurentSeries::fromCoefficients(0, {1, -1});
    CHECK(mul(oneMinusQ, geometric(10)) == LaurentSeries::one(2));
    CHECK(mul(oneMinusQ.truncated(2), geometric(10)).order() == 2);

    SUBCASE("Delta times its inverse is 1") {
        const auto d = delta(40);
        const auto p = mul(d, invert(d));
        CHECK(p == LaurentSeries::one(p.order()));
        CHECK(p.order() == 39);
    }

    SUBCASE("E4^3 at q^1 against a brute-force triple convolution") {
        const auto e = oracle::e4Coefficients(3);
        ExactInt brute = 0;
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; a + b <= 1; ++b) {
                const int c = 1 - a - b;
                brute += e[a] * e[b] * e[c];
            }
        CHECK(brute == 720);
        const auto e4 = eisensteinE4(3);
        CHECK(mul(mul(e4, e4), e4).coeff(1) == brute);
    }

    SUBCASE("truncation and valuation rules") {
        const auto a = LaurentSeries::fromCoefficients(-1, {1, 2, 3});  // order 2
        const auto b = LaurentSeries::fromCoefficients(2, {1, 1});      // order 4
        const auto p = mul(a, b);
        CHECK(p.valuation() == 1);
        CHECK(p.order() == std::min(2 + 2, 4 - 1));
    }

    SUBCASE("zero factors") {
        const auto z = LaurentSeries::zero(5);
        const auto p = mul(z, LaurentSeries::fromCoefficients(1, {1, 1}));
        CHECK(p.isZero());
        CHECK(p.order() == 6);
    }
}

TEST_CASE("pow") {
    CHECK(pow(delta(10), 0) == LaurentSeries::one(9));
    CHECK(pow(LaurentSeries::fromCoefficients(0, {1, -1, 0, 0}), 2) == LaurentSeries::fromCoefficients(0, {1, -2, 1, 0}));

    const auto d = pow(eulerProduct(6), 24).shifted(1);
    CHECK(d.coeff(1) == 1);
    CHECK(d.coeff(2) == -24);
    CHECK(d.coeff(3) == 252);
    CHECK(d.coeff(4) == -1472);
    CHECK(d.coeff(5) == 4830);
}

TEST_CASE("invert") {
    CHECK(invert(LaurentSeries::one(7)) == LaurentSeries::one(7));
    CHECK(invert(LaurentSeries::fromCoefficients(0, {1, -1, 0, 0, 0, 0})) == geometric(6));

    const auto d = delta(30);
    const auto inv = invert(d);
    CHECK(inv.valuation() == -1);
    CHECK(inv.coeff(-1) == 1);
    CHECK(inv.order() == 28);

    SUBCASE("negative unit lead") {
        const auto a = LaurentSeries::fromCoefficients(2, {-1, 3, 4, 0, 1});
        CHECK(mul(a, invert(a)) == LaurentSeries::one(5));
    }
    SUBCASE("non-unit leads are rejected") {
        CHECK_THROWS_AS(invert(LaurentSeries::fromCoefficients(0, {2, 1})), NonUnitError);
        CHECK_THROWS_AS(invert(LaurentSeries::zero(4)), NonUnitError);
        CHECK_THROWS_WITH(invert(LaurentSeries::fromCoefficients(0, {3})), doctest::Contains("non-unit leading coefficient"));
    }
}

TEST_CASE("eulerProduct and the pentagonal route") {
    CHECK(eulerProduct(2) == LaurentSeries::fromCoefficients(0, {1, -1}));
    CHECK(eulerProductPentagonal(2) == LaurentSeries::fromCoefficients(0, {1, -1}));
    CHECK(eulerProduct(13) ==
          LaurentSeries::fromCoefficients(0, {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}));
    CHECK(generalizedPentagonals(16) == std::vector<std::int64_t>{0, 1, 2, 5, 7, 12, 15});
    CHECK(eulerProduct(200) == eulerProductPentagonal(200));
    CHECK(eulerProduct(500) == eulerProductPentagonal(500));
    CHECK_THROWS_AS(eulerProduct(0), std::invalid_argument);
    CHECK_THROWS_AS(eulerProductPentagonal(0), std::invalid_argument);
}

TEST_CASE("properties") {
    CHECK(oracle::checkRingAxioms(0x5eed, 300) == "");
    CHECK(oracle::checkUnitInverse(0xabc, 300) == "");
    CHECK(oracle::checkPowMatchesRepeatedMul(0x77, 150) == "");
    CHECK(oracle::checkTruncationMonotonicity(0x1234, 150) == "");
}

TEST_CASE("toString") {
    CHECK(LaurentSeries::fromCoefficients(-1, {1, 744, 0}).toString() == "q^-1 + 744 + O(q^2)");
    CHECK(LaurentSeries::fromCoefficients(0, {1, -1}).toString() == "1 - q + O(q^2)");
    CHECK(LaurentSeries::zero(3).toString() == "O(q^3)");
}
