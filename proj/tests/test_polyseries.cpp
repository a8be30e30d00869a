#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmreg/errors.hpp"
#include "cmreg/polyseries.hpp"
#include "oracles.hpp"

using namespace cmreg;

TEST_CASE("series coefficients of basic numerators") {
    CHECK(series_coefficient(ZPoly{1}, 3, 2) == 6);
    CHECK(series_coefficient(ZPoly{1, 0, -2, 1}, 2, 2) == 1);
    CHECK(series_coefficient(ZPoly{1, 0, -1}, 3, 5) == 11);
    CHECK(series_coefficient(ZPoly{1}, 3, -1) == 0);
    CHECK(series_coefficient(ZPoly{0, 0, 1}, 0, 2) == 1); // pure polynomial
}

TEST_CASE("series coefficients match the prefix-sum expansion oracle") {
    const std::vector<std::pair<ZPoly, int>> cases = {
        {ZPoly{1}, 4},
        {ZPoly{1, 0, -2, 1}, 2},
        {ZPoly{1, 0, -1}, 3},
        {ZPoly{1, 2, 3}, 2},
        {ZPoly{1, -1, 0, 4, -2}, 5},
        {ZPoly{2, 0, 0, -7}, 1},
    };
    for (const auto& [num, n] : cases) {
        const auto expect = testing::expansion_oracle(num, n, 12);
        for (int t = 0; t <= 12; ++t) {
            CHECK(series_coefficient(num, n, t) == expect[static_cast<size_t>(t)]);
        }
    }
}

TEST_CASE("reduce cancels every unit-root factor") {
    const ReducedSeries a = reduce(HilbertSeries{ZPoly{1, 0, -2, 1}, 2});
    CHECK(a.q == ZPoly{1, 1, -1});
    CHECK(a.d == 1);

    const ReducedSeries b = reduce(HilbertSeries{ZPoly{1, 0, -1}, 3});
    CHECK(b.q == ZPoly{1, 1});
    CHECK(b.d == 2);

    const ReducedSeries c = reduce(HilbertSeries{ZPoly{1}, 4});
    CHECK(c.q == ZPoly{1});
    CHECK(c.d == 4);

    CHECK_THROWS_AS(reduce(HilbertSeries{ZPoly{}, 2}), zero_series);
}

TEST_CASE("reduce then re-multiply returns the numerator") {
    const std::vector<std::pair<ZPoly, int>> cases = {
        {ZPoly{1, 0, -2, 1}, 2},
        {ZPoly{1, 0, -1}, 3},
        {ZPoly{1, -2, 1}, 5},
        {ZPoly{1, 0, 0, -1}, 4},
        {ZPoly{1, 1, 1}, 3},
    };
    for (const auto& [num, n] : cases) {
        const ReducedSeries rs = reduce(HilbertSeries{num, n});
        ZPoly back = rs.q;
        const ZPoly unit_factor{1, -1};
        for (int i = 0; i < n - rs.d; ++i) back = back * unit_factor;
        CHECK(back == num);
        CHECK(rs.q.eval_at_one() != 0);
    }
}

TEST_CASE("hilbert polynomial in the monomial basis") {
    const RatPoly p1 = hilbert_polynomial(ReducedSeries{ZPoly{1, 1}, 2});
    CHECK(p1 == RatPoly{1, 2}); // 2t + 1

    const RatPoly p2 = hilbert_polynomial(ReducedSeries{ZPoly{1}, 1});
    CHECK(p2 == RatPoly{1});

    const RatPoly p3 = hilbert_polynomial(ReducedSeries{ZPoly{1, 2, 3}, 2});
    CHECK(p3 == RatPoly{-2, 6}); // 6t - 2

    CHECK_THROWS_AS(hilbert_polynomial(ReducedSeries{ZPoly{1}, 0}), dimension_zero);
}

TEST_CASE("hilbert coefficients via Taylor expansion at z = 1") {
    const CoefficientVector a = hilbert_coefficients(ReducedSeries{ZPoly{1, 1}, 2});
    CHECK(a.e == std::vector<Int>{2, 1});

    const CoefficientVector b = hilbert_coefficients(ReducedSeries{ZPoly{1, 2, 3}, 2});
    CHECK(b.e == std::vector<Int>{6, 8});

    const CoefficientVector c = hilbert_coefficients(ReducedSeries{ZPoly{1}, 3});
    CHECK(c.e == std::vector<Int>{1, 0, 0});

    CHECK_THROWS_AS(hilbert_coefficients(ReducedSeries{ZPoly{1}, 0}), dimension_zero);
}

TEST_CASE("cumulative coefficients extend the ordinary ones") {
    const CoefficientVector a = cumulative_coefficients(ReducedSeries{ZPoly{1, 1}, 2});
    CHECK(a.e == std::vector<Int>{2, 1, 0});

    const CoefficientVector b = cumulative_coefficients(ReducedSeries{ZPoly{1}, 1});
    CHECK(b.e == std::vector<Int>{1, 0});

    const CoefficientVector c = cumulative_coefficients(ReducedSeries{ZPoly{1, 2, 3}, 2});
    CHECK(c.e == std::vector<Int>{6, 8, 3});

    const std::vector<ReducedSeries> cases = {
        {ZPoly{1, 1, -1}, 1}, {ZPoly{1, 2, 3}, 2}, {ZPoly{1, 1}, 3}, {ZPoly{5, -2, 1}, 2},
    };
    for (const auto& rs : cases) {
        const auto ordinary = hilbert_coefficients(rs);
        const auto cumulative = cumulative_coefficients(rs);
        REQUIRE(cumulative.e.size() == ordinary.e.size() + 1);
        for (size_t i = 0; i < ordinary.e.size(); ++i) CHECK(ordinary.e[i] == cumulative.e[i]);
    }
}

TEST_CASE("postulation number") {
    CHECK(postulation_number(ReducedSeries{ZPoly{1, 1}, 2}) == -1);
    CHECK(postulation_number(ReducedSeries{ZPoly{1}, 1}) == -1);
    CHECK(postulation_number(ReducedSeries{ZPoly{1, 1, -1}, 1}) == 1);
    // h(1) = 2 differs from p(1) = 1 for the last series
    CHECK(series_coefficient(ReducedSeries{ZPoly{1, 1, -1}, 1}, 1) == 2);
    CHECK(hilbert_polynomial(ReducedSeries{ZPoly{1, 1, -1}, 1}).eval(1) == 1);
}

TEST_CASE("polynomial equals the function beyond the postulation number") {
    const std::vector<ReducedSeries> cases = {
        {ZPoly{1, 1}, 2}, {ZPoly{1, 2, 3}, 2}, {ZPoly{1, 1, -1}, 1},
        {ZPoly{1}, 4}, {ZPoly{3, 0, 0, 2}, 3},
    };
    for (const auto& rs : cases) {
        const RatPoly p = hilbert_polynomial(rs);
        const long long post = postulation_number(rs);
        for (long long t = post + 1; t <= post + rs.d + 3; ++t) {
            if (t < 0) continue;
            CHECK(Rat(series_coefficient(rs, t)) == p.eval(Int(t)));
        }
    }
}

TEST_CASE("polynomial arithmetic basics") {
    const ZPoly a{1, -1};
    CHECK((a * a) == ZPoly{1, -2, 1});
    CHECK(a.shifted(2) == ZPoly{0, 0, 1, -1});
    CHECK(a + ZPoly{0, 1} == ZPoly{1});
    CHECK(ZPoly{1, -1}.str() == "1 - z");
    CHECK(ZPoly{1, 0, -2, 1}.str() == "1 - 2*z^2 + z^3");
    CHECK(RatPoly{-2, 6}.str() == "-2 + 6*t");
    CHECK(binomial_poly(1, 1) == RatPoly{1, 1});
    CHECK(binomial_poly(1, 2) == RatPoly{0, Rat(1, 2), Rat(1, 2)}); // C(t+1,2)
}
