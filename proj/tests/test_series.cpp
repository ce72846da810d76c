// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"
#include "runtx/series.hpp"

using namespace runtx;

namespace {

TruncatedSeries make(std::initializer_list<long> coeffs) {
    TruncatedSeries s(static_cast<int>(coeffs.size()) - 1);
    int n = 0;
    for (long c : coeffs) s.set(n++, MultiPoly(c));
    return s;
}

TruncatedSeries random_series(std::mt19937& rng, int order, bool zero_constant = false) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    TruncatedSeries s(order);
    for (int n = zero_constant ? 1 : 0; n <= order; ++n) s.set(n, MultiPoly(coeff(rng)));
    return s;
}

}  // namespace

TEST_CASE("arithmetic basics") {
    CHECK(make({1, 1, 0}) * make({1, -1, 0}) == make({1, 0, -1}));
    CHECK(make({1, 0}) + make({0, 1}) == make({1, 1}));

    TruncatedSeries one_plus_xy(2);
    one_plus_xy.set(0, MultiPoly(1L));
    one_plus_xy.set(1, poly_y());
    TruncatedSeries sq = one_plus_xy * one_plus_xy;
    CHECK(sq.at(0) == MultiPoly(1L));
    CHECK(sq.at(1) == MultiPoly(2L) * poly_y());
    CHECK(sq.at(2) == poly_y() * poly_y());

    CHECK_THROWS_AS(make({1, 0}) + make({1, 0, 0}), std::invalid_argument);
    CHECK(make({1, 0}) != make({1, 0, 0}));
}

TEST_CASE("inversion") {
    TruncatedSeries one_minus_xy(3);
    one_minus_xy.set(0, MultiPoly(1L));
    one_minus_xy.set(1, -poly_y());
    TruncatedSeries inv = one_minus_xy.inverted();
    for (int n = 0; n <= 3; ++n)
        CHECK(inv.at(n) == MultiPoly::term(Monomial::var(VarId::y(), static_cast<unsigned>(n)),
                                           BigInt(1)));

    CHECK(make({1, 0, 0}).inverted() == make({1, 0, 0}));
    CHECK(make({1, -1, 0}).inverted() == make({1, 1, 1}));
    CHECK_THROWS_AS(make({2, 0}).inverted(), std::invalid_argument);
}

TEST_CASE("inversion postcondition on random units") {
    std::mt19937 rng(5150);
    for (int round = 0; round < 50; ++round) {
        TruncatedSeries a = random_series(rng, 6);
        a.set(0, MultiPoly(round % 2 == 0 ? 1L : -1L));
        CHECK(a * a.inverted() == TruncatedSeries::constant(1, 6));
    }
}

TEST_CASE("composition") {
    TruncatedSeries f = make({1, 1, 0});
    TruncatedSeries s(2);
    s.set(2, MultiPoly(1L));
    CHECK(f.compose(s) == make({1, 0, 1}));

    std::mt19937 rng(11);
    TruncatedSeries g = random_series(rng, 5);
    TruncatedSeries x(5);
    x.set(1, MultiPoly(1L));
    CHECK(g.compose(x) == g);

    CHECK_THROWS_AS(f.compose(make({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("composition of geometric series with x(1-x)") {
    // Direct expansion oracle: sum_{k<=3} (x - x^2)^k.
    TruncatedSeries inner = make({0, 1, -1, 0});
    TruncatedSeries expected(3);
    TruncatedSeries power = TruncatedSeries::constant(1, 3);
    for (int k = 0; k <= 3; ++k) {
        expected = expected + power;
        power = power * inner;
    }
    CHECK(expected == make({1, 1, 0, -1}));  // frozen from the expansion
    CHECK(make({1, 1, 1, 1}).compose(inner) == expected);
}

TEST_CASE("composition associativity") {
    std::mt19937 rng(23);
    for (int round = 0; round < 30; ++round) {
        TruncatedSeries f = random_series(rng, 5);
        TruncatedSeries s = random_series(rng, 5, true);
        TruncatedSeries t = random_series(rng, 5, true);
        CHECK(f.compose(s).compose(t) == f.compose(s.compose(t)));
    }
}

TEST_CASE("truncation coherence") {
    std::mt19937 rng(37);
    for (int round = 0; round < 30; ++round) {
        TruncatedSeries a = random_series(rng, 7);
        TruncatedSeries b = random_series(rng, 7);
        TruncatedSeries inner = random_series(rng, 7, true);
        const int m = 4;
        CHECK((a + b).truncated(m) == a.truncated(m) + b.truncated(m));
        CHECK((a * b).truncated(m) == a.truncated(m) * b.truncated(m));
        a.set(0, MultiPoly(1L));
        CHECK(a.inverted().truncated(m) == a.truncated(m).inverted());
        CHECK(a.compose(inner).truncated(m) == a.truncated(m).compose(inner.truncated(m)));
    }
}

TEST_CASE("fixed points") {
    TruncatedSeries x3(3);
    x3.set(1, MultiPoly(1L));
    TruncatedSeries geom = series_fixed_point(TruncatedSeries(3), [&](const TruncatedSeries& f) {
        return TruncatedSeries::constant(1, 3) + x3 * f;
    });
    CHECK(geom == make({1, 1, 1, 1}));

    TruncatedSeries x4(4);
    x4.set(1, MultiPoly(1L));
    TruncatedSeries catalan = series_fixed_point(TruncatedSeries(4), [&](const TruncatedSeries& f) {
        return TruncatedSeries::constant(1, 4) + x4 * f * f;
    });
    CHECK(catalan == make({1, 1, 2, 5, 14}));

    CHECK_THROWS_AS(series_fixed_point(TruncatedSeries(3),
                                       [](const TruncatedSeries& f) {
                                           return f + TruncatedSeries::constant(1, 3);
                                       }),
                    std::runtime_error);
}
