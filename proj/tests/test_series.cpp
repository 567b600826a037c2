#include <doctest.h>

#include "ising/series.hpp"

using namespace ising;

namespace {

RatSeries geometric(int order) {
    RatSeries s(order);
    for (int i = 0; i < order; ++i) s.at(i) = Rat(1);
    return s;
}

} // namespace

TEST_SUITE("series") {

TEST_CASE("multiplication and truncation order propagation") {
    RatSeries g = geometric(10); // 1/(1-t)
    RatSeries one_minus_t(10);
    one_minus_t.at(0) = Rat(1);
    one_minus_t.at(1) = Rat(-1);
    RatSeries prod = g * one_minus_t;
    CHECK(prod.order() == 10);
    CHECK(prod[0] == Rat(1));
    for (int i = 1; i < 10; ++i) CHECK(prod[i] == Rat(0));

    RatSeries d = g.derivative();
    CHECK(d.order() == 9);
    CHECK(d[3] == Rat(4));
}

TEST_CASE("division") {
    RatSeries one = RatSeries::constant(Rat(1), 12);
    RatSeries one_minus_t(12);
    one_minus_t.at(0) = Rat(1);
    one_minus_t.at(1) = Rat(-1);
    RatSeries g = one / one_minus_t;
    for (int i = 0; i < 12; ++i) CHECK(g[i] == Rat(1));
}

TEST_CASE("binomial series") {
    // (1-t)^{1/4} * (1-t)^{-1/4} = 1
    RatSeries a = one_minus_v_pow(Rat(1, 4), 16);
    RatSeries b = one_minus_v_pow(Rat(-1, 4), 16);
    RatSeries prod = a * b;
    CHECK(prod[0] == Rat(1));
    for (int i = 1; i < 16; ++i) CHECK(prod[i] == Rat(0));
    CHECK(a[1] == Rat(-1, 4));
    CHECK(b[1] == Rat(1, 4));
    CHECK(b[2] == Rat(5, 32));
}

TEST_CASE("hypergeometric series") {
    // 2F1(1,1;1;t) = geometric
    RatSeries g = hyp2f1_series(Rat(1), Rat(1), Rat(1), 8);
    for (int i = 0; i < 8; ++i) CHECK(g[i] == Rat(1));
    // 2F1(1/2,1/2;1;t): coefficients ((1/2)_k/k!)^2
    RatSeries f = hyp2f1_series(Rat(1, 2), Rat(1, 2), Rat(1), 6);
    CHECK(f[1] == Rat(1, 4));
    CHECK(f[2] == Rat(9, 64));
}

TEST_CASE("lambda-polynomial coefficients") {
    PolySeries s(4);
    s.at(0) = RatPoly(Rat(1));
    s.at(1) = RatPoly::monomial(Rat(1), 1); // mu * t
    PolySeries sq = s * s;
    CHECK(sq[1] == RatPoly::monomial(Rat(2), 1));
    CHECK(sq[2] == RatPoly::monomial(Rat(1), 2));
    RatSeries at1 = poly_series_at(sq, Rat(1));
    CHECK(at1[2] == Rat(1));
}

TEST_CASE("json round trip") {
    RationalSeries rs;
    rs.variable = SeriesVar::t;
    rs.offset = Rat(3, 2);
    rs.coeffs = RatSeries({Rat(1), Rat(-1, 4), Rat(0), Rat(7, 3)});
    std::string js = rs.to_json();
    RationalSeries back = RationalSeries::from_json(js);
    CHECK(back.variable == SeriesVar::t);
    CHECK(back.offset == rs.offset);
    CHECK(back.coeffs.coeffs() == rs.coeffs.coeffs());
    CHECK(back.order() == Rat(11, 2));
}

TEST_CASE("evaluation with offset") {
    RationalSeries rs;
    rs.variable = SeriesVar::t;
    rs.offset = Rat(1, 2);
    rs.coeffs = RatSeries({Rat(1), Rat(1)});
    // t^{1/2} (1 + t) at t = 1/4: 0.5 * 1.25
    Real v = rs.eval(Real(0.25, 128));
    CHECK(abs(v - Real(0.625, 128)) < Real(1L, 128).ldexp2(-100));
}

} // TEST_SUITE
