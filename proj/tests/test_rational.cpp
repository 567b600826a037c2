#include <doctest.h>

#include "ising/rational.hpp"
#include "ising/errors.hpp"

using namespace ising;

TEST_SUITE("rational") {

TEST_CASE("basic arithmetic and canonical form") {
    Rat a(2, 4);
    CHECK(a == Rat(1, 2));
    CHECK((a + Rat(1, 3)).str() == "5/6");
    CHECK((a * Rat(2, 5)).str() == "1/5");
    CHECK((Rat(3) / Rat(7)).str() == "3/7");
    CHECK((-Rat(1, 2)).str() == "-1/2");
    CHECK_THROWS_AS(Rat(1) / Rat(0), domain_error);
    CHECK(Rat("-7/21") == Rat(-1, 3));
    CHECK(Rat(5).is_integer());
    CHECK(!Rat(5, 2).is_integer());
}

TEST_CASE("pow and inverse") {
    CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    CHECK(Rat(2, 3).inverse() == Rat(3, 2));
}

TEST_CASE("binomials and pochhammer") {
    CHECK(Rat::binomial_int(6, 2) == Rat(15));
    CHECK(Rat::binomial(Rat(1, 2), 2) == Rat(-1, 8));
    CHECK(Rat::binomial(Rat(-1, 2), 1) == Rat(-1, 2));
    // (1/2)_3 = (1/2)(3/2)(5/2)
    CHECK(Rat::pochhammer(Rat(1, 2), 3) == Rat(15, 8));
    CHECK(Rat::factorial(5) == Rat(120));
}

TEST_CASE("mod p reduction") {
    const std::uint64_t p = 4611686018427387847ULL;
    // 1/2 mod p = (p+1)/2
    CHECK(Rat(1, 2).mod(p) == (p + 1) / 2);
    CHECK(Rat(-1).mod(p) == p - 1);
    unsigned __int128 prod = (unsigned __int128)Rat(7).mod(p) * Rat(1, 3).mod(p);
    CHECK(Rat(7, 3).mod(p) == (std::uint64_t)(prod % p));
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rat(1));
    CHECK(bernoulli(1) == Rat(-1, 2));
    CHECK(bernoulli(2) == Rat(1, 6));
    CHECK(bernoulli(3) == Rat(0));
    CHECK(bernoulli(8) == Rat(-1, 30));
    CHECK(bernoulli(12) == Rat(-691, 2730));
}

TEST_CASE("polynomials") {
    RatPoly p = RatPoly::monomial(Rat(1), 2) - RatPoly(Rat(1)); // t^2 - 1
    RatPoly q = RatPoly::monomial(Rat(1), 1) + RatPoly(Rat(1)); // t + 1
    RatPoly prod = p * q;
    CHECK(prod.degree() == 3);
    CHECK(prod.eval(Rat(2)) == Rat(9));
    CHECK((p - p).is_zero());
    CHECK_THROWS_AS(q.inverse(), domain_error);
    CHECK(RatPoly(Rat(4)).inverse() == RatPoly(Rat(1, 4)));
}

} // TEST_SUITE
