#include <doctest.h>

#include "ising/errors.hpp"
#include "ising/real.hpp"

using namespace ising;

TEST_SUITE("real") {

TEST_CASE("precision floor is enforced") {
    CHECK_THROWS_AS(Real(32L), domain_error);
    CHECK(Real(64L).precision() == 64);
}

TEST_CASE("precision propagates as max of operands") {
    Real a(1.5, 128), b(2.5, 256);
    CHECK((a + b).precision() == 256);
    CHECK((a * b).precision() == 256);
}

// Documented contract: arithmetic at precision p on inputs exact at p keeps
// relative error below 2^(4-p) over operation chains of length <= 16,
// checked against the same chain at doubled precision.
TEST_CASE("relative error contract vs doubled-precision oracle") {
    auto chain = [](long prec) {
        Real x(Rat(7, 11), prec), y(Rat(3, 13), prec);
        Real r = x;
        for (int i = 0; i < 4; ++i) {
            r = r * y + x;   // 2 ops
            r = r / (x + y); // 2 ops
        }
        return r;
    };
    for (long p : {64L, 128L, 256L}) {
        Real lo = chain(p), hi = chain(2 * p);
        Real rel = abs(lo.at_precision(2 * p) - hi) / abs(hi);
        CHECK(rel < Real(1L, 2 * p).ldexp2(4 - p));
    }
}

TEST_CASE("rationals convert exactly at sufficient precision") {
    Real x(Rat(1, 8), 64);
    CHECK(x.ldexp2(3) == Real(1L, 64));
    CHECK(Real(Rat(-3, 4), 128).to_double() == -0.75);
}

TEST_CASE("elementary functions agree with known values") {
    long p = 192;
    Real pi = const_pi(p);
    CHECK(abs(sin(pi)) < Real(1L, p).ldexp2(-180));
    CHECK(abs(exp(log(Real(5L, p))) - Real(5L, p)) < Real(1L, p).ldexp2(-180));
    CHECK(abs(atan2(Real(1L, p), Real(1L, p)) - pi / 4) < Real(1L, p).ldexp2(-180));
    CHECK_THROWS_AS(sqrt(Real(-1L, p)), domain_error);
    CHECK_THROWS_AS(log(Real(0L, p)), domain_error);
    CHECK_THROWS_AS(Real(1L, p) / Real(0L, p), domain_error);
}

TEST_CASE("deterministic: identical inputs give bit-identical output") {
    Real a = exp(Real(Rat(1, 3), 256));
    Real b = exp(Real(Rat(1, 3), 256));
    CHECK(a == b);
    CHECK(a.str() == b.str());
}

} // TEST_SUITE
