#include <doctest.h>

#include "ising/errors.hpp"
#include "ising/numerics.hpp"
#include "ising/quadrature.hpp"
#include "ising/series.hpp"

using namespace ising;
using namespace ising::numerics;

namespace {

Real tol_bits(long prec, long bits) { return Real(1L, prec).ldexp2(bits); }

// AGM oracle independent of elliptic_K's code path: plain loop on (a, b).
Real agm_oracle_K(const Real& m) {
    long p = m.precision();
    Real a(1L, p), b = sqrt(Real(1L, p) - m);
    for (int i = 0; i < 10000; ++i) {
        Real an = (a + b) / 2;
        Real bn = sqrt(a * b);
        if (abs(an - bn) < tol_bits(p, -p + 4)) { a = an; break; }
        a = an;
        b = bn;
    }
    return const_pi(p) / (a * 2);
}

} // namespace

TEST_SUITE("numerics") {

TEST_CASE("elliptic K and E at m=0") {
    long p = 256;
    Real half_pi = const_pi(p) / 2;
    CHECK(abs(elliptic_K(Real(0L, p)) - half_pi) < tol_bits(p, -240));
    CHECK(abs(elliptic_E(Real(0L, p)) - half_pi) < tol_bits(p, -240));
    CHECK(elliptic_E(Real(1L, p)) == Real(1L, p));
}

TEST_CASE("K(1/2) matches the AGM oracle to 50 digits") {
    long p = 256;
    Real m(Rat(1, 2), p);
    Real diff = abs(elliptic_K(m) - agm_oracle_K(m));
    CHECK(diff < Real("1e-50", p));
}

TEST_CASE("K matches its 2F1 definition") {
    long p = 256;
    for (double md : {0.1, 0.3, 0.7}) {
        Real m(md, p);
        Real via_series = const_pi(p) / 2 * hyp_2f1(Rat(1, 2), Rat(1, 2), Rat(1), m);
        CHECK(abs(elliptic_K(m) - via_series) < tol_bits(p, -p + 16));
        Real e_series = const_pi(p) / 2 * hyp_2f1(Rat(-1, 2), Rat(1, 2), Rat(1), m);
        CHECK(abs(elliptic_E(m) - e_series) < tol_bits(p, -p + 16));
    }
}

TEST_CASE("Legendre relation") {
    long p = 256;
    for (double md : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        Real m(md, p);
        Real mp = Real(1L, p) - m;
        Real res = elliptic_E(m) * elliptic_K(mp) + elliptic_E(mp) * elliptic_K(m) -
                   elliptic_K(m) * elliptic_K(mp) - const_pi(p) / 2;
        CHECK(abs(res) < tol_bits(p, 16 - p));
    }
}

TEST_CASE("elliptic domain errors") {
    long p = 128;
    CHECK_THROWS_AS(elliptic_K(Real(1L, p)), domain_error);
    CHECK_THROWS_AS(elliptic_K(Real(-0.1, p)), domain_error);
    CHECK_THROWS_AS(elliptic_E(Real(1.5, p)), domain_error);
    // m within 2^{-p/2} of 1: precision-loss error
    Real near_one = Real(1L, p) - tol_bits(p, -p / 2 - 2);
    CHECK_THROWS_AS(elliptic_K(near_one), precision_error);
}

TEST_CASE("hyp_pFq reducible and trivial cases") {
    long p = 256;
    // 2F1(a,b;b;z) = (1-z)^{-a}
    Real z(0.3, p);
    Real lhs = hyp_2f1(Rat(1, 2), Rat(2, 3), Rat(2, 3), z);
    Real rhs = pow(Real(1L, p) - z, Real(Rat(-1, 2), p));
    CHECK(abs(lhs - rhs) < tol_bits(p, -p + 16));
    CHECK(hyp_2f1(Rat(1, 2), Rat(-1, 2), Rat(1), Real(0L, p)) == Real(1L, p));
    // z = 0 gives exactly 1 for any valid parameters
    CHECK(hyp_pFq({Rat(1, 3), Rat(2, 5)}, {Rat(7, 2)}, Real(0L, p)) == Real(1L, p));
}

TEST_CASE("4F3 matches term-by-term summation at doubled precision") {
    long p = 256;
    std::vector<Rat> up{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)};
    std::vector<Rat> lo{Rat(1), Rat(1), Rat(1)};
    Real z(0.25, p);
    Real val = hyp_pFq(up, lo, z);
    // naive oracle at 2p
    long p2 = 2 * p;
    Real zz(0.25, p2), term(1L, p2), sum(1L, p2);
    for (long k = 0; k < 4000; ++k) {
        Real num(1L, p2);
        for (const auto& u : up) num *= Real(u + Rat(k), p2);
        for (const auto& l : lo) num /= Real(l + Rat(k), p2);
        term *= num * zz / Real(k + 1, p2);
        sum += term;
        if (abs(term) < tol_bits(p2, -p2 + 8)) break;
    }
    CHECK(abs(val.at_precision(p2) - sum) < tol_bits(p2, -p + 16));
}

TEST_CASE("hyp_pFq error paths") {
    long p = 128;
    CHECK_THROWS_AS(hyp_pFq({Rat(1, 2), Rat(1, 2)}, {Rat(-2)}, Real(0.1, p)), domain_error);
    CHECK_THROWS_AS(hyp_2f1(Rat(1, 2), Rat(1, 3), Rat(1), Real(1.2, p)), convergence_error);
    CHECK_THROWS_AS(hyp_pFq({Rat(1), Rat(1), Rat(1)}, {Rat(2)}, Real(0.5, p)), convergence_error);
}

TEST_CASE("theta functions: limits, symmetry, direct-sum oracle") {
    long p = 256;
    Real u(0.7, p), q(0.1, p);
    ThetaValues tv = theta_funcs(u, q);

    // q -> 0: theta3 -> 1
    ThetaValues tiny = theta_funcs(Real(0.3, p), tol_bits(p, -p + 8));
    CHECK(abs(tiny.theta3 - Real(1L, p)) < tol_bits(p, -p + 32));

    // evenness: derivatives vanish at u = 0
    ThetaValues at0 = theta_funcs(Real(0L, p), q);
    CHECK(at0.theta2p.is_zero());
    CHECK(at0.theta3p.is_zero());

    // direct 50-term summation at doubled precision
    long p2 = 2 * p;
    Real uu(0.7, p2), qq(0.1, p2), s3(1L, p2);
    for (long n = 1; n <= 50; ++n) s3 += pow(qq, n * n) * cos(uu * (2 * n)) * 2;
    CHECK(abs(tv.theta3.at_precision(p2) - s3) < tol_bits(p2, -p + 16));
}

TEST_CASE("theta quasi-periodicity in real form on a grid") {
    // theta2(u;q) = q^{1/4} sum_{n in Z} q^{n^2+n} e^{i(2n+1)u}, summed here
    // two-sidedly without pairing.
    long p = 192;
    Real q(0.35, p);
    for (double ud : {0.0, 0.4, 1.1, 2.2}) {
        Real u(ud, p);
        Real re(0L, p);
        for (long n = -40; n <= 40; ++n) {
            Real w = pow(q, n * n + n);
            re += w * cos(u * (2 * n + 1));
        }
        re *= pow(q, Real(Rat(1, 4), p));
        ThetaValues tv = theta_funcs(u, q);
        CHECK(abs(tv.theta2 - re) < tol_bits(p, -p + 24));
    }
}

TEST_CASE("jacobi quartic identity") {
    long p = 256;
    Real q(0.2, p);
    ThetaValues tv = theta_funcs(Real(0L, p), q);
    Real t4(1L, p);
    for (long n = 1; n <= 200; ++n) {
        Real term = pow(q, n * n) * 2;
        t4 += (n % 2) ? -term : term;
        if (term < tol_bits(p, -p - 8)) break;
    }
    Real lhs = pow(tv.theta3, 4L);
    Real rhs = pow(tv.theta2, 4L) + pow(t4, 4L);
    CHECK(abs(lhs - rhs) < tol_bits(p, -p + 40) * abs(lhs));
}

TEST_CASE("bessel K0: asymptotics, quadrature oracle, monotonicity") {
    long p = 256;
    // large z: K0(z) sqrt(2z/pi) e^z -> 1 within 1% for z >= 20
    for (double zd : {20.0, 30.0}) {
        Real z(zd, p);
        Real scaled = bessel_K0(z) * sqrt(z * 2 / const_pi(p)) * exp(z);
        CHECK(abs(scaled - Real(1L, p)) < Real(0.01, p));
    }
    // K0(1) vs the integral representation int_0^infty e^{-cosh s} ds
    Real oracle = quad::integrate(
        [&](const Real& s) { return exp(-cosh(s)); }, Real(0L, p), Real(12L, p), p, 200, 32);
    CHECK(abs(bessel_K0(Real(1L, p)) - oracle) < Real("1e-55", p));
    // strictly decreasing on a grid
    Real prev = bessel_K0(Real(0.5, p));
    for (double zd : {1.0, 2.0, 4.0}) {
        Real cur = bessel_K0(Real(zd, p));
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK_THROWS_AS(bessel_K0(Real(0L, p)), domain_error);
}

TEST_CASE("bessel K1 = -K0' (finite difference check)") {
    long p = 256;
    Real z(1.5, p), h = tol_bits(p, -60);
    Real d = (bessel_K0(z + h) - bessel_K0(z - h)) / (h * 2);
    CHECK(abs(bessel_K1(z) + d) < tol_bits(p, -100));
    // Wronskian-ish sanity: I0 K1 + I1 K0 = 1/z
    Real lhs = bessel_I0(z) * bessel_K1(z) + bessel_I1(z) * bessel_K0(z);
    CHECK(abs(lhs - Real(1L, p) / z) < tol_bits(p, -220));
}

TEST_CASE("clausen function") {
    long p = 256;
    CHECK(clausen_Cl2(Real(0L, p)).is_zero());
    CHECK(abs(clausen_Cl2(const_pi(p))) < tol_bits(p, -200));
    // odd and 2pi-periodic
    Real th(0.8, p);
    CHECK(abs(clausen_Cl2(-th) + clausen_Cl2(th)) < tol_bits(p, -200));
    CHECK(abs(clausen_Cl2(th + const_pi(p) * 2) - clausen_Cl2(th)) < tol_bits(p, -190));

    // Cl2(pi/3) against the defining series, block-summed over one sign
    // period (6 terms) and Richardson-extrapolated on geometric node counts.
    Real theta = const_pi(p) / 3;
    std::vector<long> nodes{20, 40, 80, 160, 320, 640, 1280};
    std::vector<Real> vals;
    {
        Real acc(0L, p);
        long m = 0;
        for (long target : nodes) {
            for (; m < target; ++m)
                for (long j = 1; j <= 6; ++j) {
                    long n = 6 * m + j;
                    acc += sin(theta * n) / Real(n * n, p);
                }
            vals.push_back(acc);
        }
    }
    // Neville extrapolation in h = 1/M to h = 0
    std::vector<Real> h;
    for (long m : nodes) h.push_back(Real(1L, p) / Real(m, p));
    std::vector<Real> row = vals;
    for (size_t k = 1; k < row.size(); ++k)
        for (size_t i = 0; i + k < row.size(); ++i)
            row[i] = (h[i] * row[i + 1] - h[i + k] * row[i]) / (h[i] - h[i + k]);
    CHECK(abs(clausen_Cl2(theta) - row[0]) < Real("1e-10", p));
}

TEST_CASE("zeta'(-1)") {
    long p = 256;
    Real zp = zeta_prime_neg1(p);
    CHECK(abs(zp + Real(0.1654, p)) < Real("1e-3", p));

    // Independent Euler-Maclaurin / hyperfactorial oracle:
    // sum_{k<=n} k log k = (n^2/2+n/2+1/12) log n - n^2/4 + (1/12 - zeta'(-1)) + O(1/n)
    auto C = [&](long n) {
        Real s(0L, p);
        for (long k = 2; k <= n; ++k) s += Real(k, p) * log(Real(k, p));
        Real nn(n, p);
        return s - (nn * nn / 2 + nn / 2 + Real(Rat(1, 12), p)) * log(nn) + nn * nn / 4;
    };
    // two-point Richardson in 1/n
    long n1 = 600, n2 = 1200;
    Real c1 = C(n1), c2 = C(n2);
    Real lnA = c2 * 2 - c1; // eliminates the 1/n term up to O(1/n^2)
    Real oracle = Real(Rat(1, 12), p) - lnA;
    CHECK(abs(zp - oracle) < Real("1e-6", p));

    // determinism across re-evaluation and precision consistency
    CHECK(zeta_prime_neg1(p) == zp);
    Real hi = zeta_prime_neg1(2 * p);
    CHECK(abs(zp.at_precision(2 * p) - hi) < tol_bits(2 * p, -p + 16));
    // at least 40 correct digits at 256 bits: compare against doubled precision
    CHECK(abs(zp.at_precision(2 * p) - hi) < Real("1e-40", 2 * p));
}

TEST_CASE("nome") {
    long p = 256;
    Real t(0.3, p);
    Nome nm = make_nome(t);
    CHECK(nm.q == exp(-const_pi(p) * nm.Kprime / nm.K));
    CHECK(nm.q > Real(0L, p));
    CHECK(nm.q < Real(1L, p));
    // strictly increasing in t on a grid
    Real prev(0L, p);
    for (double td : {0.05, 0.2, 0.4, 0.6, 0.8, 0.95}) {
        Nome n2 = make_nome(Real(td, p));
        CHECK(n2.q > prev);
        prev = n2.q;
    }
    CHECK_THROWS_AS(make_nome(Real(1.1, p)), domain_error);
}

} // TEST_SUITE
