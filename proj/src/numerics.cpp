#include "ising/numerics.hpp"

#include <cmath>

#include "ising/errors.hpp"

namespace ising {
namespace numerics {

Real elliptic_K(const Real& m) {
    long p = m.precision();
    Real zero(0L, p), one(1L, p);
    if (m < zero || m >= one) throw domain_error("elliptic_K: need 0 <= m < 1");
    if ((one - m) < one.ldexp2(-p / 2))
        throw precision_error("elliptic_K: m too close to 1 for the working precision");
    return const_pi(p) / (agm(one, sqrt(one - m)) * 2);
}

Real elliptic_E(const Real& m) {
    long p = m.precision();
    Real zero(0L, p), one(1L, p);
    if (m < zero || m > one) throw domain_error("elliptic_E: need 0 <= m <= 1");
    if (m == one) return one;
    // a_0=1, b_0=sqrt(1-m), c_0=sqrt(m); E = K (1 - sum 2^{j-1} c_j^2).
    long pw = p + 32;
    Real a(1L, pw), b = sqrt(Real(1L, pw) - m.at_precision(pw));
    Real csum = m.at_precision(pw) / 2; // 2^{-1} c_0^2
    Real tol = Real(1L, pw).ldexp2(-pw);
    double scale = 1.0;
    while (true) {
        Real c = (a - b) / 2;
        Real an = (a + b) / 2;
        b = sqrt(a * b);
        a = an;
        scale *= 2.0;
        Real term = c * c * Real(scale, pw);
        csum += term / 2;
        if (abs(c) < tol) break;
    }
    Real K = const_pi(pw) / (a * 2); // AGM limit reached in a
    return (K * (Real(1L, pw) - csum)).at_precision(p);
}

Real hyp_pFq(const std::vector<Rat>& upper, const std::vector<Rat>& lower, const Real& z) {
    long p = z.precision();
    for (const auto& l : lower)
        if (l.is_integer() && l.sign() <= 0)
            throw domain_error("hyp_pFq: lower parameter is a nonpositive integer");
    if (upper.size() > lower.size() + 1 && !z.is_zero())
        throw convergence_error("hyp_pFq: series diverges for p > q+1");
    if (upper.size() == lower.size() + 1 && abs(z) >= Real(1L, p)) {
        // A terminating upper parameter still gives a polynomial.
        bool terminates = false;
        for (const auto& u : upper)
            if (u.is_integer() && u.sign() <= 0) terminates = true;
        if (!terminates)
            throw convergence_error("hyp_pFq: series requires |z| < 1");
    }
    long pw = p + 32;
    Real zz = z.at_precision(pw);
    Real term(1L, pw), sum(1L, pw);
    Real tol = Real(1L, pw).ldexp2(-(p + 8));
    bool prev_small = false;
    for (long k = 0; k < 1000000; ++k) {
        Real factor(1L, pw);
        for (const auto& u : upper) factor *= Real(u + Rat(k), pw);
        for (const auto& l : lower) factor /= Real(l + Rat(k), pw);
        factor /= Real(k + 1, pw);
        term *= factor * zz;
        if (term.is_zero()) break;
        sum += term;
        bool small = abs(term) <= tol * abs(sum);
        if (small && prev_small) break;
        prev_small = small;
    }
    return sum.at_precision(p);
}

Real hyp_2f1(const Rat& a, const Rat& b, const Rat& c, const Real& z) {
    return hyp_pFq({a, b}, {c}, z);
}

ThetaValues theta_funcs(const Real& u, const Real& q) {
    long p = std::max(u.precision(), q.precision());
    Real zero(0L, p), one(1L, p);
    if (!(q > zero && q < one)) throw domain_error("theta_funcs: need 0 < q < 1");
    long pw = p + 16;
    Real uu = u.at_precision(pw), qq = q.at_precision(pw);
    Real tol = Real(1L, pw).ldexp2(-pw);

    Real t3(1L, pw), t3p(0L, pw);
    for (long n = 1;; ++n) {
        Real qn = pow(qq, n * n);
        if (qn < tol) break;
        Real c = cos(uu * (2 * n)), s = sin(uu * (2 * n));
        t3 += qn * c * 2;
        t3p -= qn * s * (4 * n);
    }

    Real t2(0L, pw), t2p(0L, pw);
    for (long n = 0;; ++n) {
        Real qn = pow(qq, n * (n + 1));
        if (n > 0 && qn < tol) break;
        Real c = cos(uu * (2 * n + 1)), s = sin(uu * (2 * n + 1));
        t2 += qn * c;
        t2p -= qn * s * (2 * n + 1);
    }
    Real q14 = pow(qq, Real(Rat(1, 4), pw));
    t2 = t2 * q14 * 2;
    t2p = t2p * q14 * 2;

    return ThetaValues{t2.at_precision(p), t3.at_precision(p),
                       t2p.at_precision(p), t3p.at_precision(p)};
}

namespace {

// Shared ascending-series pieces: I0, I1, and the companion sums
// S(z)  = sum_{k>=1} H_k (z^2/4)^k / (k!)^2            (for K0)
// Sp(z) = dS/dz
// computed at the caller's (already guarded) precision.
struct BesselSeries {
    Real i0, i1, s, sp;
};

BesselSeries bessel_series(const Real& z) {
    long pw = z.precision();
    Real z24 = z * z / 4;
    Real term(1L, pw); // (z^2/4)^k / (k!)^2
    Real i0(1L, pw), i1_over(1L, pw), s(0L, pw), sp(0L, pw), h(0L, pw);
    Real tol = Real(1L, pw).ldexp2(-pw);
    for (long k = 1; k < 1000000; ++k) {
        term *= z24 / Real(k, pw) / Real(k, pw);
        h += Real(1L, pw) / Real(k, pw);
        i0 += term;
        // I1 = (z/2) sum (z^2/4)^k / (k! (k+1)!)
        i1_over += term / Real(k + 1, pw);
        s += term * h;
        // d/dz [ (z^2/4)^k / (k!)^2 ] = (2k/z) * term
        sp += term * h * Real(2 * k, pw);
        if (term < tol && k > 2) break;
    }
    Real i1 = i1_over * z / 2;
    sp = sp / z;
    return {i0, i1, s, sp};
}

long bessel_guard_bits(const Real& z) {
    double zd = z.to_double();
    if (zd > 400.0) throw domain_error("bessel: argument too large for the series evaluation");
    return static_cast<long>(2.9 * zd) + 64; // cancellation ~ e^{2z}
}

} // namespace

Real bessel_I0(const Real& z) {
    long pw = z.precision() + 32;
    return bessel_series(z.at_precision(pw)).i0.at_precision(z.precision());
}

Real bessel_I1(const Real& z) {
    long pw = z.precision() + 32;
    return bessel_series(z.at_precision(pw)).i1.at_precision(z.precision());
}

Real bessel_K0(const Real& z) {
    long p = z.precision();
    if (z.sign() <= 0) throw domain_error("bessel_K0: need z > 0");
    long pw = p + bessel_guard_bits(z);
    Real zz = z.at_precision(pw);
    BesselSeries bs = bessel_series(zz);
    Real lg = log(zz / 2) + const_euler(pw);
    return (bs.s - lg * bs.i0).at_precision(p);
}

Real bessel_K1(const Real& z) {
    // K1 = -K0' = 1/z I0 + (log(z/2)+gamma) I1 - S'(z)  with S as above.
    long p = z.precision();
    if (z.sign() <= 0) throw domain_error("bessel_K1: need z > 0");
    long pw = p + bessel_guard_bits(z);
    Real zz = z.at_precision(pw);
    BesselSeries bs = bessel_series(zz);
    Real lg = log(zz / 2) + const_euler(pw);
    return (bs.i0 / zz + lg * bs.i1 - bs.sp).at_precision(p);
}

Real clausen_Cl2(const Real& theta) {
    long p = theta.precision();
    long pw = p + 32;
    Real pi = const_pi(pw);
    Real two_pi = pi * 2;
    Real th = theta.at_precision(pw);
    // reduce to (-pi, pi]
    Real k = floor(th / two_pi + Real(0.5, pw));
    th -= two_pi * k;
    if (th.is_zero()) return Real(0L, p);
    int sign = 1;
    if (th.sign() < 0) { th = -th; sign = -1; } // odd function
    // Cl2(t) = t - t log t - sum_k (-1)^k B_{2k} t^{2k+1} / (2k (2k+1) (2k)!)
    Real sum = th - th * log(th);
    Real t2 = th * th;
    Real power = th; // th^{2k+1} built incrementally
    Real fact(1L, pw); // (2k)!
    Real tol = Real(1L, pw).ldexp2(-pw);
    for (long kk = 1; kk < 100000; ++kk) {
        power *= t2;
        fact *= Real(2 * kk - 1, pw) * Real(2 * kk, pw);
        Real coeff = Real(bernoulli(2 * kk), pw) / (Real(2 * kk, pw) * Real(2 * kk + 1, pw) * fact);
        Real term = coeff * power;
        if (kk % 2) sum += term; else sum -= term; // -(-1)^k B_2k ...
        if (abs(term) < tol) break;
    }
    if (sign < 0) sum = -sum;
    return sum.at_precision(p);
}

Real zeta_prime_neg1(long prec) {
    // Central difference of zeta at s = -1 with doubled working precision;
    // O(h^2) error with h = 2^{-prec/2-16} lands far below the target.
    long pw = 2 * prec + 64;
    Real h = Real(1L, pw).ldexp2(-(prec / 2 + 16));
    Real sp = zeta(Real(-1L, pw) + h);
    Real sm = zeta(Real(-1L, pw) - h);
    return ((sp - sm) / (h * 2)).at_precision(prec);
}

Real zeta3(long prec) {
    return zeta(Real(3L, prec));
}

Nome make_nome(const Real& t) {
    long p = t.precision();
    Real zero(0L, p), one(1L, p);
    if (!(t > zero && t < one)) throw domain_error("make_nome: need 0 < t < 1");
    Real K = elliptic_K(t);
    Real Kp = elliptic_K(one - t);
    Real q = exp(-const_pi(p) * Kp / K);
    return Nome{t, q, K, Kp};
}

} // namespace numerics
} // namespace ising
