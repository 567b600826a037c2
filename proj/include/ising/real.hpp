#ifndef ISING_REAL_HPP
#define ISING_REAL_HPP

#include <mpfr.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ising/rational.hpp"

namespace ising {

// Arbitrary-precision real scalar. The working mantissa size is chosen at
// construction and propagates through arithmetic as the max of the operand
// precisions. Round-to-nearest throughout.
class Real {
public:
    static constexpr long min_precision = 64;
    static constexpr long default_precision = 256;

    explicit Real(long prec = default_precision);
    Real(double x, long prec);
    Real(long x, long prec);
    Real(const Rat& x, long prec);
    Real(const std::string& s, long prec);

    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    long precision() const { return prec_; }
    // Value rounded into a new precision.
    Real at_precision(long prec) const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    Real operator-() const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

    friend Real operator+(const Real& a, long b) { return a + Real(b, a.prec_); }
    friend Real operator-(const Real& a, long b) { return a - Real(b, a.prec_); }
    friend Real operator*(const Real& a, long b) { return a * Real(b, a.prec_); }
    friend Real operator/(const Real& a, long b) { return a / Real(b, a.prec_); }
    friend Real operator+(long a, const Real& b) { return Real(a, b.prec_) + b; }
    friend Real operator-(long a, const Real& b) { return Real(a, b.prec_) - b; }
    friend Real operator*(long a, const Real& b) { return Real(a, b.prec_) * b; }
    friend Real operator/(long a, const Real& b) { return Real(a, b.prec_) / b; }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    std::string str(int digits = 0) const;

    // 2^k, exact.
    Real ldexp2(long k) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    void init(long prec);
    mpfr_t v_;
    long prec_;
};

std::ostream& operator<<(std::ostream& os, const Real& x);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cbrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real acos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real asinh(const Real& x);
Real pow(const Real& base, const Real& e);
Real pow(const Real& base, long e);
Real agm(const Real& a, const Real& b);
Real gamma(const Real& x);
Real zeta(const Real& x);
Real floor(const Real& x);

Real const_pi(long prec);
Real const_euler(long prec);

// max(|a-b|) helpers used all over the tests
inline Real abs_diff(const Real& a, const Real& b) { return abs(a - b); }

// Complex pair of Reals; only the handful of operations the library needs.
struct CReal {
    Real re, im;
    CReal(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit CReal(Real r) : re(std::move(r)), im(Real(0L, r.precision())) {}
    friend CReal operator+(const CReal& a, const CReal& b) { return {a.re + b.re, a.im + b.im}; }
    friend CReal operator-(const CReal& a, const CReal& b) { return {a.re - b.re, a.im - b.im}; }
    friend CReal operator*(const CReal& a, const CReal& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    CReal conj() const { return {re, -im}; }
    Real abs2() const { return re * re + im * im; }
};

} // namespace ising

#endif
