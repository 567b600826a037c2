#include "ising/real.hpp"

#include <algorithm>
#include <ostream>

#include "ising/errors.hpp"

namespace ising {

void Real::init(long prec) {
    if (prec < min_precision)
        throw domain_error("Real: precision must be at least 64 bits");
    prec_ = prec;
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(long prec) { init(prec); }

Real::Real(double x, long prec) {
    init(prec);
    mpfr_set_d(v_, x, MPFR_RNDN);
}

Real::Real(long x, long prec) {
    init(prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
}

Real::Real(const Rat& x, long prec) {
    init(prec);
    mpfr_set_q(v_, x.raw(), MPFR_RNDN);
}

Real::Real(const std::string& s, long prec) {
    init(prec);
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw domain_error("Real: cannot parse '" + s + "'");
}

Real::Real(const Real& o) {
    prec_ = o.prec_;
    mpfr_init2(v_, prec_);
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    prec_ = o.prec_;
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        if (prec_ != o.prec_) {
            mpfr_set_prec(v_, o.prec_);
            prec_ = o.prec_;
        }
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        std::swap(prec_, o.prec_);
    }
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::at_precision(long prec) const {
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

namespace {
inline long join(const Real& a, const Real& b) {
    return std::max(a.precision(), b.precision());
}
} // namespace

Real operator+(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    if (b.is_zero()) throw domain_error("Real: division by zero");
    Real r(join(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real Real::operator-() const {
    Real r(prec_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Real& Real::operator+=(const Real& o) { *this = *this + o; return *this; }
Real& Real::operator-=(const Real& o) { *this = *this - o; return *this; }
Real& Real::operator*=(const Real& o) { *this = *this * o; return *this; }
Real& Real::operator/=(const Real& o) { *this = *this / o; return *this; }

std::string Real::str(int digits) const {
    if (digits <= 0) digits = static_cast<int>(prec_ * 0.30103) + 2;
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRg", digits);
    char* s = nullptr;
    mpfr_asprintf(&s, fmt, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Real Real::ldexp2(long k) const {
    Real r(prec_);
    mpfr_mul_2si(r.v_, v_, k, MPFR_RNDN);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.str(17); }

#define ISING_REAL_UNARY(name, mpfr_name)                    \
    Real name(const Real& x) {                               \
        Real r(x.precision());                               \
        mpfr_name(r.raw(), x.raw(), MPFR_RNDN);              \
        return r;                                            \
    }

ISING_REAL_UNARY(abs, mpfr_abs)
ISING_REAL_UNARY(cbrt, mpfr_cbrt)
ISING_REAL_UNARY(exp, mpfr_exp)
ISING_REAL_UNARY(sin, mpfr_sin)
ISING_REAL_UNARY(cos, mpfr_cos)
ISING_REAL_UNARY(tan, mpfr_tan)
ISING_REAL_UNARY(acos, mpfr_acos)
ISING_REAL_UNARY(sinh, mpfr_sinh)
ISING_REAL_UNARY(cosh, mpfr_cosh)
ISING_REAL_UNARY(tanh, mpfr_tanh)
ISING_REAL_UNARY(asinh, mpfr_asinh)
ISING_REAL_UNARY(gamma, mpfr_gamma)
ISING_REAL_UNARY(zeta, mpfr_zeta)

#undef ISING_REAL_UNARY

Real floor(const Real& x) {
    Real r(x.precision());
    mpfr_floor(r.raw(), x.raw());
    return r;
}

Real sqrt(const Real& x) {
    if (x.sign() < 0) throw domain_error("sqrt: negative argument");
    Real r(x.precision());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real log(const Real& x) {
    if (x.sign() <= 0) throw domain_error("log: argument must be positive");
    Real r(x.precision());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real atan2(const Real& y, const Real& x) {
    Real r(std::max(y.precision(), x.precision()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real pow(const Real& base, const Real& e) {
    Real r(std::max(base.precision(), e.precision()));
    mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
    return r;
}

Real pow(const Real& base, long e) {
    Real r(base.precision());
    mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
    return r;
}

Real agm(const Real& a, const Real& b) {
    Real r(std::max(a.precision(), b.precision()));
    mpfr_agm(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real const_pi(long prec) {
    Real r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real const_euler(long prec) {
    Real r(prec);
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}

} // namespace ising
