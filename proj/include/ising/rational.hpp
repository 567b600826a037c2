#ifndef ISING_RATIONAL_HPP
#define ISING_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ising {

// Exact rational number backed by GMP's mpq_t. Always canonical.
class Rat {
public:
    Rat() { mpq_init(q_); }
    Rat(long n) { mpq_init(q_); mpq_set_si(q_, n, 1); }
    Rat(long num, unsigned long den);
    explicit Rat(const std::string& s); // "p/q" or "p"

    Rat(const Rat& o) { mpq_init(q_); mpq_set(q_, o.q_); }
    Rat(Rat&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
    Rat& operator=(const Rat& o) { if (this != &o) mpq_set(q_, o.q_); return *this; }
    Rat& operator=(Rat&& o) noexcept { if (this != &o) mpq_swap(q_, o.q_); return *this; }
    ~Rat() { mpq_clear(q_); }

    friend Rat operator+(const Rat& a, const Rat& b) { Rat r; mpq_add(r.q_, a.q_, b.q_); return r; }
    friend Rat operator-(const Rat& a, const Rat& b) { Rat r; mpq_sub(r.q_, a.q_, b.q_); return r; }
    friend Rat operator*(const Rat& a, const Rat& b) { Rat r; mpq_mul(r.q_, a.q_, b.q_); return r; }
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat operator-() const { Rat r; mpq_neg(r.q_, q_); return r; }

    Rat& operator+=(const Rat& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rat& operator-=(const Rat& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rat& operator*=(const Rat& o) { mpq_mul(q_, q_, o.q_); return *this; }
    Rat& operator/=(const Rat& o);

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sign() const { return mpq_sgn(q_); }
    Rat abs() const { Rat r; mpq_abs(r.q_, q_); return r; }
    Rat inverse() const;
    Rat pow(long e) const;

    bool is_integer() const;
    // Numerator times modular inverse of denominator, for ODE hunting mod p.
    std::uint64_t mod(std::uint64_t p) const;

    double to_double() const { return mpq_get_d(q_); }
    std::string str() const;

    mpq_srcptr raw() const { return q_; }
    mpq_ptr raw() { return q_; }

    static Rat factorial(unsigned long n);
    static Rat binomial_int(unsigned long n, unsigned long k);
    // Generalized binomial coefficient C(a, k) for rational a.
    static Rat binomial(const Rat& a, unsigned long k);
    // Pochhammer symbol (a)_n = a (a+1) ... (a+n-1).
    static Rat pochhammer(const Rat& a, unsigned long n);
    static Rat half() { return Rat(1, 2); }

private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Bernoulli number B_n (B_1 = -1/2 convention). Cached, thread-safe.
const Rat& bernoulli(unsigned n);

// Dense polynomial over Rat; used for the lambda^2 weights in series
// coefficients and for the fitted C-polynomials in t.
class RatPoly {
public:
    RatPoly() = default;
    RatPoly(const Rat& c) { if (!c.is_zero()) c_.push_back(c); }
    RatPoly(long n) : RatPoly(Rat(n)) {}
    static RatPoly monomial(const Rat& c, unsigned deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(unsigned i) const;
    void set_coeff(unsigned i, const Rat& v);

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& o) { *this = *this + o; return *this; }
    RatPoly& operator-=(const RatPoly& o) { *this = *this - o; return *this; }
    RatPoly& operator*=(const RatPoly& o) { *this = *this * o; return *this; }
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    // Inverse of a degree-0 polynomial; throws otherwise. Lets RatPoly act as
    // a coefficient ring in truncated series division.
    RatPoly inverse() const;

    Rat eval(const Rat& x) const;
    std::string str(const std::string& var = "t") const;

    const std::vector<Rat>& coeffs() const { return c_; }

private:
    void trim();
    std::vector<Rat> c_;
};

} // namespace ising

#endif
