#include "ising/rational.hpp"

#include <mutex>
#include <ostream>
#include <sstream>

#include "ising/errors.hpp"

namespace ising {

Rat::Rat(long num, unsigned long den) {
    mpq_init(q_);
    if (den == 0) throw domain_error("Rat: zero denominator");
    mpq_set_si(q_, num, den);
    mpq_canonicalize(q_);
}

Rat::Rat(const std::string& s) {
    mpq_init(q_);
    if (mpq_set_str(q_, s.c_str(), 10) != 0) {
        mpq_clear(q_);
        throw domain_error("Rat: cannot parse '" + s + "'");
    }
    if (mpz_sgn(mpq_denref(q_)) == 0) {
        mpq_clear(q_);
        throw domain_error("Rat: zero denominator in '" + s + "'");
    }
    mpq_canonicalize(q_);
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw domain_error("Rat: division by zero");
    Rat r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw domain_error("Rat: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

Rat Rat::inverse() const {
    if (is_zero()) throw domain_error("Rat: inverse of zero");
    Rat r;
    mpq_inv(r.q_, q_);
    return r;
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    Rat base = e > 0 ? *this : inverse();
    unsigned long n = e > 0 ? e : -e;
    Rat r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), n);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), n);
    return r;
}

bool Rat::is_integer() const {
    return mpz_cmp_ui(mpq_denref(q_), 1) == 0;
}

std::uint64_t Rat::mod(std::uint64_t p) const {
    mpz_t pz, num, den;
    mpz_init_set_ui(pz, p);
    mpz_init(num);
    mpz_init(den);
    mpz_mod(num, mpq_numref(q_), pz);
    mpz_mod(den, mpq_denref(q_), pz);
    if (mpz_sgn(den) == 0) {
        mpz_clears(pz, num, den, nullptr);
        throw domain_error("Rat::mod: denominator divisible by p");
    }
    if (mpz_invert(den, den, pz) == 0) {
        mpz_clears(pz, num, den, nullptr);
        throw domain_error("Rat::mod: denominator not invertible mod p");
    }
    mpz_mul(num, num, den);
    mpz_mod(num, num, pz);
    std::uint64_t r = mpz_get_ui(num);
    mpz_clears(pz, num, den, nullptr);
    return r;
}

std::string Rat::str() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, out.size() + 1);
    return out;
}

Rat Rat::factorial(unsigned long n) {
    Rat r;
    mpz_fac_ui(mpq_numref(r.raw()), n);
    return r;
}

Rat Rat::binomial_int(unsigned long n, unsigned long k) {
    Rat r;
    mpz_bin_uiui(mpq_numref(r.raw()), n, k);
    return r;
}

Rat Rat::binomial(const Rat& a, unsigned long k) {
    Rat r(1);
    for (unsigned long i = 0; i < k; ++i) {
        r *= (a - Rat(static_cast<long>(i))) / Rat(static_cast<long>(i) + 1);
    }
    return r;
}

Rat Rat::pochhammer(const Rat& a, unsigned long n) {
    Rat r(1);
    for (unsigned long i = 0; i < n; ++i) r *= a + Rat(static_cast<long>(i));
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

const Rat& bernoulli(unsigned n) {
    static std::mutex mtx;
    static std::vector<Rat> cache; // cache[k] = B_k
    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= n) {
        unsigned m = cache.size();
        if (m == 0) {
            cache.push_back(Rat(1));
            continue;
        }
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        Rat s(0);
        for (unsigned j = 0; j < m; ++j)
            s += Rat::binomial_int(m + 1, j) * cache[j];
        cache.push_back(-s / Rat(static_cast<long>(m) + 1));
    }
    return cache[n];
}

RatPoly RatPoly::monomial(const Rat& c, unsigned deg) {
    RatPoly p;
    if (!c.is_zero()) {
        p.c_.assign(deg + 1, Rat(0));
        p.c_[deg] = c;
    }
    return p;
}

const Rat& RatPoly::coeff(unsigned i) const {
    static const Rat zero(0);
    return i < c_.size() ? c_[i] : zero;
}

void RatPoly::set_coeff(unsigned i, const Rat& v) {
    if (i >= c_.size()) c_.resize(i + 1, Rat(0));
    c_[i] = v;
    trim();
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    RatPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    RatPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    RatPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

RatPoly RatPoly::operator-() const {
    RatPoly r;
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(-x);
    return r;
}

RatPoly RatPoly::inverse() const {
    if (degree() != 0)
        throw domain_error("RatPoly: only degree-0 polynomials are invertible");
    return RatPoly(c_[0].inverse());
}

Rat RatPoly::eval(const Rat& x) const {
    Rat r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

std::string RatPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[i].str() << ")";
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

} // namespace ising
