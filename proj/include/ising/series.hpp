#ifndef ISING_SERIES_HPP
#define ISING_SERIES_HPP

#include <string>
#include <vector>

#include "ising/errors.hpp"
#include "ising/rational.hpp"
#include "ising/real.hpp"

namespace ising {

// Truncated power series over an exact coefficient ring C. A series of
// order K holds the coefficients of v^0 .. v^{K-1}; all ring operations
// propagate the truncation order as the min of the operands, so a result's
// order always tells through which power it is exact.
template <class C>
class Series {
public:
    Series() = default;
    explicit Series(int order) : c_(order) {}
    Series(std::vector<C> coeffs) : c_(std::move(coeffs)) {}

    static Series constant(const C& v, int order) {
        Series s(order);
        if (order > 0) s.c_[0] = v;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()); }
    bool empty() const { return c_.empty(); }

    const C& operator[](int k) const {
        static const C zero{};
        return (k >= 0 && k < order()) ? c_[k] : zero;
    }
    C& at(int k) {
        if (k < 0 || k >= order()) throw domain_error("Series: index out of range");
        return c_[k];
    }

    Series truncated(int n) const {
        Series s = *this;
        if (n < s.order()) s.c_.resize(n);
        return s;
    }

    // Pads with zeros; only valid when the series is known to be a
    // polynomial that is exact at all orders.
    Series padded(int n) const {
        Series s = *this;
        if (n > s.order()) s.c_.resize(n);
        return s;
    }

    friend Series operator+(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r(n);
        for (int i = 0; i < n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend Series operator-(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r(n);
        for (int i = 0; i < n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    friend Series operator*(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r(n);
        for (int i = 0; i < n; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j < n; ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    Series operator-() const {
        Series r(order());
        for (int i = 0; i < order(); ++i) r.c_[i] = -c_[i];
        return r;
    }

    Series& operator+=(const Series& o) { *this = *this + o; return *this; }
    Series& operator-=(const Series& o) { *this = *this - o; return *this; }
    Series& operator*=(const Series& o) { *this = *this * o; return *this; }

    Series scaled(const C& f) const {
        Series r(order());
        for (int i = 0; i < order(); ++i) r.c_[i] = c_[i] * f;
        return r;
    }

    // Division by a series with invertible constant term.
    friend Series operator/(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        if (n == 0) return Series(0);
        C inv0 = b.c_[0].inverse();
        Series r(n);
        for (int k = 0; k < n; ++k) {
            C acc = a[k];
            for (int j = 1; j <= k; ++j) acc = acc - b[j] * r.c_[k - j];
            r.c_[k] = acc * inv0;
        }
        return r;
    }

    // d/dv; one order of knowledge is lost.
    Series derivative() const {
        if (order() == 0) return Series(0);
        Series r(order() - 1);
        for (int i = 1; i < order(); ++i) r.c_[i - 1] = c_[i] * C(i);
        return r;
    }

    // Multiply by v^k (exact; extends the order by k).
    Series shifted(int k) const {
        Series r(order() + k);
        for (int i = 0; i < order(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    // Index of first nonzero coefficient, or -1 if none within the order.
    int first_nonzero() const {
        for (int i = 0; i < order(); ++i)
            if (!c_[i].is_zero()) return i;
        return -1;
    }

    const std::vector<C>& coeffs() const { return c_; }

private:
    std::vector<C> c_;
};

using RatSeries = Series<Rat>;
using PolySeries = Series<RatPoly>; // coefficients polynomial in lambda^2

// (1 + s)^a as a truncated series for rational exponent a, where s must have
// zero constant term.
RatSeries binomial_series_in(const RatSeries& s, const Rat& a, int order);
// (1 - v)^a directly in the series variable.
RatSeries one_minus_v_pow(const Rat& a, int order);
// 2F1(a,b;c;v) coefficients, exact.
RatSeries hyp2f1_series(const Rat& a, const Rat& b, const Rat& c, int order);
// pFq series coefficients, exact.
RatSeries hyp_pfq_series(const std::vector<Rat>& upper, const std::vector<Rat>& lower, int order);

PolySeries lift_to_poly(const RatSeries& s);
RatSeries poly_series_at(const PolySeries& s, const Rat& lambda_sq);

Real eval_series(const RatSeries& s, const Real& v);

// Variable tags for the interchange format.
enum class SeriesVar { t, x, q };

std::string series_var_name(SeriesVar v);
SeriesVar series_var_from_name(const std::string& name);

// Spec-level series object: an exact power series var^offset * sum c_k var^k
// with a rational leading exponent. This is the JSON interchange payload.
struct RationalSeries {
    SeriesVar variable = SeriesVar::t;
    Rat offset;       // leading exponent
    RatSeries coeffs; // coefficient list starting at the leading exponent

    // Truncation order (exclusive) in the series variable.
    Rat order() const { return offset + Rat(coeffs.order()); }

    Real eval(const Real& v) const;

    std::string to_json(int indent = -1) const;
    static RationalSeries from_json(const std::string& text);
};

} // namespace ising

#endif
