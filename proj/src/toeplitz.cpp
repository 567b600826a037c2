#include "ising/toeplitz.hpp"

#include <cmath>
#include <map>

#include "ising/errors.hpp"
#include "ising/quadrature.hpp"

namespace ising {
namespace toeplitz {

namespace {

long prec_of(const ToeplitzSymbol& s) {
    return std::max(s.alpha1.precision(), s.alpha2.precision());
}

// Coefficients of (1-a z)^{e1} (1-b z)^{e2} with rational exponents,
// truncated once the tail drops below 2^{-(prec+40)}.
std::vector<Real> binom_product_coeffs(const Real& a, const Real& b, const Rat& e1, const Rat& e2,
                                        long prec) {
    Real amax = abs(a) > abs(b) ? abs(a) : abs(b);
    long J = 8;
    if (!amax.is_zero()) {
        double la = -std::log2(amax.to_double());
        if (la <= 0) throw domain_error("binom_product_coeffs: parameters must be < 1");
        J = static_cast<long>((prec + 48) / la) + 16;
    }
    std::vector<Real> fa(J + 1, Real(0L, prec)), fb(J + 1, Real(0L, prec));
    Real pa(1L, prec), pb(1L, prec);
    for (long k = 0; k <= J; ++k) {
        fa[k] = Real(Rat::binomial(e1, k), prec) * pa;
        fb[k] = Real(Rat::binomial(e2, k), prec) * pb;
        pa *= -a;
        pb *= -b;
    }
    std::vector<Real> out(J + 1, Real(0L, prec));
    for (long i = 0; i <= J; ++i) {
        if (fa[i].is_zero()) continue;
        for (long j = 0; i + j <= J; ++j) out[i + j] += fa[i] * fb[j];
    }
    return out;
}

// Critical kernel: Fourier coefficients of e^{i(pi-theta)/2},
// kappa_m = 2/(pi (2m+1)) for any integer m.
Real critical_kernel(long m, long prec) {
    return Real(2L, prec) / (const_pi(prec) * Real(2 * m + 1, prec));
}

// All the coefficient strategies behind one object so a determinant can
// reuse the series data and the quadrature grid across n.
class CoeffProvider {
public:
    CoeffProvider(const ToeplitzSymbol& sym, bool with_quad_check)
        : sym_(sym), prec_(prec_of(sym)), check_(with_quad_check) {
        Real one(1L, prec_);
        if (sym.alpha1 < Real(0L, prec_) || sym.alpha2 < Real(0L, prec_))
            throw domain_error("ToeplitzSymbol: parameters must be nonnegative");
        if (sym.alpha1 >= one)
            throw domain_error("ToeplitzSymbol: alpha1 must be < 1");
        if (sym.alpha2 == one) {
            mode_ = sym.alpha1.is_zero() ? Mode::critical_diag : Mode::critical_row;
        } else if (sym.alpha2 > one) {
            mode_ = Mode::inverted;
            beta_ = one / sym.alpha2;
            pos_ = binom_product_coeffs(sym.alpha1, beta_, Rat(1, 2), Rat(1, 2), prec_);
            neg_ = binom_product_coeffs(sym.alpha1, beta_, Rat(-1, 2), Rat(-1, 2), prec_);
        } else {
            mode_ = Mode::regular;
            pos_ = binom_product_coeffs(sym.alpha1, sym.alpha2, Rat(1, 2), Rat(-1, 2), prec_);
            neg_ = binom_product_coeffs(sym.alpha2, sym.alpha1, Rat(1, 2), Rat(-1, 2), prec_);
        }
        if (mode_ == Mode::critical_row) {
            // two-sided coefficients c_j of [(1-a1 z)/(1-a1/z)]^{1/2}
            auto cpos = binom_product_coeffs(sym.alpha1, Real(0L, prec_), Rat(1, 2), Rat(0), prec_);
            auto cneg = binom_product_coeffs(sym.alpha1, Real(0L, prec_), Rat(-1, 2), Rat(0), prec_);
            long J = static_cast<long>(cpos.size()) - 1;
            crow_off_ = J;
            crow_.assign(2 * J + 1, Real(0L, prec_));
            for (long i = 0; i <= J; ++i)
                for (long l = 0; l <= J; ++l) crow_[i - l + J] += cpos[i] * cneg[l];
        }
    }

    bool critical() const {
        return mode_ == Mode::critical_diag || mode_ == Mode::critical_row;
    }

    Real series_value(long n) const {
        long p = prec_;
        switch (mode_) {
            case Mode::critical_diag:
                return critical_kernel(n, p);
            case Mode::critical_row: {
                // a_n = sum_j c_j kappa_{n-j}
                Real sum(0L, p);
                for (long j = -crow_off_; j <= crow_off_; ++j)
                    sum += crow_[j + crow_off_] * critical_kernel(n - j, p);
                return sum;
            }
            case Mode::inverted: {
                // a_n(a1, a2>1) = -b_{n+1} with b from the reduced symbol
                long m = n + 1;
                Real sum(0L, p);
                long J = static_cast<long>(pos_.size()) - 1;
                for (long j = std::max(0L, -m); j + std::max(0L, m) <= J; ++j)
                    sum += pos_[m + j] * neg_[j];
                return -sum;
            }
            case Mode::regular: {
                Real sum(0L, p);
                long J = static_cast<long>(pos_.size()) - 1;
                for (long j = std::max(0L, -n); j + std::max(0L, n) <= J; ++j)
                    sum += pos_[n + j] * neg_[j];
                return sum;
            }
        }
        throw internal_error("unreachable");
    }

    Real quad_value(long n) const {
        long p = prec_;
        Real pi = const_pi(p);
        quad::Fn1 f;
        if (mode_ == Mode::regular) {
            f = [&, n](const Real& th) {
                Real A1 = atan2(-sym_.alpha1 * sin(th), Real(1L, p) - sym_.alpha1 * cos(th));
                Real A2 = atan2(-sym_.alpha2 * sin(th), Real(1L, p) - sym_.alpha2 * cos(th));
                return cos(A1 - A2 - th * n);
            };
        } else if (mode_ == Mode::inverted) {
            f = [&, n](const Real& th) {
                Real A1 = atan2(-sym_.alpha1 * sin(th), Real(1L, p) - sym_.alpha1 * cos(th));
                Real Ab = atan2(-beta_ * sin(th), Real(1L, p) - beta_ * cos(th));
                return -cos(A1 + Ab - th * (n + 1));
            };
        } else {
            throw precision_error("fourier_coeff: no quadrature path for a critical symbol");
        }
        Real integral = quad::periodic_trapezoid(f, Real(0L, p), pi * 2, p, p - 28, 64, 16, 1.0);
        return integral / (pi * 2);
    }

    Real coeff(long n) const {
        Real s = series_value(n);
        if (check_ && !critical()) {
            Real q = quad_value(n);
            Real scale = Real(1L, prec_) + abs(s);
            if (abs(s - q) > scale.ldexp2(24 - prec_))
                throw precision_error("fourier_coeff: series and quadrature paths disagree");
        }
        return s;
    }

private:
    enum class Mode { regular, inverted, critical_diag, critical_row };
    ToeplitzSymbol sym_;
    long prec_;
    bool check_;
    Mode mode_ = Mode::regular;
    Real beta_{Real(0L, 64)};
    std::vector<Real> pos_, neg_; // z-positive / z-negative side series
    std::vector<Real> crow_;      // critical-row bracket coefficients c_j
    long crow_off_ = 0;
};

Real det_lu(std::vector<std::vector<Real>>& m, long prec) {
    int N = static_cast<int>(m.size());
    Real det(1L, prec);
    for (int c = 0; c < N; ++c) {
        int piv = c;
        for (int r = c + 1; r < N; ++r)
            if (abs(m[r][c]) > abs(m[piv][c])) piv = r;
        if (m[piv][c].is_zero()) return Real(0L, prec);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < N; ++r) {
            Real f = m[r][c] / m[c][c];
            for (int k = c; k < N; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

} // namespace

ToeplitzSymbol::ToeplitzSymbol(Real a1, Real a2) : alpha1(std::move(a1)), alpha2(std::move(a2)) {
    long p = prec_of(*this);
    if (alpha1 < Real(0L, p) || alpha2 < Real(0L, p))
        throw domain_error("ToeplitzSymbol: parameters must be nonnegative");
    if (alpha1 >= Real(1L, p))
        throw domain_error("ToeplitzSymbol: alpha1 must be < 1");
}

bool ToeplitzSymbol::critical() const {
    long p = prec_of(*this);
    return alpha1 == Real(1L, p) || alpha2 == Real(1L, p);
}

ToeplitzSymbol diagonal_symbol(const params::VariablePack& vp) {
    return ToeplitzSymbol(vp.alpha1, vp.alpha2);
}

ToeplitzSymbol row_symbol(const params::VariablePack& vp) {
    return ToeplitzSymbol(vp.alpha1_row, vp.alpha2_row);
}

CoeffResult fourier_coeff(const ToeplitzSymbol& sym, long n) {
    CoeffProvider prov(sym, true);
    return CoeffResult{prov.coeff(n), prov.critical()};
}

Real fourier_coeff_quadrature(const ToeplitzSymbol& sym, long n) {
    CoeffProvider prov(sym, false);
    return prov.quad_value(n);
}

Real correlation_det(const ToeplitzSymbol& sym, int N, int cap) {
    long p = prec_of(sym);
    if (N < 0) throw domain_error("correlation_det: N must be >= 0");
    if (N > cap) throw cap_exceeded_error("correlation_det: N exceeds the configured cap");
    if (N == 0) return Real(1L, p);
    CoeffProvider prov(sym, true);
    std::vector<Real> a; // a[k] = a_{k-(N-1)}
    for (long k = -(N - 1); k <= N - 1; ++k) a.push_back(prov.coeff(k));
    std::vector<std::vector<Real>> m(N, std::vector<Real>(N, Real(0L, p)));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) m[i][j] = a[i - j + N - 1];
    return det_lu(m, p);
}

RatSeries diag_coeff_series(long n, int xorder) {
    RatSeries out(xorder);
    long an = n >= 0 ? n : -n;
    // coefficient of x^{|n|+2j}: for n>=0  (-1)^n C(-1/2, n+j) C(1/2, j),
    // for n<0 the binomial roles swap.
    for (long j = 0; an + 2 * j < xorder; ++j) {
        Rat c = (n >= 0) ? Rat::binomial(Rat(-1, 2), n + j) * Rat::binomial(Rat(1, 2), j)
                         : Rat::binomial(Rat(-1, 2), j) * Rat::binomial(Rat(1, 2), an + j);
        if (an % 2) c = -c;
        out.at(an + 2 * j) = c;
    }
    return out;
}

RatSeries correlation_det_series_diag(int N, int xorder) {
    if (N == 0) return RatSeries::constant(Rat(1), xorder);
    std::vector<std::vector<RatSeries>> m(N, std::vector<RatSeries>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) m[i][j] = diag_coeff_series(i - j, xorder);
    // Division-based elimination; pivots have unit constant terms for this
    // symbol so no pivot search is needed.
    RatSeries det = RatSeries::constant(Rat(1), xorder);
    for (int c = 0; c < N; ++c) {
        if (m[c][c].order() == 0 || m[c][c][0].is_zero())
            throw internal_error("correlation_det_series_diag: zero pivot");
        det *= m[c][c];
        for (int r = c + 1; r < N; ++r) {
            RatSeries f = m[r][c] / m[c][c];
            for (int k = c; k < N; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

Real spontaneous_magnetization(const Real& t) {
    long p = t.precision();
    if (t < Real(0L, p) || t >= Real(1L, p))
        throw domain_error("spontaneous_magnetization: need 0 <= t < 1");
    return pow(Real(1L, p) - t, Real(Rat(1, 4), p));
}

namespace {

// D_N for N=1..N_max from a coefficient table (shared LU-free growth would
// need Levinson; plain LU per N is cheap at these sizes).
std::vector<Real> dets_from_coeffs(const std::vector<Real>& a, int N_max, long prec) {
    std::vector<Real> out;
    int off = N_max - 1; // a[off + k] = a_k
    for (int N = 1; N <= N_max; ++N) {
        std::vector<std::vector<Real>> m(N, std::vector<Real>(N, Real(0L, prec)));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) m[i][j] = a[off + i - j];
        out.push_back(det_lu(m, prec));
    }
    return out;
}

CriticalFit fit_from_dets(const std::vector<Real>& d, long prec) {
    int N_max = static_cast<int>(d.size());
    Real quarter(Rat(1, 4), prec);
    auto R = [&](int N) { return d[N - 1] * pow(Real((long)N, prec), quarter); };
    // two-term ansatz D_N N^{1/4} = A (1 + c/N): A = N R_N - (N-1) R_{N-1}
    Real A = R(N_max) * N_max - R(N_max - 1) * (N_max - 1);
    // decay exponent from a Richardson pair of log-slopes
    auto slope = [&](int N) {
        return (log(d[N - 1]) - log(d[N / 2 - 1])) / log(Real(2L, prec));
    };
    Real s1 = slope(N_max), s2 = slope(N_max / 2);
    Real exponent = s1 + (s1 - s2) / 3; // slopes converge ~1/N^2 at fixed ratio
    return CriticalFit{A, R(N_max), exponent, d};
}

} // namespace

CriticalFit critical_amplitude_fit(int N_max, long prec) {
    if (N_max < 8) throw domain_error("critical_amplitude_fit: need N_max >= 8");
    std::vector<Real> a;
    for (long k = -(N_max - 1); k <= N_max - 1; ++k) a.push_back(critical_kernel(k, prec));
    return fit_from_dets(dets_from_coeffs(a, N_max, prec), prec);
}

Real row_critical_amplitude_ratio(int N_max, long prec) {
    if (N_max < 8) throw domain_error("row_critical_amplitude_ratio: need N_max >= 8");
    // isotropic critical couplings: sinh 2K = 1
    Real K = asinh(Real(1L, prec)) / 2;
    auto vp = params::derive_variables(params::CouplingPoint::isotropic(K));
    ToeplitzSymbol row = row_symbol(vp);
    CoeffProvider prov(row, false);
    std::vector<Real> a;
    for (long k = -(N_max - 1); k <= N_max - 1; ++k) a.push_back(prov.series_value(k));
    CriticalFit rowfit = fit_from_dets(dets_from_coeffs(a, N_max, prec), prec);
    CriticalFit diag = critical_amplitude_fit(N_max, prec);
    return rowfit.amplitude / diag.amplitude;
}

} // namespace toeplitz
} // namespace ising
