#ifndef ISING_TOEPLITZ_HPP
#define ISING_TOEPLITZ_HPP

#include <vector>

#include "ising/params.hpp"
#include "ising/real.hpp"
#include "ising/series.hpp"

namespace ising {
namespace toeplitz {

// Generating function phi(theta) = [(1-a1 e^{i t})(1-a2 e^{-i t}) /
// ((1-a1 e^{-i t})(1-a2 e^{i t}))]^{1/2}, square roots positive at theta=pi.
struct ToeplitzSymbol {
    Real alpha1, alpha2;

    ToeplitzSymbol(Real a1, Real a2);

    bool critical() const; // some parameter equals 1 exactly
};

ToeplitzSymbol diagonal_symbol(const params::VariablePack& vp);
ToeplitzSymbol row_symbol(const params::VariablePack& vp);

struct CoeffResult {
    Real value;
    // Critical symbols (alpha = 1) are evaluated from the exact critical
    // kernel; the quadrature cross-check is unavailable there.
    bool critical_no_dual_check;
};

// Fourier coefficient a_n of the symbol. Regular symbols are computed two
// ways internally (binomial-series convolution and periodic trapezoid
// quadrature) which must agree to 2^(24-prec); the series value is returned.
CoeffResult fourier_coeff(const ToeplitzSymbol& sym, long n);

// Quadrature-only evaluation, exposed as the independent test oracle.
Real fourier_coeff_quadrature(const ToeplitzSymbol& sym, long n);

// D_N = det[a_{i-j}]; empty determinant (N=0) is 1.
Real correlation_det(const ToeplitzSymbol& sym, int N, int cap = 64);

// Exact x-series (x = t^{1/2}) of a_n for the below-Tc diagonal symbol
// (alpha1 = 0, alpha2 = x).
RatSeries diag_coeff_series(long n, int xorder);

// Exact x-series of the N x N below-Tc diagonal determinant.
RatSeries correlation_det_series_diag(int N, int xorder);

// (1-t)^{1/4} for 0 <= t < 1.
Real spontaneous_magnetization(const Real& t);

struct CriticalFit {
    Real amplitude;        // Richardson-extrapolated lim D_N N^{1/4}
    Real amplitude_plain;  // unextrapolated D_{N_max} N_max^{1/4}
    Real exponent;         // fitted power of the decay (should be -1/4)
    std::vector<Real> d_values; // D_1..D_{N_max}
};

// Determinants at the critical diagonal symbol (a_n = 2/(pi(2n+1))),
// fitted as D_N N^{1/4} = A (1 + c/N).
CriticalFit critical_amplitude_fit(int N_max, long prec);

// A_row / A_Tc at the isotropic critical point, from the critical row
// symbol determinants fitted the same way.
Real row_critical_amplitude_ratio(int N_max, long prec);

} // namespace toeplitz
} // namespace ising

#endif
