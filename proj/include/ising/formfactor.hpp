#ifndef ISING_FORMFACTOR_HPP
#define ISING_FORMFACTOR_HPP

#include <vector>

#include "ising/params.hpp"
#include "ising/rational.hpp"
#include "ising/real.hpp"
#include "ising/series.hpp"

namespace ising {
namespace formfactor {

struct Caps {
    int n_max = 6;       // largest particle superscript computed exactly
    int N_max = 8;       // largest diagonal separation
    int order_max = 40;  // largest t-order of exact expansions
};

// Diagonal form factor f^(n)_{N,N}(t) as an exact series
// t^{offset} sum_k c_k t^k with integer k steps (offset can be half-integer
// for odd n and odd N).
struct FormFactor {
    int n = 0;
    int N = 0;
    RationalSeries series;
};

// Exact expansion of the 2n- or (2n+1)-fold form factor integral. `order`
// is the t-order (exclusive) of the result including the leading power.
FormFactor formfactor_series(int n, int N, int order, const Caps& caps = Caps{});

// The leading exponent of f^(n)_{N,N}: n even -> (n/2)(N + n/2);
// n odd -> (n/2) N + ((n-1)/2)((n+1)/2).
Rat formfactor_offset(int n, int N);

// Adaptive Gauss-Legendre evaluation of the integral after the substitution
// x = sin^2(phi) (n <= 3). Relative target 1e-12.
Real formfactor_quad(int n, int N, const Real& t);

// Diagonal susceptibility contribution chi_d^(n) as an exact series:
// even n -> variable t, odd n -> variable x = t^{1/2}.
RationalSeries chi_diag_series_exact(int n, int order, const Caps& caps = Caps{});

// Lambda-extended diagonal correlation. Below Tc:
//   C_-(N,N;lambda) = (1-t)^{1/4} (1 + sum mu^n f^(2n)),  mu = lambda^2.
// Above Tc (divided by the t^{N/2} prefactor):
//   C_+(N,N;lambda) = (1-t)^{1/4} t^{N/2} sum mu^n f^(2n+1)/t^{N/2}.
struct LambdaCorrelation {
    params::Side side;
    int N;
    Rat offset;    // t-exponent prefactor (N/2 above Tc, 0 below)
    PolySeries s;  // coefficients polynomial in mu = lambda^2

    Real eval(const Real& lambda, const Real& t) const;
};

// For N = 0 below Tc the identity <s00 s00> = 1 pins the full sum of form
// factors, which completes the tail beyond caps.n_max exactly.
LambdaCorrelation lambda_correlation(int N, params::Side side, int order,
                                     const Caps& caps = Caps{});

enum class ThetaForm { Cm00, Cp00, Cm11, Cp11 };

// Closed theta-function forms of the lambda-extended correlations,
// lambda = cos u.
Real theta_closed_form(ThetaForm which, const Real& lambda, const Real& t);

// Factorization data of f^(n)_{N,N} over the hypergeometric basis
// F_N^{n-m} F_{N+1}^m with lower-form-factor subtractions.
struct Factorization {
    int n = 0;
    int N = 0;
    std::vector<Rat> K;        // K^(n)_m(N), m = 0..floor(n/2)-1
    std::vector<RatPoly> C;    // C^(n)_m(N;t), m = 0..n
    int expected_degree = 0;   // floor(n/2)(2N+1)
};

Factorization factorization_fit(int n, int N, const Caps& caps = Caps{});

// F_N = 2F1(1/2, N+1/2; N+1; t) as an exact series.
RatSeries hyp_FN_series(int N, int order);

// Exact series of f^(n)_{N,N} extended to high order through the verified
// factorization (used for ODE hunting past the integral-engine caps).
RatSeries formfactor_series_extended(int n, int N, int order, const Caps& caps = Caps{});

} // namespace formfactor
} // namespace ising

#endif
