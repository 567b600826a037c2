#ifndef ISING_NUMERICS_HPP
#define ISING_NUMERICS_HPP

#include <vector>

#include "ising/rational.hpp"
#include "ising/real.hpp"

namespace ising {
namespace numerics {

// Complete elliptic integrals in the parameter convention:
// K(m) = (pi/2) 2F1(1/2,1/2;1;m), E(m) = (pi/2) 2F1(-1/2,1/2;1;m).
// Evaluated by the arithmetic-geometric mean.
Real elliptic_K(const Real& m);
Real elliptic_E(const Real& m);

// Generalized hypergeometric series sum_k (prod (a_i)_k / prod (b_j)_k) z^k / k!.
Real hyp_pFq(const std::vector<Rat>& upper, const std::vector<Rat>& lower, const Real& z);
Real hyp_2f1(const Rat& a, const Rat& b, const Rat& c, const Real& z);

struct ThetaValues {
    Real theta2, theta3;   // theta_2(u;q), theta_3(u;q)
    Real theta2p, theta3p; // d/du derivatives
};

// theta_3(u;q) = 1 + 2 sum q^{n^2} cos 2nu,
// theta_2(u;q) = 2 q^{1/4} sum q^{n(n+1)} cos (2n+1)u.
ThetaValues theta_funcs(const Real& u, const Real& q);

// Modified Bessel functions, ascending series with guard precision.
Real bessel_I0(const Real& z);
Real bessel_I1(const Real& z);
Real bessel_K0(const Real& z);
Real bessel_K1(const Real& z);

// Clausen's function Cl2(theta) = sum sin(n theta)/n^2.
Real clausen_Cl2(const Real& theta);

// zeta'(-1), at least `prec` meaningful bits.
Real zeta_prime_neg1(long prec);

Real zeta3(long prec);

// Nome data for modulus k = sqrt(t): q = exp(-pi K'(k)/K(k)) where
// K(k) here is elliptic_K(t) in the parameter convention.
struct Nome {
    Real t, q, K, Kprime;
};

Nome make_nome(const Real& t);

} // namespace numerics
} // namespace ising

#endif
