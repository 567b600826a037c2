#ifndef ISING_PARAMS_HPP
#define ISING_PARAMS_HPP

#include "ising/real.hpp"

namespace ising {
namespace params {

enum class Side { BelowTc, AboveTc, AtTc };

std::string side_name(Side s);

// Dimensionless couplings Kv = E^v/k_B T, Kh = E^h/k_B T. Only these ratios
// ever enter; the temperature never appears by itself.
struct CouplingPoint {
    Real Kv, Kh;
    Side side;

    CouplingPoint(Real kv, Real kh);

    static CouplingPoint isotropic(const Real& K) { return CouplingPoint(K, K); }
    // Isotropic couplings producing a given t on a given side.
    static CouplingPoint isotropic_from_t(const Real& t, Side side);

    bool isotropic_couplings() const { return Kv == Kh; }
};

struct VariablePack {
    Real t;          // low-T: (s_v s_h)^{-2}; high-T: (s_v s_h)^2; 1 at Tc
    Real s;          // sinh 2K, isotropic only (NaN otherwise)
    Real w;          // 1/(2(s + 1/s)), isotropic only (NaN otherwise)
    Real k;          // modulus, sqrt(t)
    Real alpha1, alpha2;         // diagonal Toeplitz symbol: 0, (s_v s_h)^{-1}
    Real alpha1_row, alpha2_row; // row symbol: e^{-2Kv} tanh Kh, e^{-2Kv} coth Kh
    Side side;
    bool have_isotropic;
};

VariablePack derive_variables(const CouplingPoint& cp);

// The t value each side convention assigns to the couplings. The two are
// mutual inverses.
Real t_low(const CouplingPoint& cp);
Real t_high(const CouplingPoint& cp);

} // namespace params
} // namespace ising

#endif
