#include "ising/params.hpp"

#include "ising/errors.hpp"

namespace ising {
namespace params {

std::string side_name(Side s) {
    switch (s) {
        case Side::BelowTc: return "below";
        case Side::AboveTc: return "above";
        case Side::AtTc: return "critical";
    }
    return "?";
}

namespace {

Side classify(const Real& Kv, const Real& Kh) {
    long p = std::max(Kv.precision(), Kh.precision());
    Real prod = sinh(Kv * 2) * sinh(Kh * 2);
    Real tol = Real(1L, p).ldexp2(32 - p);
    if (abs(prod - Real(1L, p)) < tol) return Side::AtTc;
    return prod > Real(1L, p) ? Side::BelowTc : Side::AboveTc;
}

} // namespace

CouplingPoint::CouplingPoint(Real kv, Real kh) : Kv(std::move(kv)), Kh(std::move(kh)), side(Side::AtTc) {
    if (Kv.sign() <= 0 || Kh.sign() <= 0)
        throw domain_error("CouplingPoint: couplings must be positive (ferromagnetic)");
    side = classify(Kv, Kh);
}

CouplingPoint CouplingPoint::isotropic_from_t(const Real& t, Side side) {
    long p = t.precision();
    Real one(1L, p);
    if (!(t > Real(0L, p) && t < one))
        throw domain_error("isotropic_from_t: need 0 < t < 1");
    // s_v = s_h = s with s^2 = k; below Tc k = t^{-1/2}, above k = t^{1/2}.
    Real k = (side == Side::BelowTc) ? pow(t, Real(Rat(-1, 2), p)) : sqrt(t);
    if (side == Side::AtTc) k = one;
    Real s = sqrt(k);
    Real K = asinh(s) / 2;
    return CouplingPoint(K, K);
}

VariablePack derive_variables(const CouplingPoint& cp) {
    long p = std::max(cp.Kv.precision(), cp.Kh.precision());
    Real sv = sinh(cp.Kv * 2), sh = sinh(cp.Kh * 2);
    Real k = sv * sh;
    Real one(1L, p);
    Real t = (cp.side == Side::BelowTc) ? one / (k * k)
             : (cp.side == Side::AboveTc) ? k * k
                                          : one;
    VariablePack vp{
        t,
        Real(p),
        Real(p),
        sqrt(t),
        Real(0L, p),
        one / k,
        exp(cp.Kv * -2) * tanh(cp.Kh),
        exp(cp.Kv * -2) / tanh(cp.Kh),
        cp.side,
        cp.isotropic_couplings(),
    };
    if (vp.have_isotropic) {
        vp.s = sv;
        vp.w = one / ((sv + one / sv) * 2);
    } else {
        Real nan(p);
        mpfr_set_nan(nan.raw());
        vp.s = nan;
        vp.w = nan;
    }
    return vp;
}

Real t_low(const CouplingPoint& cp) {
    Real k = sinh(cp.Kv * 2) * sinh(cp.Kh * 2);
    return Real(1L, k.precision()) / (k * k);
}

Real t_high(const CouplingPoint& cp) {
    Real k = sinh(cp.Kv * 2) * sinh(cp.Kh * 2);
    return k * k;
}

} // namespace params
} // namespace ising
