#ifndef ISING_QUADRATURE_HPP
#define ISING_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "ising/real.hpp"

namespace ising {
namespace quad {

struct Rule {
    std::vector<Real> nodes;   // on (-1, 1)
    std::vector<Real> weights;
};

// Gauss-Legendre rule of size n at the given precision (cached).
const Rule& gauss_legendre(int n, long prec);

using Fn1 = std::function<Real(const Real&)>;
using Fn2 = std::function<Real(const Real&, const Real&)>;
using Fn3 = std::function<Real(const Real&, const Real&, const Real&)>;

// Single-panel Gauss-Legendre on [a, b].
Real gl_panel(const Fn1& f, const Real& a, const Real& b, int n, long prec);

// Order-doubling Gauss-Legendre until two refinements agree to rel_tol_bits.
Real integrate(const Fn1& f, const Real& a, const Real& b, long prec, long rel_tol_bits,
               int n0 = 16, int max_doublings = 8, double scale_floor = 0.0);

// Tensor-product version on a rectangle / box, same convergence control.
Real integrate2(const Fn2& f, const Real& a1, const Real& b1, const Real& a2, const Real& b2,
                long prec, long rel_tol_bits, int n0 = 12, int max_doublings = 7);
Real integrate3(const Fn3& f, const Real& a1, const Real& b1, const Real& a2, const Real& b2,
                const Real& a3, const Real& b3, long prec, long rel_tol_bits, int n0 = 8,
                int max_doublings = 6);

// Node-doubling trapezoid rule over one period of a smooth periodic
// integrand (spectrally accurate).
Real periodic_trapezoid(const Fn1& f, const Real& a, const Real& period, long prec,
                        long rel_tol_bits, int n0 = 32, int max_doublings = 14,
                        double scale_floor = 0.0);
Real periodic_trapezoid2(const Fn2& f, const Real& a, const Real& period, long prec,
                         long rel_tol_bits, int n0 = 16, int max_doublings = 10);

} // namespace quad
} // namespace ising

#endif
