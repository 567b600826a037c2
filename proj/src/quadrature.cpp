#include "ising/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "ising/errors.hpp"

namespace ising {
namespace quad {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
void legendre(int n, const Real& x, Real& pn, Real& dpn) {
    long p = x.precision();
    Real p0(1L, p), p1 = x;
    for (int k = 2; k <= n; ++k) {
        Real pk = (x * p1 * (2 * k - 1) - p0 * (k - 1)) / k;
        p0 = p1;
        p1 = pk;
    }
    pn = p1;
    dpn = (x * p1 - p0) * n / (x * x - Real(1L, p));
}

Rule build_rule(int n, long prec) {
    Rule r;
    r.nodes.reserve(n);
    r.weights.reserve(n);
    long pw = prec + 16;
    Real one(1L, pw);
    for (int i = 1; i <= n; ++i) {
        double guess = std::cos(M_PI * (i - 0.25) / (n + 0.5));
        Real x(guess, pw);
        Real pn(0L, pw), dpn(0L, pw);
        for (int it = 0; it < 100; ++it) {
            legendre(n, x, pn, dpn);
            Real dx = pn / dpn;
            x -= dx;
            if (abs(dx) < one.ldexp2(-prec - 8)) break;
        }
        legendre(n, x, pn, dpn);
        Real w = Real(2L, pw) / ((one - x * x) * dpn * dpn);
        r.nodes.push_back(x.at_precision(prec));
        r.weights.push_back(w.at_precision(prec));
    }
    return r;
}

} // namespace

const Rule& gauss_legendre(int n, long prec) {
    static std::mutex mtx;
    static std::map<std::pair<int, long>, Rule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, prec);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_rule(n, prec)).first;
    return it->second;
}

Real gl_panel(const Fn1& f, const Real& a, const Real& b, int n, long prec) {
    const Rule& r = gauss_legendre(n, prec);
    Real mid = (a + b) / 2, half = (b - a) / 2;
    Real sum(0L, prec);
    for (int i = 0; i < n; ++i) sum += r.weights[i] * f(mid + half * r.nodes[i]);
    return sum * half;
}

namespace {

bool close_enough(const Real& cur, const Real& prev, long prec, long rel_tol_bits,
                  double scale_floor = 0.0) {
    Real diff = abs(cur - prev);
    Real scale = abs(cur) + Real(scale_floor, prec) + Real(1L, prec).ldexp2(-prec);
    return diff <= scale.ldexp2(-rel_tol_bits);
}

} // namespace

Real integrate(const Fn1& f, const Real& a, const Real& b, long prec, long rel_tol_bits,
               int n0, int max_doublings, double scale_floor) {
    Real prev = gl_panel(f, a, b, n0, prec);
    int n = n0;
    for (int d = 0; d < max_doublings; ++d) {
        n *= 2;
        Real cur = gl_panel(f, a, b, n, prec);
        if (close_enough(cur, prev, prec, rel_tol_bits, scale_floor)) return cur;
        prev = cur;
    }
    throw convergence_error("integrate: Gauss-Legendre refinement did not converge");
}

namespace {

Real gl_panel2(const Fn2& f, const Real& a1, const Real& b1, const Real& a2, const Real& b2,
               int n, long prec) {
    const Rule& r = gauss_legendre(n, prec);
    Real mid1 = (a1 + b1) / 2, half1 = (b1 - a1) / 2;
    Real mid2 = (a2 + b2) / 2, half2 = (b2 - a2) / 2;
    Real sum(0L, prec);
    for (int i = 0; i < n; ++i) {
        Real xi = mid1 + half1 * r.nodes[i];
        Real row(0L, prec);
        for (int j = 0; j < n; ++j)
            row += r.weights[j] * f(xi, mid2 + half2 * r.nodes[j]);
        sum += r.weights[i] * row;
    }
    return sum * half1 * half2;
}

Real gl_panel3(const Fn3& f, const Real& a1, const Real& b1, const Real& a2, const Real& b2,
               const Real& a3, const Real& b3, int n, long prec) {
    const Rule& r = gauss_legendre(n, prec);
    Real mid1 = (a1 + b1) / 2, half1 = (b1 - a1) / 2;
    Real mid2 = (a2 + b2) / 2, half2 = (b2 - a2) / 2;
    Real mid3 = (a3 + b3) / 2, half3 = (b3 - a3) / 2;
    Real sum(0L, prec);
    for (int i = 0; i < n; ++i) {
        Real xi = mid1 + half1 * r.nodes[i];
        Real plane(0L, prec);
        for (int j = 0; j < n; ++j) {
            Real xj = mid2 + half2 * r.nodes[j];
            Real row(0L, prec);
            for (int k = 0; k < n; ++k)
                row += r.weights[k] * f(xi, xj, mid3 + half3 * r.nodes[k]);
            plane += r.weights[j] * row;
        }
        sum += r.weights[i] * plane;
    }
    return sum * half1 * half2 * half3;
}

} // namespace

Real integrate2(const Fn2& f, const Real& a1, const Real& b1, const Real& a2, const Real& b2,
                long prec, long rel_tol_bits, int n0, int max_doublings) {
    Real prev = gl_panel2(f, a1, b1, a2, b2, n0, prec);
    int n = n0;
    for (int d = 0; d < max_doublings; ++d) {
        n *= 2;
        Real cur = gl_panel2(f, a1, b1, a2, b2, n, prec);
        if (close_enough(cur, prev, prec, rel_tol_bits)) return cur;
        prev = cur;
    }
    throw convergence_error("integrate2: refinement did not converge");
}

Real integrate3(const Fn3& f, const Real& a1, const Real& b1, const Real& a2, const Real& b2,
                const Real& a3, const Real& b3, long prec, long rel_tol_bits, int n0,
                int max_doublings) {
    Real prev = gl_panel3(f, a1, b1, a2, b2, a3, b3, n0, prec);
    int n = n0;
    for (int d = 0; d < max_doublings; ++d) {
        n *= 2;
        Real cur = gl_panel3(f, a1, b1, a2, b2, a3, b3, n, prec);
        if (close_enough(cur, prev, prec, rel_tol_bits)) return cur;
        prev = cur;
    }
    throw convergence_error("integrate3: refinement did not converge");
}

Real periodic_trapezoid(const Fn1& f, const Real& a, const Real& period, long prec,
                        long rel_tol_bits, int n0, int max_doublings, double scale_floor) {
    int n = n0;
    Real h = period / n;
    Real sum(0L, prec);
    for (int i = 0; i < n; ++i) sum += f(a + h * i);
    Real prev = sum * h;
    for (int d = 0; d < max_doublings; ++d) {
        // add midpoints only
        Real add(0L, prec);
        for (int i = 0; i < n; ++i) add += f(a + h * i + h / 2);
        sum += add;
        n *= 2;
        h = period / n;
        Real cur = sum * h;
        if (close_enough(cur, prev, prec, rel_tol_bits, scale_floor)) return cur;
        prev = cur;
    }
    throw convergence_error("periodic_trapezoid: refinement did not converge");
}

Real periodic_trapezoid2(const Fn2& f, const Real& a, const Real& period, long prec,
                         long rel_tol_bits, int n0, int max_doublings) {
    int n = n0;
    auto full = [&](int m) {
        Real h = period / m;
        Real sum(0L, prec);
        for (int i = 0; i < m; ++i) {
            Real xi = a + h * i;
            for (int j = 0; j < m; ++j) sum += f(xi, a + h * j);
        }
        return sum * h * h;
    };
    Real prev = full(n);
    for (int d = 0; d < max_doublings; ++d) {
        n *= 2;
        Real cur = full(n);
        if (close_enough(cur, prev, prec, rel_tol_bits)) return cur;
        prev = cur;
    }
    throw convergence_error("periodic_trapezoid2: refinement did not converge");
}

} // namespace quad
} // namespace ising
