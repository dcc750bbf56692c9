#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace fractrans {

// Gauss-Legendre rules on [-1, 1].
struct GaussRule {
    const double* x;
    const double* w;
    int n;
};

GaussRule gauss_rule(int n); // n in {3, 7, 12}

template <class F>
double gauss_integrate(F&& f, double a, double b, const GaussRule& g) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < g.n; ++i)
        acc += g.w[i] * f(mid + half * g.x[i]);
    return half * acc;
}

// Composite Gauss on geometric panels (ratio 1/2) accumulating toward one
// endpoint, with geometric-series extrapolation of the uncovered tail. The
// extrapolation is exact for pure power integrands, which is what the
// shrinking panels see.
template <class F>
double graded_integrate(F&& f, double a, double b, bool toward_a,
                        int levels = 48, int npts = 7) {
    if (!(b > a)) return 0.0;
    const GaussRule g = gauss_rule(npts);
    const double width = b - a;
    double total = 0.0;
    double prev = 0.0, last = 0.0;
    for (int l = 0; l < levels; ++l) {
        const double hi = width * std::ldexp(1.0, -l);
        const double lo = 0.5 * hi;
        const double pa = toward_a ? a + lo : b - hi;
        const double pb = toward_a ? a + hi : b - lo;
        const double part = gauss_integrate(f, pa, pb, g);
        total += part;
        prev = last;
        last = part;
    }
    if (prev != 0.0) {
        const double rho = last / prev;
        if (rho > 0.0 && rho < 0.995)
            total += last * rho / (1.0 - rho);
    }
    return total;
}

// Graded toward both endpoints: split at the midpoint.
template <class F>
double graded_integrate_both(F&& f, double a, double b, int levels = 48,
                             int npts = 7) {
    const double mid = 0.5 * (a + b);
    return graded_integrate(f, a, mid, true, levels, npts) +
           graded_integrate(f, mid, b, false, levels, npts);
}

} // namespace fractrans
