#include "fractrans/kernels.hpp"

#include "fractrans/errors.hpp"

#include <cmath>
#include <limits>

namespace fractrans {

namespace {

// (base)^(e) for base >= 0 via exp(e log base); 0^e = 0 for e > 0.
double rpow(double base, double e) {
    if (base == 0.0) return 0.0;
    return std::exp(e * std::log(base));
}

double hscale(double h, double s) { return rpow(h, 1.0 - 2.0 * s); }

bool on_half_branch(double s) { return std::abs(s - 0.5) <= kHalfBranchTol; }

// H(1, s); unbounded at s = 1/2.
double H_norm(double s) {
    const double d = (1.0 - 2.0 * s);
    if (d == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / (2.0 * s * (1.0 - s) * d * (3.0 - 2.0 * s));
}

} // namespace

KernelParams make_kernel_params(double h, double s) {
    if (!(h > 0.0) || !(h <= 1.0))
        throw DomainError("kernel params: h must lie in (0, 1]");
    if (!(s > 0.0) || !(s < 1.0))
        throw DomainError("kernel params: s must lie in (0, 1)");
    return {h, s, on_half_branch(s)};
}

double fractional_constant(double s) {
    if (!(s > 0.0) || !(s < 1.0))
        throw DomainError("fractional_constant: s must lie in (0, 1)");
    // Gamma(1-s) = Gamma(2-s)/(1-s) keeps the s->1 decay explicit.
    return (1.0 - s) * std::exp2(2.0 * s) * s * std::tgamma(s + 0.5) /
           (std::sqrt(M_PI) * std::tgamma(2.0 - s));
}

KernelValueSet eval_H_family(const KernelParams& p) {
    const double s = p.s;
    const double sc = hscale(p.h, s);
    KernelValueSet v{};
    v.H = sc * H_norm(s);
    v.H1 = sc / (s * (3.0 - 2.0 * s));
    v.H3 = sc / ((1.0 - s) * (3.0 - 2.0 * s));
    // H5 = H (1-2s) and H6 = 2H (1-2s) [...] are regular: the pole cancels.
    v.H5 = sc / (2.0 * s * (1.0 - s) * (3.0 - 2.0 * s));
    v.H6 = sc * (s - 2.0 + std::exp2(1.0 - 2.0 * s)) /
           (s * (1.0 - s) * (3.0 - 2.0 * s));
    if (p.half_branch) {
        v.H2 = sc * (-5.0 + 8.0 * std::log(2.0));
        v.H4 = sc * (3.0 - 4.0 * std::log(2.0));
        v.H7 = sc * (1.0 - 16.0 * std::log(2.0) + 9.0 * std::log(3.0));
    } else {
        const double Hn = H_norm(s);
        v.H2 = sc * 2.0 * Hn * (-2.0 * s * s + 7.0 * s - 7.0 + std::exp2(3.0 - 2.0 * s));
        v.H4 = sc * 2.0 * Hn * (2.0 * s * s - 5.0 * s + 4.0 - std::exp2(2.0 - 2.0 * s));
        v.H7 = sc * Hn *
               (4.0 * s * s - s * (14.0 - std::exp2(4.0 - 2.0 * s)) + 13.0 +
                rpow(3.0, 3.0 - 2.0 * s) - 5.0 * std::exp2(3.0 - 2.0 * s));
    }
    return v;
}

double eval_S1(const KernelParams& p, double r) {
    if (!(r > p.h))
        throw DomainError("eval_S1: requires r > h (off the interface cell)");
    const double s = p.s;
    const double u = r / p.h; // normalized distance, h = 1 internally
    const double sc = hscale(p.h, s);
    if (p.half_branch) {
        return sc * (-2.0 * std::log(u - 1.0) * (1.0 - u) * (1.0 - u) +
                     2.0 * (1.0 + u) * (1.0 + u) * std::log(1.0 + u) -
                     8.0 * u * (std::log(u) + 0.5));
    }
    return sc * 2.0 * H_norm(s) *
           (rpow(1.0 + u, 3.0 - 2.0 * s) +
            2.0 * rpow(u, 2.0 - 2.0 * s) * (2.0 * s - 3.0) -
            rpow(u - 1.0, 3.0 - 2.0 * s));
}

double eval_S2(const KernelParams& p, double r) {
    if (!(r > p.h))
        throw DomainError("eval_S2: requires r > h (off the interface cell)");
    const double s = p.s;
    const double u = r / p.h;
    const double sc = hscale(p.h, s);
    if (p.half_branch) {
        return sc * (2.0 * u * (1.0 - u) * std::log(u - 1.0) +
                     2.0 * u * std::log(u) * (u - 1.0) + (1.0 - 2.0 * u));
    }
    return sc * H_norm(s) *
           (rpow(u, 2.0 - 2.0 * s) * (2.0 * s - 3.0 + 2.0 * u) +
            rpow(u - 1.0, 2.0 - 2.0 * s) * (2.0 * s - 1.0 - 2.0 * u));
}

double eval_L1(const KernelParams& p, long k) {
    if (k < 2) throw DomainError("eval_L1: requires k >= 2");
    const double s = p.s;
    const double K = static_cast<double>(k);
    const double sc = hscale(p.h, s);
    if (p.half_branch) {
        const double lkm1 = (k == 2) ? 0.0 : std::log(K - 1.0);
        return sc * ((-K * K + 1.0) * lkm1 + (K + 2.0) * (K + 2.0) * std::log(K + 2.0) +
                     (-3.0 * K * K - 8.0 * K - 5.0) * std::log(K + 1.0) +
                     3.0 * K * (K + 4.0 / 3.0) * std::log(K));
    }
    const double a = 3.0 - 2.0 * s, c = 2.0 - 2.0 * s;
    return sc * H_norm(s) *
           (3.0 * rpow(K, a) - 2.0 * rpow(K + 1.0, a) + rpow(K + 2.0, a) -
            (K - 2.0 * s + 2.0) * rpow(K - 1.0, c) +
            (-4.0 * s + 6.0) * rpow(K, c) -
            (K - 2.0 * s + 4.0) * rpow(K + 1.0, c));
}

double eval_L2(const KernelParams& p, long k) {
    if (k < 2) throw DomainError("eval_L2: requires k >= 2");
    const double s = p.s;
    const double K = static_cast<double>(k);
    const double sc = hscale(p.h, s);
    if (p.half_branch) {
        if (k == 2)
            return sc * (4.0 * std::log(2.0) - 3.0 * std::log(3.0));
        return sc * ((K - 2.0) * (K - 2.0) * std::log(K - 2.0) +
                     (-3.0 * K * K + 8.0 * K - 5.0) * std::log(K - 1.0) +
                     (-K * K + 1.0) * std::log(K + 1.0) +
                     3.0 * K * (K - 4.0 / 3.0) * std::log(K));
    }
    const double a = 3.0 - 2.0 * s, c = 2.0 - 2.0 * s;
    return sc * H_norm(s) *
           (rpow(K - 2.0, a) - 2.0 * rpow(K - 1.0, a) + 3.0 * rpow(K, a) -
            (K + 2.0 * s - 4.0) * rpow(K - 1.0, c) +
            (4.0 * s - 6.0) * rpow(K, c) -
            (K + 2.0 * s - 2.0) * rpow(K + 1.0, c));
}

double bicher_entry(const KernelParams& p, long k) {
    if (k < 0) throw DomainError("bicher_entry: requires k >= 0");
    const double s = p.s;
    const double sc = hscale(p.h, s);
    if (p.half_branch) {
        const double l2 = std::log(2.0), l3 = std::log(3.0);
        if (k == 0) return sc * 8.0 * l2;
        if (k == 1) return sc * (9.0 * l3 - 16.0 * l2);
        if (k == 2) return sc * (56.0 * l2 - 36.0 * l3);
        const double K = static_cast<double>(k);
        return sc * ((K - 2.0) * (K - 2.0) * std::log(K - 2.0) -
                     4.0 * (K - 1.0) * (K - 1.0) * std::log(K - 1.0) +
                     6.0 * K * K * std::log(K) -
                     4.0 * (K + 1.0) * (K + 1.0) * std::log(K + 1.0) +
                     (K + 2.0) * (K + 2.0) * std::log(K + 2.0));
    }
    const double Hn = H_norm(s), a = 3.0 - 2.0 * s;
    if (k == 0) return sc * Hn * (std::exp2(4.0 - 2.0 * s) - 8.0);
    if (k == 1)
        return sc * Hn * (rpow(3.0, a) + 7.0 - std::exp2(5.0 - 2.0 * s));
    const double K = static_cast<double>(k);
    return sc * Hn *
           (6.0 * rpow(K, a) + rpow(K + 2.0, a) + rpow(K - 2.0, a) -
            4.0 * rpow(K + 1.0, a) - 4.0 * rpow(K - 1.0, a));
}

} // namespace fractrans
