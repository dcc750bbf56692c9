#include "fractrans/oracle.hpp"

#include "fractrans/errors.hpp"
#include "fractrans/kernels.hpp"
#include "fractrans/lifting.hpp"
#include "fractrans/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace fractrans {

namespace {

// Side-of-interface coefficient: determined only by which side of b the two
// points lie on (the convention the closed forms integrate).
double sigma_side(double x, double y, double b, const CoefficientField& c) {
    if (x < b && y < b) return c.sigma1;
    if (x > b && y > b) return c.sigma2;
    return c.sigma3;
}

struct EvalBudget {
    long used = 0;
    long cap;
    void charge(long n, const char* where) {
        used += n;
        if (used > cap)
            throw ConvergenceError(std::string("oracle budget exhausted in ") + where, 1.0);
    }
};

// Inner x-integral at fixed gap t:
//   C(t) = int sigma(x, x+t) (phi_i(x)-phi_i(x+t)) (phi_j(x)-phi_j(x+t)) dx.
// Piecewise quadratic in x between the breakpoints {nodes} u {nodes - t};
// 3-point Gauss per piece is exact.
class PairSlice {
public:
    PairSlice(const InterfaceMesh& mesh, long i, long j,
              const CoefficientField& c)
        : mesh_(mesh), i_(i), j_(j), c_(c),
          lo_node_(std::min(i, j) - 1), hi_node_(std::max(i, j) + 1) {}

    double operator()(double t, EvalBudget& budget) const {
        const double lo = std::max(0.0, mesh_.node(lo_node_) - t);
        const double hi = std::min(1.0 - t, mesh_.node(hi_node_));
        if (hi <= lo) return 0.0;
        std::vector<double> pts;
        pts.reserve(static_cast<std::size_t>(2 * mesh_.n_cells + 4));
        pts.push_back(lo);
        pts.push_back(hi);
        for (long m = 0; m <= mesh_.n_cells; ++m) {
            const double xm = mesh_.node(m);
            if (xm > lo && xm < hi) pts.push_back(xm);
            const double xs = xm - t;
            if (xs > lo && xs < hi) pts.push_back(xs);
        }
        std::sort(pts.begin(), pts.end());
        const GaussRule g3 = gauss_rule(3);
        const double b = mesh_.interface();
        double acc = 0.0;
        long evals = 0;
        for (std::size_t p = 0; p + 1 < pts.size(); ++p) {
            const double a = pts[p], e = pts[p + 1];
            if (e - a < 1e-16) continue;
            const double mid = 0.5 * (a + e), half = 0.5 * (e - a);
            const double sg = sigma_side(mid, mid + t, b, c_);
            if (sg == 0.0) continue;
            double part = 0.0;
            for (int q = 0; q < 3; ++q) {
                const double x = mid + half * g3.x[q];
                const double y = x + t;
                const double pi = hat_value(mesh_, i_, x) - hat_value(mesh_, i_, y);
                const double pj = hat_value(mesh_, j_, x) - hat_value(mesh_, j_, y);
                part += g3.w[q] * pi * pj;
            }
            acc += sg * half * part;
            evals += 3;
        }
        budget.charge(evals, "pair slice");
        return acc;
    }

private:
    const InterfaceMesh& mesh_;
    long i_, j_;
    CoefficientField c_;
    long lo_node_, hi_node_;
};

struct AdaptiveResult {
    double value = 0.0;
    double err = 0.0;
};

// Adaptive bisection with Gauss-12, comparing a panel against its two
// halves.
template <class F>
AdaptiveResult adaptive_gauss(F&& f, double a, double b, double tol,
                              EvalBudget& budget, int depth = 0) {
    const GaussRule g = gauss_rule(12);
    const double whole = gauss_integrate(f, a, b, g);
    const double mid = 0.5 * (a + b);
    const double halves =
        gauss_integrate(f, a, mid, g) + gauss_integrate(f, mid, b, g);
    budget.charge(36, "adaptive panel");
    const double diff = std::abs(whole - halves);
    if (diff <= tol || depth >= 24)
        return {halves, diff};
    AdaptiveResult l = adaptive_gauss(f, a, mid, 0.5 * tol, budget, depth + 1);
    AdaptiveResult r = adaptive_gauss(f, mid, b, 0.5 * tol, budget, depth + 1);
    return {l.value + r.value, l.err + r.err};
}

} // namespace

double oracle_entry(const InterfaceMesh& mesh, long i, long j,
                    const CoefficientField& c, double s,
                    const OracleOptions& opts) {
    const long N = mesh.interior_count();
    if (i < 1 || i > N || j < 1 || j > N)
        throw ConfigError("oracle_entry: index out of range");
    const double h = mesh.h;
    const long k = std::labs(j - i);
    EvalBudget budget{0, opts.max_evals};
    PairSlice slice(mesh, i, j, c);

    double value = 0.0;
    double err = 0.0;
    double scale = 0.0;

    // --- interior I x I part: 2 int t^{-1-2s} C(t) dt ---
    const double t_min = (k >= 2) ? (k - 2) * h : 0.0;
    const double t_max = std::min(1.0, (k >= 2) ? (k + 2) * h : 1.0);
    long first_panel = static_cast<long>(std::lround(t_min / h));
    const long last_panel = static_cast<long>(std::lround(t_max / h));
    if (t_min == 0.0) {
        // On (0, h) the slice is exactly A (t/h)^2 + B (t/h)^3: identify the
        // two coefficients and integrate against t^{-1-2s} in closed form.
        const double C1 = slice(0.5 * h, budget);
        const double C2 = slice(h, budget);
        const double A = 8.0 * C1 - C2;
        const double B = 2.0 * C2 - 8.0 * C1;
        const double fit_scale = std::abs(C1) + std::abs(C2) + 1e-300;
        double resid = 0.0;
        for (double tau : {0.25, 0.75}) {
            const double model = A * tau * tau + B * tau * tau * tau;
            resid = std::max(resid, std::abs(slice(tau * h, budget) - model));
        }
        if (resid > 1e-9 * fit_scale)
            throw ConvergenceError("oracle: singular-panel slice is not cubic",
                                   resid / fit_scale);
        const double part = std::pow(h, -2.0 * s) *
                            (A / (2.0 - 2.0 * s) + B / (3.0 - 2.0 * s));
        value += 2.0 * part;
        scale += 2.0 * std::abs(part);
        err += 2.0 * resid * std::pow(h, -2.0 * s);
        first_panel = 1;
    }
    for (long m = first_panel; m < last_panel; ++m) {
        const double a = m * h, bb = (m + 1) * h;
        const auto f = [&](double t) {
            return std::pow(t, -1.0 - 2.0 * s) * slice(t, budget);
        };
        AdaptiveResult r =
            adaptive_gauss(f, a, bb, 0.125 * opts.rel_tol * (scale + 1e-300), budget);
        value += 2.0 * r.value;
        err += 2.0 * r.err;
        scale += 2.0 * std::abs(r.value);
    }

    // --- exterior part: the inner integral over R \ I is the analytic
    // distance power, leaving a 1D integral over the shared support ---
    const double b = mesh.interface();
    const long lo_cell = std::max(std::max(i, j) - 1, 0L);
    const long hi_cell = std::min(std::min(i, j) + 1, mesh.n_cells);
    for (long cell = lo_cell; cell < hi_cell; ++cell) {
        const double a = mesh.node(cell), e = mesh.node(cell + 1);
        const auto f = [&](double x) {
            const double p = hat_value(mesh, i, x) * hat_value(mesh, j, x);
            if (p == 0.0) return 0.0;
            const double cl = x < b ? c.sigma1 : c.sigma3;
            const double cr = x < b ? c.sigma3 : c.sigma2;
            return p * (cl * std::pow(x, -2.0 * s) +
                        cr * std::pow(1.0 - x, -2.0 * s));
        };
        double part;
        if (cell == 0)
            part = graded_integrate(f, a, e, true, 60, 12);
        else if (cell == mesh.n_cells - 1)
            part = graded_integrate(f, a, e, false, 60, 12);
        else {
            AdaptiveResult r =
                adaptive_gauss(f, a, e, 0.125 * opts.rel_tol * (scale + 1e-300), budget);
            part = r.value;
            err += r.err / s;
        }
        budget.charge(60 * 12, "exterior cell");
        value += part / s;
        scale += std::abs(part) / s;
    }

    if (scale > 0.0 && err > opts.rel_tol * scale)
        throw ConvergenceError("oracle_entry: tolerance not reached", err / scale);
    return 0.5 * fractional_constant(s) * value;
}

namespace {

struct SubdomainPiece {
    std::function<double(double)> f;  // lifting on (0, T), singular end at 0
    std::function<double(double)> df;
    double T;
};

// Gagliardo energy over (0,T)^2 of a profile with derivative blow-up at 0:
// split off the alpha t^2 model (alpha = int f'^2) so the remaining
// t-integrand is bounded; the model tail integrates in closed form. This is
// what keeps the quadrature honest as s -> 1, where the kernel mass
// concentrates at the diagonal.
double gagliardo_energy(const SubdomainPiece& p, double s, int levels) {
    const double alpha =
        graded_integrate([&](double x) { const double d = p.df(x); return d * d; },
                         0.0, p.T, true, levels + 24, 12);
    const auto slice = [&](double t) {
        return graded_integrate(
            [&](double x) {
                const double d = p.f(x + t) - p.f(x);
                return d * d;
            },
            0.0, p.T - t, true, levels, 12);
    };
    const double remainder = graded_integrate(
        [&](double t) {
            return (slice(t) - alpha * t * t) * std::pow(t, -1.0 - 2.0 * s);
        },
        0.0, p.T, true, std::min(levels, 45), 7);
    return 2.0 * (alpha * std::pow(p.T, 2.0 - 2.0 * s) / (2.0 - 2.0 * s) + remainder);
}

} // namespace

PhiQuantities oracle_phi_quantities(double b, double sigma1, double sigma2,
                                    double s, LiftingChoice lifting,
                                    const OracleOptions& opts) {
    if (!(s > 0.5) || !(s < 1.0))
        throw DomainError("oracle_phi_quantities: s must lie in (1/2, 1)");
    // Both subdomains are mapped so the interface sits at the far end and
    // the domain boundary (the singular end of phi^s') at 0.
    SubdomainPiece p1, p2;
    p1.T = b;
    p2.T = 1.0 - b;
    if (lifting == LiftingChoice::Classical) {
        p1.f = [b](double x) { return x / b; };
        p1.df = [b](double) { return 1.0 / b; };
        p2.f = [b](double u) { return u / (1.0 - b); };
        p2.df = [b](double) { return 1.0 / (1.0 - b); };
    } else {
        p1.f = [b, s](double x) { return std::pow(x / b, s); };
        p1.df = [b, s](double x) { return s * std::pow(x, s - 1.0) / std::pow(b, s); };
        p2.f = [b, s](double u) { return std::pow(u / (1.0 - b), s); };
        p2.df = [b, s](double u) {
            return s * std::pow(u, s - 1.0) / std::pow(1.0 - b, s);
        };
    }

    const auto compute = [&](int levels) {
        // Exterior weights. Full omega for the Phi_i of the weak T-coercivity
        // condition; same-side weight for the model-facing c*. Under either
        // subdomain map the near boundary sits at u = 0 and the far one at
        // u = 1, so one integrand form serves both pieces.
        const auto ext_full = [&](const SubdomainPiece& p) {
            return graded_integrate_both(
                [&](double u) {
                    const double f = p.f(u);
                    const double near = std::pow(u, -2.0 * s);
                    const double far = std::pow(1.0 - u, -2.0 * s);
                    return f * f * (near + far) / (2.0 * s);
                },
                0.0, p.T, levels, 12);
        };
        const auto ext_side = [&](const SubdomainPiece& p) {
            return graded_integrate_both(
                [&](double u) {
                    const double f = p.f(u);
                    return f * f * std::pow(u, -2.0 * s) / (2.0 * s);
                },
                0.0, p.T, levels, 12);
        };

        const double g1 = gagliardo_energy(p1, s, levels);
        const double g2 = gagliardo_energy(p2, s, levels);
        PhiQuantities out;
        out.gagliardo1 = g1;
        out.gagliardo2 = g2;
        out.phi1 = g1 + 2.0 * ext_full(p1);
        out.phi2 = g2 + 2.0 * ext_full(p2);
        out.c_star = 0.5 * fractional_constant(s) *
                     (sigma1 * (g1 + 2.0 * ext_side(p1)) +
                      sigma2 * (g2 + 2.0 * ext_side(p2)));
        return out;
    };

    const PhiQuantities coarse = compute(42);
    const PhiQuantities fine = compute(60);
    const double drift = std::max(
        std::abs(fine.phi1 - coarse.phi1) / std::abs(fine.phi1),
        std::max(std::abs(fine.phi2 - coarse.phi2) / std::abs(fine.phi2),
                 std::abs(fine.c_star - coarse.c_star) /
                     (std::abs(fine.c_star) + 1e-300)));
    if (drift > opts.rel_tol)
        throw ConvergenceError("oracle_phi_quantities: tolerance not reached",
                               drift);
    return fine;
}

} // namespace fractrans
