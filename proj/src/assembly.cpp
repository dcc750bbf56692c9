#include "fractrans/assembly.hpp"

#include "fractrans/errors.hpp"
#include "fractrans/kernels.hpp"
#include "fractrans/quadrature.hpp"

#include <cmath>

namespace fractrans {

CoefficientField make_coefficients(double s1, double s2, double s3) {
    if (s1 == 0.0 || s2 == 0.0)
        throw ConfigError("coefficients: sigma1 and sigma2 must be nonzero");
    return {s1, s2, s3};
}

SourceTerm make_source(double alpha) {
    if (!(alpha > -0.5))
        throw DomainError("source: alpha must exceed -1/2");
    return {alpha};
}

DenseMatrix assemble_old(const InterfaceMesh& mesh, const CoefficientField& c,
                         double s) {
    const long N = mesh.interior_count();
    const long M = mesh.m_index;
    const KernelParams p = make_kernel_params(mesh.h, s);
    const KernelValueSet v = eval_H_family(p);
    const double s1 = c.sigma1, s2 = c.sigma2, s3 = c.sigma3;
    const double sum14 = v.H1 + v.H2 + v.H3 + v.H4;
    const double diag_off = -v.H3 + 2.0 * (v.H5 + v.H6) + v.H7;
    const double cs2 = 0.5 * fractional_constant(s);

    DenseMatrix A(N, MatrixKind::Old);
    for (long i = 1; i <= N; ++i) {
        for (long j = i; j <= N; ++j) {
            const long k = j - i;
            double e;
            if (k == 0) {
                if (i == M)
                    e = (s1 + s2) * (v.H1 + v.H3) + 2.0 * s3 * (v.H2 + v.H4);
                else if (i + 1 == M)
                    e = (s1 + s3) * (v.H1 + v.H2) + 2.0 * s1 * (v.H3 + v.H4);
                else if (i - 1 == M)
                    e = (s2 + s3) * (v.H1 + v.H2) + 2.0 * s2 * (v.H3 + v.H4);
                else if (i - 1 > M)
                    e = 2.0 * s2 * sum14 +
                        (s3 - s2) * eval_S1(p, mesh.node(i) - mesh.interface());
                else // x_{i+1} < b
                    e = 2.0 * s1 * sum14 +
                        (s3 - s1) * eval_S1(p, mesh.interface() - mesh.node(i));
            } else if (k == 1) {
                if (i == M)
                    e = -s2 * v.H3 + (s2 + s3) * (v.H5 + v.H6) + s3 * v.H7;
                else if (i + 1 == M)
                    e = -s1 * v.H3 + (s1 + s3) * (v.H5 + v.H6) + s3 * v.H7;
                else if (i > M)
                    e = s2 * diag_off -
                        (s3 - s2) * eval_S2(p, mesh.node(i + 1) - mesh.interface());
                else // x_{i+1} < b
                    e = s1 * diag_off -
                        (s3 - s1) * eval_S2(p, mesh.interface() - mesh.node(i));
            } else {
                if (i == M)
                    e = s3 * eval_L1(p, k) + s2 * eval_L2(p, k);
                else if (j == M)
                    e = s3 * eval_L1(p, k) + s1 * eval_L2(p, k);
                else {
                    const double sh = (j < M) ? s1 : (i > M) ? s2 : s3;
                    e = sh * (eval_L1(p, k) + eval_L2(p, k));
                }
            }
            A(i - 1, j - 1) = cs2 * e;
            A(j - 1, i - 1) = cs2 * e;
        }
    }
    return A;
}

DenseMatrix assemble_subdomain(const InterfaceMesh& mesh, int which,
                               double sigma_k, double s) {
    if (which != 1 && which != 2)
        throw ConfigError("assemble_subdomain: which must be 1 or 2");
    const long M = mesh.m_index;
    const long size = (which == 1) ? M - 1 : mesh.interior_count() - M;
    if (size < 1)
        throw ConfigError("assemble_subdomain: subdomain has no interior node");
    const KernelParams p = make_kernel_params(mesh.h, s);
    const double cs2 = 0.5 * fractional_constant(s);
    DenseMatrix A(size, MatrixKind::Subdomain);
    for (long k = 0; k < size; ++k) {
        const double e = sigma_k * cs2 * bicher_entry(p, k);
        for (long i = 0; i + k < size; ++i) {
            A(i, i + k) = e;
            A(i + k, i) = e;
        }
    }
    return A;
}

double cstar_semi_analytic(double b, double sigma1, double sigma2, double s) {
    const FractionalLifting l = make_fractional_lifting(b, s);
    // Same-side exterior weight: x in I1 sees only (-inf, 0], x in I2 only
    // [1, inf); the cross-side exterior pairs carry sigma3 = 0.
    const double e1 = graded_integrate(
        [&](double x) {
            const double f = eval_phi_s(l, x);
            return f * f * std::pow(x, -2.0 * s);
        },
        0.0, b, true);
    const double e2 = graded_integrate(
        [&](double x) {
            const double f = eval_phi_s(l, x);
            return f * f * std::pow(1.0 - x, -2.0 * s);
        },
        b, 1.0, false);
    const double alpha1 =
        fractional_constant(s) * (sigma1 * e1 + sigma2 * e2) / (2.0 * s);
    return alpha1 + alpha2_closed_form(b, sigma1, sigma2, s);
}

double cstar_degeneracy_scale(double b, double sigma1, double sigma2, double s) {
    return std::abs(cstar_semi_analytic(b, std::abs(sigma1), std::abs(sigma2), s));
}

CouplingData coupling_vector_and_scalars(const InterfaceMesh& mesh,
                                         const CoefficientField& c,
                                         const FractionalLifting& l) {
    if (c.sigma3 != 0.0)
        throw ConfigError("coupling: requires sigma3 = 0");
    if (mesh.interface() != l.b)
        throw ConfigError("coupling: mesh interface and lifting b differ");
    const long N = mesh.interior_count();
    const long M = mesh.m_index;
    const DenseMatrix A = assemble_old(mesh, c, l.s);
    const std::vector<double> w = interpolant_coeffs(mesh, l);

    CouplingData out;
    out.D.assign(static_cast<std::size_t>(N), 0.0);
    double ch = 0.0;
    for (long i = 0; i < N; ++i) {
        double di = 0.0;
        for (long j = 0; j < N; ++j)
            di += A(i, j) * w[static_cast<std::size_t>(j)];
        ch += w[static_cast<std::size_t>(i)] * di;
        if (i + 1 != M) out.D[static_cast<std::size_t>(i)] = di;
    }
    out.c_h = ch;
    out.c_star = cstar_semi_analytic(l.b, c.sigma1, c.sigma2, l.s);

    const double scale = cstar_degeneracy_scale(l.b, c.sigma1, c.sigma2, l.s);
    if (std::abs(out.c_star) <= 1e-10 * scale)
        throw SolvabilityError("interface equation degenerate: c* ~ 0");
    return out;
}

namespace {

DenseMatrix assemble_reconstructed(const InterfaceMesh& mesh,
                                   const CoefficientField& c, double s,
                                   bool with_coupling) {
    if (c.sigma3 != 0.0)
        throw ConfigError("reconstructed matrix: requires sigma3 = 0");
    const long N = mesh.interior_count();
    const long M = mesh.m_index;
    const FractionalLifting l = make_fractional_lifting(mesh.interface(), s);
    DenseMatrix K(N, with_coupling ? MatrixKind::Bordered : MatrixKind::BlockDiag);

    const DenseMatrix A1 = assemble_subdomain(mesh, 1, c.sigma1, s);
    const DenseMatrix A2 = assemble_subdomain(mesh, 2, c.sigma2, s);
    for (long i = 0; i < A1.order(); ++i)
        for (long j = 0; j < A1.order(); ++j)
            K(i, j) = A1(i, j);
    for (long i = 0; i < A2.order(); ++i)
        for (long j = 0; j < A2.order(); ++j)
            K(M + i, M + j) = A2(i, j);

    const CouplingData cd = coupling_vector_and_scalars(mesh, c, l);
    K(M - 1, M - 1) = cd.c_star;
    if (with_coupling) {
        for (long i = 0; i < N; ++i) {
            if (i + 1 == M) continue;
            K(i, M - 1) = cd.D[static_cast<std::size_t>(i)];
            K(M - 1, i) = cd.D[static_cast<std::size_t>(i)];
        }
    }
    return K;
}

} // namespace

DenseMatrix assemble_bordered(const InterfaceMesh& mesh,
                              const CoefficientField& c, double s) {
    return assemble_reconstructed(mesh, c, s, true);
}

DenseMatrix assemble_block_diag(const InterfaceMesh& mesh,
                                const CoefficientField& c, double s) {
    return assemble_reconstructed(mesh, c, s, false);
}

DenseMatrix assemble_local(const InterfaceMesh& mesh,
                           const CoefficientField& c) {
    const long N = mesh.interior_count();
    const long M = mesh.m_index;
    DenseMatrix A(N, MatrixKind::LocalTridiag);
    // element e = (x_e, x_{e+1}) lies left of b iff e < M
    const auto sig = [&](long e) { return e < M ? c.sigma1 : c.sigma2; };
    for (long i = 1; i <= N; ++i) {
        A(i - 1, i - 1) = (sig(i - 1) + sig(i)) / mesh.h;
        if (i < N) {
            A(i - 1, i) = -sig(i) / mesh.h;
            A(i, i - 1) = -sig(i) / mesh.h;
        }
    }
    return A;
}

LoadVector hat_load_vector(const InterfaceMesh& mesh, const SourceTerm& f) {
    const long N = mesh.interior_count();
    const double al = f.alpha;
    LoadVector F;
    F.entries.assign(static_cast<std::size_t>(N), 0.0);
    const auto powa = [&](double x, double e) { return x == 0.0 ? 0.0 : std::pow(x, e); };
    for (long j = 1; j <= N; ++j) {
        const double a = mesh.node(j - 1), m = mesh.node(j), c = mesh.node(j + 1);
        // rising ramp on (a, m): int x^al (x - a)
        const double P = (powa(m, al + 2.0) - powa(a, al + 2.0)) / (al + 2.0) -
                         a * (powa(m, al + 1.0) - powa(a, al + 1.0)) / (al + 1.0);
        // falling ramp on (m, c): int x^al (c - x)
        const double Q = c * (powa(c, al + 1.0) - powa(m, al + 1.0)) / (al + 1.0) -
                         (powa(c, al + 2.0) - powa(m, al + 2.0)) / (al + 2.0);
        F.entries[static_cast<std::size_t>(j - 1)] = (P + Q) / mesh.h;
    }
    return F;
}

double integral_f_phi(const SourceTerm& f, double b) {
    const double al = f.alpha;
    // (1/b) int_0^b x^{al+1} + (1/(1-b)) int_b^1 x^al (1 - x)
    const double left = std::pow(b, al + 1.0) / (al + 2.0);
    const double right = ((1.0 - std::pow(b, al + 1.0)) / (al + 1.0) -
                          (1.0 - std::pow(b, al + 2.0)) / (al + 2.0)) /
                         (1.0 - b);
    return left + right;
}

double integral_f_phi_s(const SourceTerm& f, const FractionalLifting& l) {
    const double al = f.alpha, b = l.b, s = l.s;
    const double left = std::pow(b, al + 1.0) / (al + s + 1.0);
    const double right =
        graded_integrate(
            [&](double x) { return std::pow(x, al) * std::pow(1.0 - x, s); },
            b, 1.0, false) /
        std::pow(1.0 - b, s);
    return left + right;
}

} // namespace fractrans
