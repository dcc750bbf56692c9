#include "fractrans/lifting.hpp"

#include "fractrans/errors.hpp"
#include "fractrans/kernels.hpp"

#include <cmath>

namespace fractrans {

LocalLifting make_local_lifting(double b) {
    if (!(b > 0.0) || !(b < 1.0))
        throw ConfigError("lifting: b must lie in (0, 1)");
    return {b};
}

double eval_phi(const LocalLifting& l, double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return x <= l.b ? x / l.b : (1.0 - x) / (1.0 - l.b);
}

double eval_phi_deriv(const LocalLifting& l, double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return x < l.b ? 1.0 / l.b : -1.0 / (1.0 - l.b);
}

FractionalLifting make_fractional_lifting(double b, double s) {
    if (!(b > 0.0) || !(b < 1.0))
        throw ConfigError("lifting: b must lie in (0, 1)");
    if (!(s > 0.5) || !(s < 1.0))
        throw DomainError("fractional lifting: s must lie in (1/2, 1)");
    return {b, s};
}

double eval_phi_s(const FractionalLifting& l, double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return x <= l.b ? std::pow(x / l.b, l.s)
                    : std::pow((1.0 - x) / (1.0 - l.b), l.s);
}

double eval_phi_s_deriv(const FractionalLifting& l, double x) {
    if (x == 0.0 || x == l.b || x == 1.0)
        throw DomainError("phi^s derivative undefined at {0, b, 1}");
    if (x < 0.0 || x > 1.0) return 0.0;
    if (x < l.b)
        return l.s * std::pow(x, l.s - 1.0) / std::pow(l.b, l.s);
    return -l.s * std::pow(1.0 - x, l.s - 1.0) / std::pow(1.0 - l.b, l.s);
}

CTilde c_tilde(double b, double sigma1, double sigma2) {
    if (!(b > 0.0) || !(b < 1.0))
        throw ConfigError("c_tilde: b must lie in (0, 1)");
    const double num = sigma1 * (1.0 - b) + sigma2 * b;
    const double value = num / (b * (1.0 - b));
    const double scale = std::abs(sigma1) / b + std::abs(sigma2) / (1.0 - b);
    return {value, std::abs(value) <= 1e-12 * scale};
}

double phi_ratio_classical(double b, double s) {
    if (!(s > 0.5) || !(s < 1.0))
        throw DomainError("phi_ratio_classical: s must lie in (1/2, 1)");
    if (std::abs(s - 0.5) <= kHalfBranchTol)
        throw DomainError("phi_ratio_classical: undefined at s = 1/2");
    const double bb = 1.0 - b;
    const double Q1 = std::pow(b, 3.0 - 2.0 * s) / (b * b * (1.0 - s) * (3.0 - 2.0 * s));
    const double Q2 = std::pow(bb, 3.0 - 2.0 * s) / (bb * bb * (1.0 - s) * (3.0 - 2.0 * s));
    const double den = s * (1.0 - s) * (1.0 - 2.0 * s) * (3.0 - 2.0 * s);
    const double R1 =
        std::pow(b, 1.0 - 2.0 * s) / (s * (3.0 - 2.0 * s)) +
        (std::pow(bb, 1.0 - 2.0 * s) *
             (-2.0 * b * b * s * s + 3.0 * b * b * s - b * b + 2.0 * b * s - b - 1.0) +
         1.0) /
            (b * b * den);
    const double R2 =
        std::pow(bb, 1.0 - 2.0 * s) / (s * (3.0 - 2.0 * s)) +
        (std::pow(b, 1.0 - 2.0 * s) *
             (-2.0 * b * b * s * s + 4.0 * b * s * s - 2.0 * s * s - 8.0 * b * s +
              3.0 * b * b * s + 5.0 * s + 3.0 * b - b * b - 3.0) +
         1.0) /
            (bb * bb * den);
    return (Q1 + R1) / (Q2 + R2);
}

double power_lifting_energy(double s) {
    if (!(s > 0.5) || !(s < 1.0))
        throw DomainError("power_lifting_energy: s must lie in (1/2, 1)");
    const double sn = std::sin(2.0 * M_PI * s);
    const double bracket =
        2.0 * (1.0 - s) * std::tgamma(1.0 + s) /
            (std::tgamma(1.0 + 2.0 * s) * std::tgamma(2.0 - s)) -
        1.0;
    return -1.0 / s + (2.0 * M_PI / sn) * bracket;
}

double alpha2_closed_form(double b, double sigma1, double sigma2, double s) {
    const double w =
        sigma1 * std::pow(b, 1.0 - 2.0 * s) + sigma2 * std::pow(1.0 - b, 1.0 - 2.0 * s);
    return 0.5 * fractional_constant(s) * w * power_lifting_energy(s);
}

std::vector<double> interpolant_coeffs(const InterfaceMesh& mesh,
                                       const FractionalLifting& l) {
    if (mesh.interface() != l.b)
        throw ConfigError("interpolant: mesh interface and lifting b differ");
    std::vector<double> v(static_cast<std::size_t>(mesh.interior_count()));
    for (long j = 1; j <= mesh.interior_count(); ++j)
        v[static_cast<std::size_t>(j - 1)] =
            (j == mesh.m_index) ? 1.0 : eval_phi_s(l, mesh.node(j));
    return v;
}

} // namespace fractrans
