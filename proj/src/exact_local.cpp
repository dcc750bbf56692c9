#include "fractrans/exact_local.hpp"

#include "fractrans/errors.hpp"
#include "fractrans/lifting.hpp"

#include <cmath>

namespace fractrans {

double LocalExactSolution::value(double x) const {
    const double a2 = (alpha + 1.0) * (alpha + 2.0);
    if (x <= b)
        return -std::pow(x, alpha + 2.0) / (sigma1 * a2) + lambda * x;
    return (1.0 - std::pow(x, alpha + 2.0)) / (sigma2 * a2) +
           lambda * (sigma1 / sigma2) * (x - 1.0);
}

double LocalExactSolution::deriv(double x) const {
    const double a1 = alpha + 1.0;
    if (x <= b)
        return -std::pow(x, a1) / (sigma1 * a1) + lambda;
    return -std::pow(x, a1) / (sigma2 * a1) + lambda * sigma1 / sigma2;
}

double LocalExactSolution::interface_value() const { return value(b); }

LocalExactSolution build_exact(double b, double sigma1, double sigma2,
                               double alpha) {
    if (!(b > 0.0) || !(b < 1.0))
        throw ConfigError("build_exact: b must lie in (0, 1)");
    if (!(alpha > -0.5))
        throw DomainError("build_exact: alpha must exceed -1/2");
    const double den = sigma1 * (1.0 - b) + sigma2 * b;
    const double scale = std::abs(sigma1) * (1.0 - b) + std::abs(sigma2) * b;
    if (std::abs(den) <= 1e-12 * scale)
        throw CriticalContrastError(
            "critical contrast |sigma2|/sigma1 = (1-b)/b: local operator not injective");
    const double ba2 = std::pow(b, alpha + 2.0);
    LocalExactSolution u{};
    u.b = b;
    u.sigma1 = sigma1;
    u.sigma2 = sigma2;
    u.alpha = alpha;
    u.lambda = (sigma1 * (1.0 - ba2) + sigma2 * ba2) /
               (sigma1 * (alpha + 1.0) * (alpha + 2.0) * den);
    u.ill_conditioned = std::abs(den) <= 1e-6 * scale;
    return u;
}

double interface_value_identity(double b, double sigma1, double sigma2,
                                const SourceTerm& f) {
    const CTilde ct = c_tilde(b, sigma1, sigma2);
    if (ct.critical)
        throw CriticalContrastError("interface_value_identity: critical contrast");
    const double via_load = integral_f_phi(f, b) / ct.value;
    const double via_exact =
        build_exact(b, sigma1, sigma2, f.alpha).interface_value();
    if (std::abs(via_load - via_exact) >
        1e-10 * (1.0 + std::abs(via_exact)))
        throw std::logic_error(
            "interface value identity violated: c~ u(b) != int f phi");
    return via_load;
}

} // namespace fractrans
