#pragma once

#include "fractrans/assembly.hpp"

namespace fractrans {

// Closed-form solution of -(sigma u')' = x^alpha, u(0) = u(1) = 0 with
// sigma jumping at b. Exists away from the critical contrast
// |sigma2|/sigma1 = (1-b)/b.
struct LocalExactSolution {
    double b, sigma1, sigma2, alpha;
    double lambda;
    bool ill_conditioned; // within 1e-6 of the critical contrast

    double value(double x) const;
    double deriv(double x) const;
    double interface_value() const; // u(b)
};

LocalExactSolution build_exact(double b, double sigma1, double sigma2,
                               double alpha);

// (int f phi) / c_tilde; also asserts agreement with build_exact's u(b) to
// 1e-10, which pins the two independent routes against each other.
double interface_value_identity(double b, double sigma1, double sigma2,
                                const SourceTerm& f);

} // namespace fractrans
