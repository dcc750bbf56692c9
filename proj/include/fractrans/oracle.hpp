#pragma once

#include "fractrans/assembly.hpp"
#include "fractrans/mesh.hpp"

namespace fractrans {

struct OracleOptions {
    double rel_tol = 1e-8;
    long max_evals = 1000000; // integrand evaluations per entry
};

// Brute-force value of the old-model entry (i, j), 1-based interior node
// indices, including the C(s)/2 prefactor. Never touches the closed-form
// kernel code: exterior inner integrals are reduced analytically to the
// (1/2s) distance powers, the interior double integral is evaluated through
// the t = y - x substitution with per-panel polynomial identification for
// the singular panel and adaptive Gauss elsewhere.
double oracle_entry(const InterfaceMesh& mesh, long i, long j,
                    const CoefficientField& c, double s,
                    const OracleOptions& opts = {});

enum class LiftingChoice { Classical, Fractional };

struct PhiQuantities {
    double phi1, phi2;           // Gagliardo(I_i x I_i) + 2 int psi^2 w (full w)
    double gagliardo1, gagliardo2; // interior Gagliardo parts alone
    double c_star;               // side-field bilinear value a(psi, psi)
};

// Direct quadrature of the Phi_i solvability quantities and of c*.
// Requires s in (1/2, 1).
PhiQuantities oracle_phi_quantities(double b, double sigma1, double sigma2,
                                    double s, LiftingChoice lifting,
                                    const OracleOptions& opts = {});

} // namespace fractrans
