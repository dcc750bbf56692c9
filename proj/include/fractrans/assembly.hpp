#pragma once

#include "fractrans/lifting.hpp"
#include "fractrans/matrix.hpp"
#include "fractrans/mesh.hpp"

#include <vector>

namespace fractrans {

// sigma1 on I1, sigma2 on I2, sigma3 across the interface. sigma3 is 0 for
// the reconstructed models and (sigma1+sigma2)/2 for the old model by
// convention.
struct CoefficientField {
    double sigma1;
    double sigma2;
    double sigma3;
};

CoefficientField make_coefficients(double s1, double s2, double s3);

// Monomial source f(x) = x^alpha with alpha > -1/2.
struct SourceTerm {
    double alpha;
};

SourceTerm make_source(double alpha);

// Global matrix of the old model, A_old = (C(s)/2) B, with the full
// interface case analysis (diagonal 5 cases, first superdiagonal 4 cases,
// far pairs via L1/L2).
DenseMatrix assemble_old(const InterfaceMesh& mesh, const CoefficientField& c,
                         double s);

// Subdomain stiffness (which = 1 or 2) with constant coefficient sigma_k and
// homogeneous exterior condition outside I_k: Toeplitz in the constant-
// coefficient entries.
DenseMatrix assemble_subdomain(const InterfaceMesh& mesh, int which,
                               double sigma_k, double s);

struct CouplingData {
    std::vector<double> D; // D_{h,i}; slot M-1 zeroed (held by c*)
    double c_h;            // interpolant quadratic form through A_old
    double c_star;         // semi-analytic alpha1 + alpha2
};

// Requires sigma3 == 0 and s in (1/2, 1).
CouplingData coupling_vector_and_scalars(const InterfaceMesh& mesh,
                                         const CoefficientField& c,
                                         const FractionalLifting& l);

DenseMatrix assemble_bordered(const InterfaceMesh& mesh,
                              const CoefficientField& c, double s);
DenseMatrix assemble_block_diag(const InterfaceMesh& mesh,
                                const CoefficientField& c, double s);

// Standard P1 tridiagonal for -(sigma u')' with sigma jumping at b.
DenseMatrix assemble_local(const InterfaceMesh& mesh,
                           const CoefficientField& c);

// F_j = int_0^1 x^alpha phi_j dx, exact monomial antiderivatives.
LoadVector hat_load_vector(const InterfaceMesh& mesh, const SourceTerm& f);

// int f phi dx, exact.
double integral_f_phi(const SourceTerm& f, double b);

// int f phi^s dx: analytic b^{alpha+1}/(alpha+s+1) on [0,b], graded
// incomplete-Beta-type quadrature on [b,1].
double integral_f_phi_s(const SourceTerm& f, const FractionalLifting& l);

// c* = alpha1 + alpha2: exterior part by graded quadrature of
// C(s) int sigma |phi^s|^2 w with the same-side exterior weight, interior
// part from alpha2_closed_form.
double cstar_semi_analytic(double b, double sigma1, double sigma2, double s);

// Guard scale for the solvability of the interface equation.
double cstar_degeneracy_scale(double b, double sigma1, double sigma2, double s);

} // namespace fractrans
