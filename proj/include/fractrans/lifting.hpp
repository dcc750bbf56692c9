#pragma once

#include "fractrans/mesh.hpp"

#include <vector>

namespace fractrans {

// Piecewise-affine interface profile: x/b on [0,b], (1-x)/(1-b) on [b,1].
struct LocalLifting {
    double b;
};

LocalLifting make_local_lifting(double b);
double eval_phi(const LocalLifting& l, double x);
double eval_phi_deriv(const LocalLifting& l, double x);

// Fractional profile (x/b)^s on [0,b], ((1-x)/(1-b))^s on [b,1]. The trace
// at b needs s > 1/2, which the reconstructed models require anyway.
struct FractionalLifting {
    double b;
    double s;
};

FractionalLifting make_fractional_lifting(double b, double s);
double eval_phi_s(const FractionalLifting& l, double x);
// Derivative ~ x^{s-1} at the endpoints: undefined at {0, b, 1}.
double eval_phi_s_deriv(const FractionalLifting& l, double x);

struct CTilde {
    double value; // (sigma1 (1-b) + sigma2 b) / (b (1-b))
    bool critical;
};

CTilde c_tilde(double b, double sigma1, double sigma2);

// (Q1+R1)/(Q2+R2) for the classical lifting; equals 1 at b = 1/2 and tends
// to (1-b)/b as s -> 1.
double phi_ratio_classical(double b, double s);

// Exact value of the unit Gagliardo energy of t -> t^s on (0,1):
//   -1/s + (2 pi / sin 2 pi s) [ 2 (1-s) Gamma(1+s) / (Gamma(1+2s) Gamma(2-s)) - 1 ].
double power_lifting_energy(double s);

// Interior Gagliardo contribution of phi^s weighted by (sigma1, sigma2):
//   (C(s)/2) [sigma1 b^{1-2s} + sigma2 (1-b)^{1-2s}] * power_lifting_energy(s).
double alpha2_closed_form(double b, double sigma1, double sigma2, double s);

// Nodal values phi^s(x_j), j = 1..N_h; entry at j = M equals 1.
std::vector<double> interpolant_coeffs(const InterfaceMesh& mesh,
                                       const FractionalLifting& l);

} // namespace fractrans
