#pragma once

#include <cstdint>

namespace fractrans {

// |s - 1/2| at or below this routes to the logarithmic branch; nearer than
// this the generic 1/(1-2s) expressions lose too many digits to cancellation
// while the log branch is exact at 1/2.
inline constexpr double kHalfBranchTol = 1e-7;

struct KernelParams {
    double h;
    double s;
    bool half_branch;
};

// Validates 0 < h < 1 (h = 1 allowed for normalized use), 0 < s < 1.
KernelParams make_kernel_params(double h, double s);

// The H-family of Appendix-style stiffness building blocks. All values scale
// as h^{1-2s}; H has the sign of 1/(1-2s) and is unbounded at s = 1/2 (the
// log branch never uses it directly).
struct KernelValueSet {
    double H;
    double H1, H2, H3, H4, H5, H6, H7;
};

// C(s) = 2^{2s} s Gamma(s+1/2) / (sqrt(pi) Gamma(1-s)), evaluated through
// Gamma(2-s) so the (1-s) factor is explicit near s = 1.
double fractional_constant(double s);

KernelValueSet eval_H_family(const KernelParams& p);

// Interaction of a hat at distance r > h from the interface with the far
// side: S1 weights the squared hat, S2 the product of two adjacent hats.
double eval_S1(const KernelParams& p, double r);
double eval_S2(const KernelParams& p, double r);

// Far pair couplings at node offset k >= 2; L1 is the cross-interface half,
// L2 the same-side half of the split hat at the interface.
double eval_L1(const KernelParams& p, long k);
double eval_L2(const KernelParams& p, long k);

// Constant-coefficient entry (sigma factored out): k = |j - i| >= 0.
double bicher_entry(const KernelParams& p, long k);

} // namespace fractrans
