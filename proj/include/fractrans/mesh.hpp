#pragma once

#include <cstdint>

namespace fractrans {

// Dense matrices are O(N^2) memory; cap well below desk limits.
inline constexpr long kMaxCells = 1L << 16;

// Interface location b = p/q in lowest terms. Only rational b keeps the
// on-grid condition decidable; irrational b is rejected, never snapped.
struct RationalInterface {
    long p;
    long q;
};

RationalInterface make_rational_interface(long p, long q);

// Closest p/q with q <= max_den to a requested decimal b (helper for users
// asking for e.g. b = 0.7).
RationalInterface nearest_rational(double b, long max_den = 64);

// Uniform mesh of (0,1) with nodes x_i = i*h and the interface exactly on
// node m_index. Immutable after construction.
struct InterfaceMesh {
    long n_cells;  // number of elements (N_h + 1)
    long m_index;  // M: node index of the interface
    double h;      // 1 / n_cells
    long b_num, b_den;

    double node(long i) const { return static_cast<double>(i) / static_cast<double>(n_cells); }
    double interface() const { return node(m_index); }
    long interior_count() const { return n_cells - 1; } // N_h
};

// n_cells = q * 2^refinement, M = p * 2^refinement.
InterfaceMesh build_mesh(RationalInterface b, int refinement);

// max(0, 1 - |x - x_i|/h) for interior node i.
double hat_value(const InterfaceMesh& mesh, long i, double x);

} // namespace fractrans
