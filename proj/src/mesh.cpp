#include "fractrans/mesh.hpp"

#include "fractrans/errors.hpp"

#include <cmath>
#include <numeric>

namespace fractrans {

RationalInterface make_rational_interface(long p, long q) {
    if (q <= 0 || p <= 0 || p >= q)
        throw ConfigError("interface must satisfy 0 < p/q < 1");
    const long g = std::gcd(p, q);
    return {p / g, q / g};
}

RationalInterface nearest_rational(double b, long max_den) {
    if (!(b > 0.0) || !(b < 1.0))
        throw ConfigError("interface must lie in (0, 1)");
    long best_p = 1, best_q = 2;
    double best_err = std::abs(b - 0.5);
    for (long q = 2; q <= max_den; ++q) {
        const long p = std::lround(b * static_cast<double>(q));
        if (p <= 0 || p >= q) continue;
        const double err = std::abs(b - static_cast<double>(p) / static_cast<double>(q));
        if (err < best_err - 1e-15) {
            best_err = err;
            best_p = p;
            best_q = q;
        }
    }
    return make_rational_interface(best_p, best_q);
}

InterfaceMesh build_mesh(RationalInterface b, int refinement) {
    if (refinement < 0)
        throw ConfigError("refinement must be >= 0");
    const RationalInterface r = make_rational_interface(b.p, b.q);
    if (refinement > 40 || r.q > (kMaxCells >> refinement))
        throw CapacityError("mesh exceeds the 2^16 cell cap");
    const long n = r.q << refinement;
    const long m = r.p << refinement;
    return {n, m, 1.0 / static_cast<double>(n), r.p, r.q};
}

double hat_value(const InterfaceMesh& mesh, long i, double x) {
    const double t = 1.0 - std::abs(x - mesh.node(i)) / mesh.h;
    return t > 0.0 ? t : 0.0;
}

} // namespace fractrans
