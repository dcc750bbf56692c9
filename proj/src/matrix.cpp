#include "fractrans/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace fractrans {

namespace {

void put_g17(std::ostream& os, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}

} // namespace

double DenseMatrix::inf_norm() const {
    double best = 0.0;
    for (long i = 0; i < n_; ++i) {
        double row = 0.0;
        for (long j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
        if (row > best) best = row;
    }
    return best;
}

double DenseMatrix::max_asymmetry() const {
    double scale = 0.0, worst = 0.0;
    for (long i = 0; i < n_; ++i)
        for (long j = 0; j < n_; ++j) {
            scale = std::max(scale, std::abs((*this)(i, j)));
            worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
        }
    return scale > 0.0 ? worst / scale : 0.0;
}

void DenseMatrix::write_csv(std::ostream& os) const {
    for (long i = 0; i < n_; ++i) {
        for (long j = 0; j < n_; ++j) {
            if (j) os << ',';
            put_g17(os, (*this)(i, j));
        }
        os << '\n';
    }
}

void LoadVector::write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ',';
        put_g17(os, entries[i]);
    }
    os << '\n';
}

} // namespace fractrans
