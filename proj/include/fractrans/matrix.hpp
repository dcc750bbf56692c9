#pragma once

#include <iosfwd>
#include <vector>

namespace fractrans {

enum class MatrixKind { Old, Bordered, BlockDiag, LocalTridiag, Subdomain };

// Dense row-major storage; the fractional matrices are dense by nature.
class DenseMatrix {
public:
    DenseMatrix(long n, MatrixKind kind)
        : n_(n), kind_(kind), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}

    double& operator()(long i, long j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
    double operator()(long i, long j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

    long order() const { return n_; }
    MatrixKind kind() const { return kind_; }
    const std::vector<double>& data() const { return a_; }

    double inf_norm() const;
    double max_asymmetry() const; // max |a_ij - a_ji| / max |a_ij|

    void write_csv(std::ostream& os) const; // one row per line, %.17g

private:
    long n_;
    MatrixKind kind_;
    std::vector<double> a_;
};

struct LoadVector {
    std::vector<double> entries;
    // True when the interface slot holds int f phi^s instead of a hat load.
    bool interface_is_lifting = false;

    void write_csv(std::ostream& os) const;
};

} // namespace fractrans
