#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <cmath>

namespace cliffver {

// Counter-based generator: every draw is a splitmix64 hash of (seed, counter),
// so a (seed, call-index) pair maps to the same value on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double normal() {
        double u1 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Eigen::MatrixXd gaussian_matrix(int rows, int cols) {
        Eigen::MatrixXd m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = normal();
        return m;
    }

    Eigen::MatrixXcd gaussian_complex_matrix(int rows, int cols) {
        Eigen::MatrixXcd m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = std::complex<double>(normal(), normal());
        return m;
    }

    Eigen::MatrixXd skew_matrix(int d) {
        Eigen::MatrixXd a = gaussian_matrix(d, d);
        return (a - a.transpose()) / 2.0;
    }

    // Haar-ish orthogonal matrix with prescribed determinant sign (+1 or -1).
    Eigen::MatrixXd orthogonal(int d, int det_sign = +1) {
        Eigen::MatrixXd a = gaussian_matrix(d, d);
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
        Eigen::MatrixXd q = qr.householderQ();
        Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (int j = 0; j < d; ++j)
            if (r(j, j) < 0) q.col(j) = -q.col(j);
        double det = q.determinant();
        if ((det_sign > 0 && det < 0) || (det_sign < 0 && det > 0)) q.col(d - 1) = -q.col(d - 1);
        return q;
    }

    // Cayley transform of a scaled skew matrix: exactly orthogonal, det +1,
    // close to the identity for small eps.
    Eigen::MatrixXd near_identity_orthogonal(int d, double eps) {
        Eigen::MatrixXd s = eps * skew_matrix(d);
        Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
        return (id - s).partialPivLu().solve(id + s);
    }

  private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace cliffver
