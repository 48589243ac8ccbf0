#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace cliffver {

using cd = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using IMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr double kDefaultTol = 1e-9;

struct IllConditioned : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Frobenius norm, the Hilbert-Schmidt norm at finite rank.
template <typename Derived>
double hs_norm(const Eigen::MatrixBase<Derived>& m) {
    return m.norm();
}

std::vector<double> singular_values(const CMat& m);

// Number of singular values <= tol (absolute threshold).
int kernel_dim(const CMat& m, double tol);

// As kernel_dim, but refuses to decide when a singular value falls inside the
// guard band (tol, guard*tol]; dimension counts feeding parity bits use this.
int kernel_dim_guarded(const CMat& m, double tol, double guard = 1e3);

// Orthonormal basis of the numerical kernel, as columns.
CMat kernel_basis(const CMat& m, double tol);

int rank_svd(const CMat& m, double tol);

// Matrix literals: complex matrices as nested arrays of [re, im] pairs,
// integer matrices as nested integer arrays.
nlohmann::json cmat_to_json(const CMat& m);
CMat cmat_from_json(const nlohmann::json& j);
nlohmann::json imat_to_json(const IMat& m);
IMat imat_from_json(const nlohmann::json& j);

}  // namespace cliffver
