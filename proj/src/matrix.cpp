#include "cliffver/matrix.hpp"

#include <Eigen/SVD>
#include <algorithm>

namespace cliffver {

std::vector<double> singular_values(const CMat& m) {
    if (m.rows() == 0 || m.cols() == 0) return {};
    Eigen::BDCSVD<CMat> svd(m);
    const auto& sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

int kernel_dim(const CMat& m, double tol) {
    if (m.cols() == 0) return 0;
    if (m.rows() == 0) return static_cast<int>(m.cols());
    auto sv = singular_values(m);
    int rank = 0;
    for (double s : sv)
        if (s > tol) ++rank;
    return static_cast<int>(m.cols()) - rank;
}

int kernel_dim_guarded(const CMat& m, double tol, double guard) {
    auto sv = singular_values(m);
    for (double s : sv) {
        if (s > tol && s <= guard * tol)
            throw IllConditioned("ill-conditioned parity: singular value " + std::to_string(s) +
                                 " inside guard band (" + std::to_string(tol) + ", " +
                                 std::to_string(guard * tol) + "]");
    }
    return kernel_dim(m, tol);
}

CMat kernel_basis(const CMat& m, double tol) {
    if (m.cols() == 0) return CMat(0, 0);
    if (m.rows() == 0) return CMat::Identity(m.cols(), m.cols());
    Eigen::BDCSVD<CMat> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > tol) ++rank;
    return svd.matrixV().rightCols(m.cols() - rank);
}

int rank_svd(const CMat& m, double tol) { return static_cast<int>(m.cols()) - kernel_dim(m, tol); }

nlohmann::json cmat_to_json(const CMat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

CMat cmat_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("complex matrix literal: expected array of rows");
    Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    Eigen::Index cols = rows > 0 ? static_cast<Eigen::Index>(j.at(0).size()) : 0;
    CMat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& row = j.at(i);
        if (static_cast<Eigen::Index>(row.size()) != cols)
            throw std::invalid_argument("complex matrix literal: ragged rows");
        for (Eigen::Index k = 0; k < cols; ++k) {
            const auto& e = row.at(k);
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("complex matrix literal: entries must be [re, im]");
            m(i, k) = cd(e.at(0).get<double>(), e.at(1).get<double>());
        }
    }
    return m;
}

nlohmann::json imat_to_json(const IMat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

IMat imat_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("integer matrix literal: expected array of rows");
    Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    Eigen::Index cols = rows > 0 ? static_cast<Eigen::Index>(j.at(0).size()) : 0;
    IMat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& row = j.at(i);
        if (static_cast<Eigen::Index>(row.size()) != cols)
            throw std::invalid_argument("integer matrix literal: ragged rows");
        for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = row.at(k).get<long long>();
    }
    return m;
}

}  // namespace cliffver
