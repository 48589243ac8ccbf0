#include "cliffver/superfactor.hpp"

#include <Eigen/QR>
#include <bit>

#include "cliffver/fock.hpp"

namespace cliffver {

namespace {

// least-squares membership test of m in span(basis)
double span_residual(const std::vector<CMat>& basis, const CMat& m) {
    const Eigen::Index nn = m.size();
    CMat a(nn, static_cast<Eigen::Index>(basis.size()));
    for (size_t k = 0; k < basis.size(); ++k)
        a.col(static_cast<Eigen::Index>(k)) = Eigen::Map<const CVec>(basis[k].data(), nn);
    CVec rhs = Eigen::Map<const CVec>(m.data(), nn);
    CVec sol = a.colPivHouseholderQr().solve(rhs);
    return (a * sol - rhs).norm();
}

struct GenView {
    const CMat* mat;
    int deg;
};

std::vector<GenView> generator_view(const GradedMatrixAlgebra& a) {
    std::vector<GenView> out;
    if (!a.generators.empty()) {
        for (size_t i = 0; i < a.generators.size(); ++i)
            out.push_back({&a.generators[i], a.generator_degree[i]});
    } else {
        for (size_t i = 0; i < a.basis.size(); ++i) out.push_back({&a.basis[i], a.degree[i]});
    }
    return out;
}

}  // namespace

void GradedMatrixAlgebra::validate(double tol) const {
    if ((grading * grading - CMat::Identity(ambient, ambient)).norm() > tol)
        throw std::invalid_argument("graded algebra: grading is not involutive");
    for (size_t k = 0; k < basis.size(); ++k) {
        double sign = degree[k] ? -1.0 : 1.0;
        if ((grading * basis[k] * grading - sign * basis[k]).norm() > tol * (1 + basis[k].norm()))
            throw std::invalid_argument("graded algebra: basis element " + std::to_string(k) +
                                        " is not homogeneous of its declared degree");
        if (span_residual(basis, basis[k].adjoint().eval()) > tol * (1 + basis[k].norm()))
            throw std::invalid_argument("graded algebra: not closed under adjoint");
    }
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            CMat prod = basis[i] * basis[j];
            if (span_residual(basis, prod) > tol * (1 + prod.norm()))
                throw std::invalid_argument("graded algebra: not closed under multiplication");
        }
}

namespace {

// Kernel of the (anti)commutation system Sum_k c_k (b_k g - sign g b_k) = 0
// over the generating set.
CenterBasis solve_center(const GradedMatrixAlgebra& a, bool graded, double tol) {
    const int kdim = a.dim();
    const Eigen::Index nn = static_cast<Eigen::Index>(a.ambient) * a.ambient;
    auto gens = generator_view(a);
    CMat sys(static_cast<Eigen::Index>(gens.size()) * nn, kdim);
    Eigen::Index row = 0;
    for (const auto& gv : gens) {
        const CMat& g = *gv.mat;
        for (int k = 0; k < kdim; ++k) {
            double sign = 1.0;
            if (graded && a.degree[k] == 1 && gv.deg == 1) sign = -1.0;
            CMat r = a.basis[k] * g - sign * g * a.basis[k];
            sys.block(row, k, nn, 1) = Eigen::Map<const CVec>(r.data(), nn);
        }
        row += nn;
    }
    // loud abort when the nullspace dimension is ambiguous at tolerance
    auto sv = singular_values(sys);
    double scale = sv.empty() ? 1.0 : std::max(1.0, sv.front());
    for (double s : sv)
        if (s > tol * scale && s < 1e3 * tol * scale)
            throw IllConditioned("center dimension ambiguous: singular value " + std::to_string(s));
    CMat kern = kernel_basis(sys, tol * scale);

    std::vector<CMat> even_parts, odd_parts;
    for (Eigen::Index c = 0; c < kern.cols(); ++c) {
        CMat m = CMat::Zero(a.ambient, a.ambient);
        for (int k = 0; k < kdim; ++k) m += kern(k, c) * a.basis[k];
        CMat ev = 0.5 * (m + a.grading * m * a.grading);
        CMat od = 0.5 * (m - a.grading * m * a.grading);
        if (ev.norm() > 1e-7) even_parts.push_back(ev);
        if (od.norm() > 1e-7) odd_parts.push_back(od);
    }
    auto prune_dependent = [&](std::vector<CMat>& v) {
        std::vector<CMat> kept;
        CMat cols(nn, 0);
        for (const auto& m : v) {
            CVec vec = Eigen::Map<const CVec>(m.data(), nn);
            if (cols.cols() > 0) {
                CVec sol = cols.colPivHouseholderQr().solve(vec);
                if ((cols * sol - vec).norm() < 1e-7 * (1 + vec.norm())) continue;
            }
            cols.conservativeResize(Eigen::NoChange, cols.cols() + 1);
            cols.col(cols.cols() - 1) = vec;
            kept.push_back(m / m.norm());
        }
        v = std::move(kept);
    };
    prune_dependent(even_parts);
    prune_dependent(odd_parts);
    return {even_parts, odd_parts};
}

}  // namespace

CenterBasis graded_center(const GradedMatrixAlgebra& a, double tol) {
    return solve_center(a, true, tol);
}

CenterBasis ungraded_center(const GradedMatrixAlgebra& a, double tol) {
    return solve_center(a, false, tol);
}

Kind classify_kind(const GradedMatrixAlgebra& a, double tol) {
    CenterBasis gc = graded_center(a, tol);
    if (gc.dim() != 1) return Kind::NotSuperFactor;
    CenterBasis uc = ungraded_center(a, tol);
    if (uc.dim() == 1) return Kind::Even;
    if (uc.dim() == 2) return Kind::Odd;
    throw std::runtime_error("inconsistent centers: graded dim 1 but ungraded dim " +
                             std::to_string(uc.dim()));
}

CMat koszul_tensor_operator(const CMat& a, const CMat& grading_a, const CMat& b, int deg_b) {
    CMat left = (deg_b % 2) ? CMat(a * grading_a) : a;
    CMat out(left.rows() * b.rows(), left.cols() * b.cols());
    for (Eigen::Index i = 0; i < left.rows(); ++i)
        for (Eigen::Index j = 0; j < left.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = left(i, j) * b;
    return out;
}

GradedMatrixAlgebra graded_tensor(const GradedMatrixAlgebra& a, const GradedMatrixAlgebra& b) {
    GradedMatrixAlgebra t;
    t.ambient = a.ambient * b.ambient;
    t.grading = koszul_tensor_operator(a.grading, a.grading, b.grading, 0);
    for (size_t i = 0; i < a.basis.size(); ++i)
        for (size_t j = 0; j < b.basis.size(); ++j) {
            t.basis.push_back(koszul_tensor_operator(a.basis[i], a.grading, b.basis[j], b.degree[j]));
            t.degree.push_back((a.degree[i] + b.degree[j]) % 2);
        }
    const CMat id_a = CMat::Identity(a.ambient, a.ambient);
    const CMat id_b = CMat::Identity(b.ambient, b.ambient);
    auto ga = generator_view(a);
    auto gb = generator_view(b);
    for (const auto& gv : ga) {
        t.generators.push_back(koszul_tensor_operator(*gv.mat, a.grading, id_b, 0));
        t.generator_degree.push_back(gv.deg);
    }
    for (const auto& gv : gb) {
        t.generators.push_back(koszul_tensor_operator(id_a, a.grading, *gv.mat, gv.deg));
        t.generator_degree.push_back(gv.deg);
    }
    return t;
}

GradedMatrixAlgebra clifford_algebra(int d) {
    if (d < 0) throw std::invalid_argument("clifford_algebra: d >= 0 required");
    const int n = (d + 1) / 2;
    FockRep f = build_fock_rep(PolarizedSpace::standard(n));
    GradedMatrixAlgebra a;
    a.ambient = f.dim;
    a.grading = f.grading;
    std::vector<CMat> gamma(d);
    for (int j = 0; j < d; ++j) {
        CVec e = CVec::Zero(f.space.real_dim);
        e(j) = 1.0;
        gamma[j] = f.clifford(e);
        a.generators.push_back(gamma[j]);
        a.generator_degree.push_back(1);
    }
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        CMat prod = CMat::Identity(f.dim, f.dim);
        for (int j = 0; j < d; ++j)
            if (mask & (1u << j)) prod = prod * gamma[j];
        a.basis.push_back(prod);
        a.degree.push_back(std::popcount(mask) % 2);
    }
    return a;
}

GradedMatrixAlgebra full_matrix_algebra(const std::vector<int>& signs) {
    const int m = static_cast<int>(signs.size());
    GradedMatrixAlgebra a;
    a.ambient = m;
    a.grading = CMat::Zero(m, m);
    for (int i = 0; i < m; ++i) a.grading(i, i) = signs[i];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            CMat e = CMat::Zero(m, m);
            e(i, j) = 1.0;
            a.basis.push_back(e);
            a.degree.push_back(signs[i] * signs[j] < 0 ? 1 : 0);
        }
    return a;
}

GradedMatrixAlgebra cc_swap_graded() {
    GradedMatrixAlgebra a;
    a.ambient = 2;
    a.grading = CMat::Zero(2, 2);
    a.grading(0, 1) = 1.0;
    a.grading(1, 0) = 1.0;
    CMat id = CMat::Identity(2, 2);
    CMat z = CMat::Zero(2, 2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    a.basis = {id, z};
    a.degree = {0, 1};
    return a;
}

GradedMatrixAlgebra cc_trivially_graded() {
    GradedMatrixAlgebra a;
    a.ambient = 2;
    a.grading = CMat::Identity(2, 2);
    CMat e0 = CMat::Zero(2, 2), e1 = CMat::Zero(2, 2);
    e0(0, 0) = 1.0;
    e1(1, 1) = 1.0;
    a.basis = {e0, e1};
    a.degree = {0, 0};
    return a;
}

GradedMatrixAlgebra m2_plus_m2_swap() {
    GradedMatrixAlgebra a;
    a.ambient = 4;
    a.grading = CMat::Zero(4, 4);
    a.grading.block(0, 2, 2, 2) = CMat::Identity(2, 2);
    a.grading.block(2, 0, 2, 2) = CMat::Identity(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CMat p = CMat::Zero(4, 4), m = CMat::Zero(4, 4);
            p(i, j) = 1.0;
            p(2 + i, 2 + j) = 1.0;
            m(i, j) = 1.0;
            m(2 + i, 2 + j) = -1.0;
            a.basis.push_back(p);
            a.degree.push_back(0);
            a.basis.push_back(m);
            a.degree.push_back(1);
        }
    return a;
}

}  // namespace cliffver
