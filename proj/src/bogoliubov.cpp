#include "cliffver/bogoliubov.hpp"

#include <Eigen/Eigenvalues>
#include <bit>

namespace cliffver {

namespace {

void require_orthogonal(const RMat& g, int dim, double tol) {
    if (g.rows() != dim || g.cols() != dim)
        throw std::invalid_argument("orthogonal map has wrong dimension");
    double defect = (g.transpose() * g - RMat::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (defect > tol)
        throw std::invalid_argument("map is not orthogonal within tolerance (defect " +
                                    std::to_string(defect) + ")");
}

void normalize_phase(CMat& u) {
    const double cutoff = 1e-8 * u.cwiseAbs().maxCoeff();
    for (Eigen::Index r = 0; r < u.rows(); ++r)
        for (Eigen::Index c = 0; c < u.cols(); ++c)
            if (std::abs(u(r, c)) > cutoff) {
                u *= std::conj(u(r, c)) / std::abs(u(r, c));
                return;
            }
}

int decide_parity(const CMat& u, const CMat& grading, double tol) {
    double comm = (u * grading - grading * u).norm();
    double anti = (u * grading + grading * u).norm();
    double small = std::min(comm, anti), large = std::max(comm, anti);
    double scale = std::sqrt(static_cast<double>(u.rows()));
    if (small > tol * scale * 100 || large < 0.5)
        throw InhomogeneousImplementer("implementer fails both homogeneity tests (comm " +
                                       std::to_string(comm) + ", anti " + std::to_string(anti) + ")");
    return comm <= anti ? 0 : 1;
}

CMat dense_intertwiner(const FockRep& f, const RMat& g, double) {
    const int d = f.dim;
    const int nn = d * d;
    // Gram matrix of the stacked system U pi(v) - pi(gv) U = 0 assembled from
    // Kronecker blocks of the d x d generators.
    CMat gram = CMat::Zero(nn, nn);
    auto add_kron = [&](const CMat& a, const CMat& b, cd w) {
        // gram += w * kron(a, b)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                cd aij = a(i, j);
                if (aij == cd(0, 0)) continue;
                gram.block(i * d, j * d, d, d) += w * aij * b;
            }
    };
    const CMat id = CMat::Identity(d, d);
    CMat gc = g.cast<cd>();
    for (int j = 0; j < 2 * f.n; ++j) {
        CVec v = (j < f.n) ? CVec(f.space.frame.col(j))
                           : CVec(f.space.frame.col(j - f.n).conjugate());
        CMat a = f.clifford(v);
        CMat b = f.clifford(gc * v);
        // K = kron(a^T, id) - kron(id, b); gram += K^dagger K
        CMat at = a.transpose();
        add_kron((at.adjoint() * at).eval(), id, 1.0);
        add_kron(id, (b.adjoint() * b).eval(), 1.0);
        add_kron(at.adjoint(), b, -1.0);
        add_kron(at, b.adjoint(), -1.0);
    }
    Eigen::SelfAdjointEigenSolver<CMat> es(gram);
    const auto& ev = es.eigenvalues();
    double scale = std::max(1.0, ev(nn - 1));
    if (ev(0) > 1e-10 * scale)
        throw NoImplementerSolution("intertwiner system has no nullspace (lambda0 " +
                                    std::to_string(ev(0)) + ")");
    if (nn > 1 && ev(1) < 1e-6 * scale)
        throw NoImplementerSolution("intertwiner nullspace is not one-dimensional");
    CVec x = es.eigenvectors().col(0);
    CMat u(d, d);
    for (int c = 0; c < d; ++c) u.col(c) = x.segment(c * d, d);  // column-major vec
    return u;
}

CMat vacuum_transport_intertwiner(const FockRep& f, const RMat& g, double tol) {
    const int d = f.dim;
    const int n = f.n;
    CMat gc = g.cast<cd>();
    // transformed vacuum: joint kernel of pi(g conj f_j)
    CMat stacked(n * d, d);
    for (int j = 0; j < n; ++j)
        stacked.middleRows(j * d, d) = f.clifford(gc * f.space.frame.col(j).conjugate());
    CMat kern = kernel_basis(stacked, tol * std::sqrt(static_cast<double>(n * d)));
    if (kern.cols() != 1)
        throw NoImplementerSolution("transformed vacuum is not unique (kernel dim " +
                                    std::to_string(kern.cols()) + ")");
    CVec vac = kern.col(0);
    vac.normalize();

    std::vector<CMat> create_g(n);
    for (int j = 0; j < n; ++j) create_g[j] = f.clifford(gc * f.space.frame.col(j));

    CMat u(d, d);
    const cd inv_c = 1.0 / cd(kCreateScale, 0);
    for (unsigned mask = 0; mask < static_cast<unsigned>(d); ++mask) {
        CVec col = vac;
        cd scale = 1.0;
        // apply creators with the largest index innermost, matching
        // pi(f_{j1})...pi(f_{jk}) |0> = c^k |mask> for j1 < ... < jk
        for (int j = n - 1; j >= 0; --j) {
            if (mask & (1u << j)) {
                col = create_g[j] * col;
                scale *= inv_c;
            }
        }
        u.col(mask) = scale * col;
    }
    return u;
}

}  // namespace

double restricted_defect(const RMat& g, const SubLagrangian& l, double tol) {
    require_orthogonal(g, l.real_dim, tol);
    CMat p = l.projector();
    CMat gc = g.cast<cd>();
    return hs_norm(gc * p - p * gc);
}

Implementer solve_implementer(const FockRep& f, const RMat& g, ImplementerMethod method, double tol) {
    require_orthogonal(g, f.space.real_dim, tol);
    if (method == ImplementerMethod::Auto)
        method = (f.n <= 3) ? ImplementerMethod::Dense : ImplementerMethod::VacuumTransport;
    CMat u = (method == ImplementerMethod::Dense) ? dense_intertwiner(f, g, tol)
                                                  : vacuum_transport_intertwiner(f, g, tol);
    // an intertwiner between irreducible actions is proportional to a unitary
    u *= std::sqrt(static_cast<double>(f.dim)) / u.norm();
    double unit_defect = (u * u.adjoint() - CMat::Identity(f.dim, f.dim)).norm();
    if (unit_defect > 1e-6 * f.dim)
        throw NoImplementerSolution("solution is not unitary (defect " + std::to_string(unit_defect) + ")");
    normalize_phase(u);
    Implementer imp;
    imp.unitary = u;
    imp.parity = decide_parity(u, f.grading, tol);
    imp.phase_convention = "first nonzero entry in row-major order real positive";
    return imp;
}

int implementer_parity(const FockRep& f, const RMat& g, double tol) {
    return solve_implementer(f, g, ImplementerMethod::Auto, tol).parity;
}

cd cocycle_phase(const FockRep& f, const RMat& g, const RMat& h, double tol) {
    Implementer ug = solve_implementer(f, g, ImplementerMethod::Auto, tol);
    Implementer uh = solve_implementer(f, h, ImplementerMethod::Auto, tol);
    Implementer ugh = solve_implementer(f, RMat(g * h), ImplementerMethod::Auto, tol);
    CMat w = ug.unitary * uh.unitary * ugh.unitary.adjoint();
    cd lambda = w.trace() / static_cast<double>(f.dim);
    double defect = (w - lambda * CMat::Identity(f.dim, f.dim)).norm();
    if (defect > 1e-6 * f.dim)
        throw NoImplementerSolution("product of implementers is not scalar against U_{gh}");
    return lambda / std::abs(lambda);
}

double intertwiner_residual(const FockRep& f, const RMat& g, const Implementer& imp) {
    CMat gc = g.cast<cd>();
    double worst = 0.0;
    for (int j = 0; j < 2 * f.n; ++j) {
        CVec v = (j < f.n) ? CVec(f.space.frame.col(j))
                           : CVec(f.space.frame.col(j - f.n).conjugate());
        CMat lhs = imp.unitary * f.clifford(v) * imp.unitary.adjoint();
        worst = std::max(worst, (lhs - f.clifford(gc * v)).norm());
    }
    return worst;
}

}  // namespace cliffver
