#include "cliffver/lagrangian.hpp"

#include "cliffver/rng.hpp"

namespace cliffver {

double SubLagrangian::frame_defect() const {
    const int r = rank();
    if (r == 0) return 0.0;
    double d = (frame.adjoint() * frame - CMat::Identity(r, r)).cwiseAbs().maxCoeff();
    return std::max(d, (frame.transpose() * frame).cwiseAbs().maxCoeff());
}

void SubLagrangian::validate(double tol) const {
    if (frame.rows() != real_dim && rank() > 0)
        throw std::invalid_argument("sub-Lagrangian: frame rows != real_dim");
    if (defect() < 0) throw std::invalid_argument("sub-Lagrangian: frame too large for ambient");
    if (frame_defect() > tol)
        throw std::invalid_argument("sub-Lagrangian: frame not orthonormal isotropic within tolerance");
}

PolarizedSpace SubLagrangian::to_polarized() const {
    if (defect() != 0) throw std::invalid_argument("to_polarized: defect must be 0");
    PolarizedSpace p;
    p.real_dim = real_dim;
    p.frame = frame;
    return p;
}

double equivalence_distance(const SubLagrangian& l1, const SubLagrangian& l2) {
    if (l1.real_dim != l2.real_dim)
        throw std::invalid_argument("equivalence_distance: ambient dimension mismatch");
    return hs_norm(l1.projector() - l2.projector());
}

int intersection_parity(const SubLagrangian& l1, const SubLagrangian& l2, double tol) {
    if (l1.real_dim != l2.real_dim)
        throw std::invalid_argument("intersection_parity: ambient dimension mismatch");
    if (l1.defect() != 0 || l2.defect() != 0)
        throw std::invalid_argument("intersection_parity: full Lagrangians required (defect 0)");
    const int d = l1.real_dim;
    CMat p1bar = l1.projector().conjugate();  // projector onto conj(L1)
    CMat p2 = l2.projector();
    CMat stacked(2 * d, d);
    stacked.topRows(d) = CMat::Identity(d, d) - p1bar;
    stacked.bottomRows(d) = CMat::Identity(d, d) - p2;
    int dim = kernel_dim_guarded(stacked, tol);
    return dim % 2;
}

int skew_index(const SubLagrangian& l, double tol) {
    CMat p = l.projector();
    CMat j = cd(0, 1) * (p - p.conjugate());
    int dim = kernel_dim_guarded(j, tol);
    return dim % 2;
}

SubLagrangian complete_sublagrangian(const SubLagrangian& l, std::uint64_t seed, double tol) {
    l.validate(tol);
    int defect = l.defect();
    if (defect == 0) return l;

    SubLagrangian base = l;
    if (defect % 2 == 1) {
        // grow the ambient by one real coordinate; it joins K
        base.real_dim = l.real_dim + 1;
        base.frame = CMat::Zero(base.real_dim, l.rank());
        base.frame.topRows(l.real_dim) = l.frame;
        defect += 1;
    }
    const int d = base.real_dim;
    CMat p = base.frame.cols() > 0 ? CMat(base.frame * base.frame.adjoint()) : CMat::Zero(d, d);
    CMat pk_c = CMat::Identity(d, d) - p - p.conjugate();
    if (pk_c.imag().cwiseAbs().maxCoeff() > 1e-8)
        throw std::runtime_error("complete_sublagrangian: K projector not real");
    RMat pk = pk_c.real();

    // real orthonormal basis of K, Gram-Schmidt over projected coordinate axes
    RMat kbasis(d, defect);
    int got = 0;
    for (int col = 0; col < d && got < defect; ++col) {
        RVec v = pk.col(col);
        for (int j = 0; j < got; ++j) v -= kbasis.col(j).dot(v) * kbasis.col(j);
        double nrm = v.norm();
        if (nrm > 1e-7) {
            kbasis.col(got++) = v / nrm;
        }
    }
    if (got != defect) throw std::runtime_error("complete_sublagrangian: K basis extraction failed");

    if (seed != 0) {
        Rng rng(seed);
        kbasis = kbasis * rng.orthogonal(defect, +1);
    }

    SubLagrangian out;
    out.real_dim = d;
    out.frame = CMat::Zero(d, base.rank() + defect / 2);
    out.frame.leftCols(base.rank()) = base.frame;
    const double s = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < defect / 2; ++j)
        out.frame.col(base.rank() + j) =
            s * (kbasis.col(2 * j).cast<cd>() - cd(0, 1) * kbasis.col(2 * j + 1).cast<cd>());
    out.validate(std::max(tol, 1e-8));
    return out;
}

}  // namespace cliffver
