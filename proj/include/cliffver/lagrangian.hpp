#pragma once

#include "cliffver/fock.hpp"
#include "cliffver/matrix.hpp"

namespace cliffver {

// Isotropic subspace of the complexified ambient space, spanned by an
// orthonormal frame; defect = dim of K = (L + conj L)^perp.
struct SubLagrangian {
    int real_dim = 0;
    CMat frame;  // real_dim x r, orthonormal, F^T F = 0

    int rank() const { return static_cast<int>(frame.cols()); }
    int defect() const { return real_dim - 2 * rank(); }
    CMat projector() const { return frame * frame.adjoint(); }

    double frame_defect() const;
    void validate(double tol = 1e-9) const;

    static SubLagrangian from_polarized(const PolarizedSpace& p) { return {p.real_dim, p.frame}; }
    PolarizedSpace to_polarized() const;  // requires defect 0
};

// || P_{L1} - P_{L2} ||_HS; finite rank makes every pair equivalent, the
// value is the distance being reported.
double equivalence_distance(const SubLagrangian& l1, const SubLagrangian& l2);

// dim(conj(L1) /\ L2) mod 2 for full Lagrangians, via the kernel of the
// stacked complement projectors.  Aborts on guard-band singular values.
int intersection_parity(const SubLagrangian& l1, const SubLagrangian& l2, double tol = kDefaultTol);

// Parity of dim ker J for J = i(P_L - P_{conj L}); equals defect mod 2.
int skew_index(const SubLagrangian& l, double tol = kDefaultTol);

// Extends L to a full Lagrangian by pairing an orthonormal real basis of K
// (coordinate-ordered Gram-Schmidt, rotated by a seeded det +1 rotation when
// seed != 0).  Odd defect appends one ambient coordinate first.
SubLagrangian complete_sublagrangian(const SubLagrangian& l, std::uint64_t seed = 0,
                                     double tol = kDefaultTol);

}  // namespace cliffver
