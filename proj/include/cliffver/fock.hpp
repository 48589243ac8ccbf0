#pragma once

#include <vector>

#include "cliffver/matrix.hpp"

namespace cliffver {

// Real inner-product space of even dimension 2n with a distinguished
// orthonormal Lagrangian frame inside its complexification.  Coordinates are
// standard, conjugation is entrywise; the pairing entering the generator
// relation is B(v, w) = v^T w (conjugate-linear-first inner product applied
// to (conj v, w)).
struct PolarizedSpace {
    int real_dim = 0;
    CMat frame;  // real_dim x n, orthonormal columns spanning L, F^T F = 0

    int modes() const { return static_cast<int>(frame.cols()); }

    // frame f_j = (e_{2j} - i e_{2j+1}) / sqrt(2), 0-based coordinates
    static PolarizedSpace standard(int n);

    // largest violation of orthonormality / isotropy
    double frame_defect() const;
    void validate(double tol = 1e-9) const;
};

// Exterior-algebra representation on 2^n basis states indexed by subset
// bitmasks (bit j <-> frame vector f_j, lexicographic order).
//
// Generator normalization, fixed by solving the one-mode constraint system:
//   pi(f)      = sqrt(2)  * (wedge by f)
//   pi(conj f) = -sqrt(2) * (contraction against <f, .>)
// so that pi(v)pi(w) + pi(w)pi(v) = -2 B(v,w) and the adjoint realizes the
// generator star up to the forced global sign: adjoint(pi(v)) = -pi(conj v).
// (c * c' = -2 with |c| = |c'| admits no sign-free solution.)
struct FockRep {
    PolarizedSpace space;
    int n = 0;
    int dim = 1;                    // 2^n
    std::vector<CMat> gen_create;   // pi(f_j)
    std::vector<CMat> gen_annih;    // pi(conj f_j)
    CMat grading;                   // diag (-1)^{popcount(mask)}

    // pi(v) for v in ambient complexified coordinates; complex-linear in v
    CMat clifford(const CVec& v) const;
};

inline constexpr double kCreateScale = 1.4142135623730951;   // sqrt(2)
inline constexpr double kAnnihScale = -1.4142135623730951;   // -sqrt(2)

FockRep build_fock_rep(const PolarizedSpace& p, double tol = 1e-9);

CMat grading_operator(const FockRep& f);

struct CliffordRelationReport {
    double max_residual = 0.0;
    bool pass = false;
};

// max over spanning generator pairs of || pi(u)pi(w) + pi(w)pi(u) + 2 B(u,w) id ||
CliffordRelationReport check_clifford_relations(const FockRep& f, double tol);

// Dimension of { M : [M, pi(v)] = 0 for all generators v } and of its graded
// counterpart.  The dense path solves the stacked commutant system; the fast
// path diagonalizes against a number operator with distinct subset sums and
// counts connected components of the generator graph.
int commutant_dimension(const FockRep& f, double tol = 1e-9, bool dense = false);
int graded_commutant_dimension(const FockRep& f, double tol = 1e-9, bool dense = false);

}  // namespace cliffver
