#pragma once

#include "cliffver/fock.hpp"
#include "cliffver/lagrangian.hpp"

namespace cliffver {

struct InhomogeneousImplementer : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoImplementerSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Implementer {
    CMat unitary;
    int parity = 0;  // 0 commutes with the grading, 1 anticommutes
    std::string phase_convention;
};

enum class ImplementerMethod { Auto, Dense, VacuumTransport };

// || [g, P_L] ||_HS for orthogonal g; pre: g^T g = id within tolerance.
double restricted_defect(const RMat& g, const SubLagrangian& l, double tol = 1e-8);

// Unitary U with U pi(v) U* = pi(g v) for all v, unique up to phase.  The
// phase is normalized so the first nonzero entry in row-major order is real
// positive.  Dense: nullspace of the stacked intertwiner system via the Gram
// matrix.  VacuumTransport: transports the kernel vector of the transformed
// annihilators through generator monomials; scales to any mode count.
Implementer solve_implementer(const FockRep& f, const RMat& g,
                              ImplementerMethod method = ImplementerMethod::Auto,
                              double tol = 1e-8);

int implementer_parity(const FockRep& f, const RMat& g, double tol = 1e-8);

// lambda(g, h) with U_g U_h = lambda * U_{gh} under the fixed normalization
cd cocycle_phase(const FockRep& f, const RMat& g, const RMat& h, double tol = 1e-8);

// largest || U pi(v) U* - pi(gv) || over frame generators
double intertwiner_residual(const FockRep& f, const RMat& g, const Implementer& imp);

}  // namespace cliffver
