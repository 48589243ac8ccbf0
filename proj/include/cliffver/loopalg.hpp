#pragma once

#include <map>
#include <vector>

#include "cliffver/lagrangian.hpp"
#include "cliffver/matrix.hpp"

namespace cliffver {

struct TruncationUnsafe : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finitely supported Fourier series of d x d matrices: X(t) = sum_m a_m e^{imt}.
// A pointwise real field has a_{-m} = conj(a_m); a pointwise skew field has
// a_m^T = -a_m for every m.
struct LoopMatrixField {
    int d = 0;
    std::map<int, CMat> coeffs;

    static LoopMatrixField zero(int d) { return {d, {}}; }
    // single mode a e^{-ikt} (coefficient a at index -k)
    static LoopMatrixField single_mode(const CMat& a, int k);
    static LoopMatrixField cosine(const CMat& a, int k);  // a cos(kt)
    static LoopMatrixField sine(const CMat& a, int k);    // a sin(kt)

    CMat eval(double t) const;
    LoopMatrixField derivative() const;
    LoopMatrixField commutator(const LoopMatrixField& other) const;
    LoopMatrixField operator+(const LoopMatrixField& other) const;
    LoopMatrixField scaled(cd s) const;

    int support() const;  // max |m| over nonzero coefficients
    bool is_real(double tol = 1e-12) const;
    bool is_pointwise_skew(double tol = 1e-12) const;
};

// Truncated model space: modes xi (x) e^{i nu t} with |nu| <= N (integer nu;
// for the antiperiodic variant nu runs over half-integers and there is no
// constant block).  For odd d in the periodic case one auxiliary coordinate
// is appended and joins the constant block K before completion.  The
// distinguished Lagrangian is the span of the positive modes completed over
// K by deterministic pairing (seed rotates the K basis by a det +1 rotation).
// flip_polarization exchanges L with its conjugate.
class TruncatedLoopSpace {
  public:
    TruncatedLoopSpace(int d, int cutoff, bool antiperiodic = false,
                       std::uint64_t completion_seed = 0, bool flip_polarization = false);

    // same space with the conjugate completion of the constant block; the
    // extension cocycle is evaluated as the mean over the conjugate pair,
    // which removes the completion-dependent coboundary on zero-mode chains
    TruncatedLoopSpace with_conjugate_completion() const;
    bool has_zero_mode_block() const { return !antiperiodic_; }

    int d() const { return d_; }
    int cutoff() const { return cutoff_; }
    bool antiperiodic() const { return antiperiodic_; }
    bool augmented() const { return augmented_; }
    int dim() const { return dim_; }

    // block-banded matrix of pointwise multiplication by the field, mode
    // basis; zero on the auxiliary coordinate
    struct MultOp {
        CMat matrix;
        bool edge_truncated = false;
    };
    MultOp multiplication_operator(const LoopMatrixField& x) const;

    CMat projector_L() const;
    CMat projector_Lbar() const;
    CMat complex_structure() const;  // J = i (P_L - P_Lbar)

    struct Blocks {
        CMat diag_L;      // P_L M P_L
        CMat diag_Lbar;   // P_Lbar M P_Lbar
        CMat lower;       // x = P_Lbar M P_L
        CMat upper;       // P_L M P_Lbar
    };
    Blocks block_decompose(const CMat& m) const;

    // O(dim^2) appliers used by the cocycle kernels
    CMat apply_PL_left(const CMat& m) const;
    CMat apply_PL_right(const CMat& m) const;
    CMat apply_PLbar_left(const CMat& m) const;
    CMat apply_PLbar_right(const CMat& m) const;
    CMat apply_J_left(const CMat& m) const;
    CMat apply_J_right(const CMat& m) const;

    // the positive-mode sub-Lagrangian (and its completion) in real cos/sin
    // coordinates with entrywise conjugation; small parameters only
    SubLagrangian real_sublagrangian() const;
    SubLagrangian real_completed_lagrangian() const;

    int mode_lo() const { return slot_lo_; }
    int mode_hi() const { return slot_hi_; }
    double frequency(int slot) const { return antiperiodic_ ? slot + 0.5 : slot; }
    int slot_base(int slot) const { return (slot - slot_lo_) * d_; }
    int aux_index() const { return aux_index_; }
    const CMat& k_completion_projector() const { return p0_; }

  private:
    int d_, cutoff_;
    bool antiperiodic_, augmented_, flipped_;
    bool conj_completion_ = false;
    int slot_lo_, slot_hi_;
    int dim_;
    int aux_index_ = -1;
    CMat p0_;  // completion projector on the K block (periodic case)
    std::vector<int> k_indices_;

    bool slot_in_L(int slot) const {
        double nu = frequency(slot);
        return flipped_ ? nu < 0 : nu > 0;
    }
    bool slot_in_Lbar(int slot) const {
        double nu = frequency(slot);
        return flipped_ ? nu > 0 : nu < 0;
    }
    CMat completion_projector() const { return conj_completion_ ? p0_.conjugate() : p0_; }
    CMat k_proj_L() const { return flipped_ ? completion_projector().conjugate() : completion_projector(); }
    CMat k_proj_Lbar() const { return flipped_ ? completion_projector() : completion_projector().conjugate(); }
};

struct OmegaResult {
    cd value;        // (i/2) tr(xbar y - ybar x) over the polarization blocks
    cd value_via_j;  // (1/8) tr(J [J, X] [J, Y])
    double route_disagreement;
};

// Central-extension 2-cocycle of the truncated multiplication action; both
// trace routes are evaluated and must agree.  Fields must have support
// <= cutoff/2 so every contributing chain stays inside the window.
OmegaResult cocycle_omega_imp(const LoopMatrixField& x, const LoopMatrixField& y,
                              const TruncatedLoopSpace& s, double tol = 1e-9);

// (1/2pi) Int tr(X Y') dt evaluated exactly in Fourier coefficients.
cd cocycle_omega_loop(const LoopMatrixField& x, const LoopMatrixField& y);

// (1 / 8 pi^2) tr(x [y, z]) for skew matrices; totally antisymmetric.
double cocycle_sigma(const RMat& x, const RMat& y, const RMat& z);

struct CentralIdentityResult {
    cd omega_imp;
    cd omega_loop;
    double residual;  // | 2 omega_imp + omega_loop |
};

// Checks 2 * Omega(X, Y) + omega(X, Y) = 0 for single modes X = a e^{-ikt},
// Y = b e^{-ilt} at the given cutoff.
CentralIdentityResult verify_central_identity(int d, int k, int l, const CMat& a, const CMat& b,
                                              int cutoff, std::uint64_t completion_seed = 0);

// Closed loop in the orthogonal group built from block-rotation exponential
// factors; samples and log-derivatives are exact per point.
class OrthogonalLoop {
  public:
    struct Factor {
        RMat rotation_frames;       // orthogonal Q
        std::vector<int> frequencies;  // one per 2x2 block
    };

    OrthogonalLoop(int d, std::vector<Factor> factors);
    static OrthogonalLoop constant_identity(int d) { return OrthogonalLoop(d, {}); }

    int d() const { return d_; }
    RMat value(double t) const;
    RMat log_derivative(double t) const;  // gamma^{-1} gamma'
    int max_winding() const;

  private:
    int d_;
    std::vector<Factor> factors_;
    std::vector<RMat> skew_gens_;  // Q D Q^T per factor
};

OrthogonalLoop random_orthogonal_loop(class Rng& rng, int d, int max_winding, int factors = 2);

struct DbetaResult {
    cd dbeta;       // Int tr(Xt' Yt) - tr(Yt' Xt) - tr(ld [Xt, Yt]) dt
    cd omega_bar;   // omega(gamma^{-1} X, gamma^{-1} Y) by quadrature
    cd tau_sigma;   // Int sigma(gamma^{-1} gamma', Xt, Yt) dt
    double residual;  // | dbeta + 4 pi omega_bar + 8 pi^2 tau_sigma |
};

// Composite-trapezoid verification of d beta = -4 pi omega_bar - 8 pi^2 tau(sigma)
// at points samples; exact below Nyquist for trigonometric-polynomial data.
DbetaResult verify_dbeta_identity(const OrthogonalLoop& gamma, const LoopMatrixField& x,
                                  const LoopMatrixField& y, int points = 2048,
                                  double orth_tol = 1e-9);

}  // namespace cliffver
