#include "cliffver/loopalg.hpp"

#include <cmath>

#include "cliffver/rng.hpp"

namespace cliffver {

LoopMatrixField LoopMatrixField::single_mode(const CMat& a, int k) {
    if (a.rows() != a.cols()) throw std::invalid_argument("field coefficient must be square");
    LoopMatrixField f;
    f.d = static_cast<int>(a.rows());
    f.coeffs[-k] = a;
    return f;
}

namespace {
void add_coeff(std::map<int, CMat>& coeffs, int m, const CMat& a) {
    auto it = coeffs.find(m);
    if (it == coeffs.end())
        coeffs[m] = a;
    else
        it->second += a;
}
}  // namespace

LoopMatrixField LoopMatrixField::cosine(const CMat& a, int k) {
    LoopMatrixField f;
    f.d = static_cast<int>(a.rows());
    add_coeff(f.coeffs, k, 0.5 * a);
    add_coeff(f.coeffs, -k, 0.5 * a);
    return f;
}

LoopMatrixField LoopMatrixField::sine(const CMat& a, int k) {
    LoopMatrixField f;
    f.d = static_cast<int>(a.rows());
    add_coeff(f.coeffs, k, cd(0, -0.5) * a);
    add_coeff(f.coeffs, -k, cd(0, 0.5) * a);
    return f;
}

CMat LoopMatrixField::eval(double t) const {
    CMat out = CMat::Zero(d, d);
    for (const auto& [m, a] : coeffs) out += std::exp(cd(0, m * t)) * a;
    return out;
}

LoopMatrixField LoopMatrixField::derivative() const {
    LoopMatrixField f;
    f.d = d;
    for (const auto& [m, a] : coeffs)
        if (m != 0) f.coeffs[m] = cd(0, m) * a;
    return f;
}

LoopMatrixField LoopMatrixField::commutator(const LoopMatrixField& other) const {
    if (d != other.d) throw std::invalid_argument("field commutator: size mismatch");
    LoopMatrixField f;
    f.d = d;
    for (const auto& [m, a] : coeffs)
        for (const auto& [k, b] : other.coeffs) {
            CMat c = a * b - b * a;
            if (c.norm() > 0) {
                auto it = f.coeffs.find(m + k);
                if (it == f.coeffs.end())
                    f.coeffs[m + k] = c;
                else
                    it->second += c;
            }
        }
    return f;
}

LoopMatrixField LoopMatrixField::operator+(const LoopMatrixField& other) const {
    if (d != other.d) throw std::invalid_argument("field sum: size mismatch");
    LoopMatrixField f = *this;
    for (const auto& [m, a] : other.coeffs) {
        auto it = f.coeffs.find(m);
        if (it == f.coeffs.end())
            f.coeffs[m] = a;
        else
            it->second += a;
    }
    return f;
}

LoopMatrixField LoopMatrixField::scaled(cd s) const {
    LoopMatrixField f;
    f.d = d;
    for (const auto& [m, a] : coeffs) f.coeffs[m] = s * a;
    return f;
}

int LoopMatrixField::support() const {
    int s = 0;
    for (const auto& [m, a] : coeffs)
        if (a.norm() > 0) s = std::max(s, std::abs(m));
    return s;
}

bool LoopMatrixField::is_real(double tol) const {
    for (const auto& [m, a] : coeffs) {
        CMat other = CMat::Zero(d, d);
        auto it = coeffs.find(-m);
        if (it != coeffs.end()) other = it->second;
        if ((other - a.conjugate()).norm() > tol * (1 + a.norm())) return false;
    }
    return true;
}

bool LoopMatrixField::is_pointwise_skew(double tol) const {
    for (const auto& [m, a] : coeffs)
        if ((a + a.transpose()).norm() > tol * (1 + a.norm())) return false;
    return true;
}

TruncatedLoopSpace::TruncatedLoopSpace(int d, int cutoff, bool antiperiodic,
                                       std::uint64_t completion_seed, bool flip_polarization)
    : d_(d), cutoff_(cutoff), antiperiodic_(antiperiodic), flipped_(flip_polarization) {
    if (d < 1 || cutoff < 1) throw std::invalid_argument("truncated loop space: d, cutoff >= 1");
    if (antiperiodic_) {
        augmented_ = false;
        slot_lo_ = -(cutoff_ + 1);  // frequencies slot + 1/2 in [-(N+1/2), N+1/2]
        slot_hi_ = cutoff_;
        dim_ = d_ * (slot_hi_ - slot_lo_ + 1);
    } else {
        augmented_ = (d_ % 2 == 1);
        slot_lo_ = -cutoff_;
        slot_hi_ = cutoff_;
        dim_ = d_ * (2 * cutoff_ + 1) + (augmented_ ? 1 : 0);
        if (augmented_) aux_index_ = dim_ - 1;
        // the constant block plus auxiliary coordinate
        for (int j = 0; j < d_; ++j) k_indices_.push_back(slot_base(0) + j);
        if (augmented_) k_indices_.push_back(aux_index_);
        const int dk = static_cast<int>(k_indices_.size());
        RMat kbasis = RMat::Identity(dk, dk);
        if (completion_seed != 0) {
            Rng rng(completion_seed);
            kbasis = rng.orthogonal(dk, +1);
        }
        CMat frame = CMat::Zero(dk, dk / 2);
        const double s = 1.0 / std::sqrt(2.0);
        for (int j = 0; j < dk / 2; ++j)
            frame.col(j) =
                s * (kbasis.col(2 * j).cast<cd>() - cd(0, 1) * kbasis.col(2 * j + 1).cast<cd>());
        p0_ = frame * frame.adjoint();
    }
}

TruncatedLoopSpace TruncatedLoopSpace::with_conjugate_completion() const {
    TruncatedLoopSpace s = *this;
    s.conj_completion_ = !s.conj_completion_;
    return s;
}

TruncatedLoopSpace::MultOp TruncatedLoopSpace::multiplication_operator(const LoopMatrixField& x) const {
    if (x.d != d_) throw std::invalid_argument("multiplication operator: field size mismatch");
    if (x.support() > 2 * cutoff_)
        throw std::invalid_argument("multiplication operator: field support exceeds 2 * cutoff");
    MultOp op;
    op.matrix = CMat::Zero(dim_, dim_);
    for (const auto& [m, a] : x.coeffs) {
        if (a.norm() == 0) continue;
        for (int n = slot_lo_; n <= slot_hi_; ++n) {
            int target = n + m;
            if (target < slot_lo_ || target > slot_hi_) {
                op.edge_truncated = true;
                continue;
            }
            op.matrix.block(slot_base(target), slot_base(n), d_, d_) += a;
        }
    }
    return op;
}

CMat TruncatedLoopSpace::projector_L() const {
    CMat p = CMat::Zero(dim_, dim_);
    for (int n = slot_lo_; n <= slot_hi_; ++n) {
        if (!antiperiodic_ && n == 0) continue;
        if (slot_in_L(n)) p.block(slot_base(n), slot_base(n), d_, d_) = CMat::Identity(d_, d_);
    }
    if (!antiperiodic_) {
        CMat pk = k_proj_L();
        for (size_t i = 0; i < k_indices_.size(); ++i)
            for (size_t j = 0; j < k_indices_.size(); ++j)
                p(k_indices_[i], k_indices_[j]) = pk(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    return p;
}

CMat TruncatedLoopSpace::projector_Lbar() const {
    CMat p = CMat::Zero(dim_, dim_);
    for (int n = slot_lo_; n <= slot_hi_; ++n) {
        if (!antiperiodic_ && n == 0) continue;
        if (slot_in_Lbar(n)) p.block(slot_base(n), slot_base(n), d_, d_) = CMat::Identity(d_, d_);
    }
    if (!antiperiodic_) {
        CMat pk = k_proj_Lbar();
        for (size_t i = 0; i < k_indices_.size(); ++i)
            for (size_t j = 0; j < k_indices_.size(); ++j)
                p(k_indices_[i], k_indices_[j]) = pk(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    return p;
}

CMat TruncatedLoopSpace::complex_structure() const {
    return cd(0, 1) * (projector_L() - projector_Lbar());
}

TruncatedLoopSpace::Blocks TruncatedLoopSpace::block_decompose(const CMat& m) const {
    if (m.rows() != dim_ || m.cols() != dim_)
        throw std::invalid_argument("block_decompose: matrix dimension mismatch");
    Blocks b;
    b.diag_L = apply_PL_left(apply_PL_right(m));
    b.diag_Lbar = apply_PLbar_left(apply_PLbar_right(m));
    b.lower = apply_PLbar_left(apply_PL_right(m));
    b.upper = apply_PL_left(apply_PLbar_right(m));
    return b;
}

namespace {
// tr(A * B) = sum_ij A_ij B_ji without forming the product
cd trace_of_product(const CMat& a, const CMat& b) {
    return (a.cwiseProduct(b.transpose())).sum();
}
}  // namespace

CMat TruncatedLoopSpace::apply_PL_left(const CMat& m) const {
    CMat out = CMat::Zero(dim_, m.cols());
    for (int n = slot_lo_; n <= slot_hi_; ++n) {
        if (!antiperiodic_ && n == 0) continue;
        if (slot_in_L(n)) out.middleRows(slot_base(n), d_) = m.middleRows(slot_base(n), d_);
    }
    if (!antiperiodic_) {
        CMat pk = k_proj_L();
        const int dk = static_cast<int>(k_indices_.size());
        CMat rows(dk, m.cols());
        for (int i = 0; i < dk; ++i) rows.row(i) = m.row(k_indices_[i]);
        CMat mixed = pk * rows;
        for (int i = 0; i < dk; ++i) out.row(k_indices_[i]) = mixed.row(i);
    }
    return out;
}

CMat TruncatedLoopSpace::apply_PLbar_left(const CMat& m) const {
    CMat out = CMat::Zero(dim_, m.cols());
    for (int n = slot_lo_; n <= slot_hi_; ++n) {
        if (!antiperiodic_ && n == 0) continue;
        if (slot_in_Lbar(n)) out.middleRows(slot_base(n), d_) = m.middleRows(slot_base(n), d_);
    }
    if (!antiperiodic_) {
        CMat pk = k_proj_Lbar();
        const int dk = static_cast<int>(k_indices_.size());
        CMat rows(dk, m.cols());
        for (int i = 0; i < dk; ++i) rows.row(i) = m.row(k_indices_[i]);
        CMat mixed = pk * rows;
        for (int i = 0; i < dk; ++i) out.row(k_indices_[i]) = mixed.row(i);
    }
    return out;
}

CMat TruncatedLoopSpace::apply_PL_right(const CMat& m) const {
    CMat out = CMat::Zero(m.rows(), dim_);
    for (int n = slot_lo_; n <= slot_hi_; ++n) {
        if (!antiperiodic_ && n == 0) continue;
        if (slot_in_L(n)) out.middleCols(slot_base(n), d_) = m.middleCols(slot_base(n), d_);
    }
    if (!antiperiodic_) {
        CMat pk = k_proj_L();
        const int dk = static_cast<int>(k_indices_.size());
        CMat cols(m.rows(), dk);
        for (int i = 0; i < dk; ++i) cols.col(i) = m.col(k_indices_[i]);
        CMat mixed = cols * pk;
        for (int i = 0; i < dk; ++i) out.col(k_indices_[i]) = mixed.col(i);
    }
    return out;
}

CMat TruncatedLoopSpace::apply_PLbar_right(const CMat& m) const {
    CMat out = CMat::Zero(m.rows(), dim_);
    for (int n = slot_lo_; n <= slot_hi_; ++n) {
        if (!antiperiodic_ && n == 0) continue;
        if (slot_in_Lbar(n)) out.middleCols(slot_base(n), d_) = m.middleCols(slot_base(n), d_);
    }
    if (!antiperiodic_) {
        CMat pk = k_proj_Lbar();
        const int dk = static_cast<int>(k_indices_.size());
        CMat cols(m.rows(), dk);
        for (int i = 0; i < dk; ++i) cols.col(i) = m.col(k_indices_[i]);
        CMat mixed = cols * pk;
        for (int i = 0; i < dk; ++i) out.col(k_indices_[i]) = mixed.col(i);
    }
    return out;
}

CMat TruncatedLoopSpace::apply_J_left(const CMat& m) const {
    CMat out = m;
    for (int n = slot_lo_; n <= slot_hi_; ++n) {
        if (!antiperiodic_ && n == 0) continue;
        cd s = slot_in_L(n) ? cd(0, 1) : cd(0, -1);
        out.middleRows(slot_base(n), d_) *= s;
    }
    if (!antiperiodic_) {
        CMat j0 = cd(0, 1) * (k_proj_L() - k_proj_Lbar());
        const int dk = static_cast<int>(k_indices_.size());
        CMat rows(dk, m.cols());
        for (int i = 0; i < dk; ++i) rows.row(i) = m.row(k_indices_[i]);
        CMat mixed = j0 * rows;
        for (int i = 0; i < dk; ++i) out.row(k_indices_[i]) = mixed.row(i);
    }
    return out;
}

CMat TruncatedLoopSpace::apply_J_right(const CMat& m) const {
    CMat out = m;
    for (int n = slot_lo_; n <= slot_hi_; ++n) {
        if (!antiperiodic_ && n == 0) continue;
        cd s = slot_in_L(n) ? cd(0, 1) : cd(0, -1);
        out.middleCols(slot_base(n), d_) *= s;
    }
    if (!antiperiodic_) {
        CMat j0 = cd(0, 1) * (k_proj_L() - k_proj_Lbar());
        const int dk = static_cast<int>(k_indices_.size());
        CMat cols(m.rows(), dk);
        for (int i = 0; i < dk; ++i) cols.col(i) = m.col(k_indices_[i]);
        CMat mixed = cols * j0;
        for (int i = 0; i < dk; ++i) out.col(k_indices_[i]) = mixed.col(i);
    }
    return out;
}

SubLagrangian TruncatedLoopSpace::real_sublagrangian() const {
    // real coordinates: [const(d) | cos_1(d) sin_1(d) | ... ] for the periodic
    // case, [cos_{1/2}(d) sin_{1/2}(d) | ... ] for the antiperiodic one
    const double s = 1.0 / std::sqrt(2.0);
    SubLagrangian l;
    if (antiperiodic_) {
        const int levels = cutoff_ + 1;
        l.real_dim = 2 * d_ * levels;
        l.frame = CMat::Zero(l.real_dim, d_ * levels);
        for (int lev = 0; lev < levels; ++lev)
            for (int j = 0; j < d_; ++j) {
                int cosi = (2 * lev) * d_ + j;
                int sini = (2 * lev + 1) * d_ + j;
                int col = lev * d_ + j;
                l.frame(cosi, col) = s;
                l.frame(sini, col) = cd(0, s);
            }
    } else {
        l.real_dim = d_ * (2 * cutoff_ + 1);
        l.frame = CMat::Zero(l.real_dim, d_ * cutoff_);
        for (int n = 1; n <= cutoff_; ++n)
            for (int j = 0; j < d_; ++j) {
                int cosi = d_ + (n - 1) * 2 * d_ + j;
                int sini = d_ + (n - 1) * 2 * d_ + d_ + j;
                int col = (n - 1) * d_ + j;
                l.frame(cosi, col) = s;
                l.frame(sini, col) = cd(0, s);
            }
    }
    if (flipped_) l.frame = l.frame.conjugate();
    return l;
}

SubLagrangian TruncatedLoopSpace::real_completed_lagrangian() const {
    return complete_sublagrangian(real_sublagrangian(), 0);
}

namespace {

// both trace routes on one fixed completion
std::pair<cd, cd> omega_routes(const CMat& mx, const CMat& my, const TruncatedLoopSpace& s) {
    CMat xbar = s.apply_PL_left(s.apply_PLbar_right(mx));
    CMat yblk = s.apply_PLbar_left(s.apply_PL_right(my));
    CMat ybar = s.apply_PL_left(s.apply_PLbar_right(my));
    CMat xblk = s.apply_PLbar_left(s.apply_PL_right(mx));
    cd blocks = cd(0, 0.5) * (trace_of_product(xbar, yblk) - trace_of_product(ybar, xblk));
    CMat cx = s.apply_J_left(mx) - s.apply_J_right(mx);
    CMat cy = s.apply_J_left(my) - s.apply_J_right(my);
    cd via_j = 0.125 * trace_of_product(s.apply_J_left(cx), cy);
    return {blocks, via_j};
}

}  // namespace

OmegaResult cocycle_omega_imp(const LoopMatrixField& x, const LoopMatrixField& y,
                              const TruncatedLoopSpace& s, double tol) {
    if (x.d != s.d() || y.d != s.d())
        throw std::invalid_argument("cocycle: field size does not match space");
    if (2 * x.support() > s.cutoff() || 2 * y.support() > s.cutoff())
        throw TruncationUnsafe("cocycle traces require field support <= cutoff / 2");
    CMat mx = s.multiplication_operator(x).matrix;
    CMat my = s.multiplication_operator(y).matrix;

    // The two completions of the constant block carry cocycles differing by
    // the coboundary of a zero-mode functional; their mean is the
    // completion-independent representative with the band-exact values.
    auto [blocks, via_j] = omega_routes(mx, my, s);
    if (s.has_zero_mode_block()) {
        TruncatedLoopSpace sc = s.with_conjugate_completion();
        auto [blocks2, via_j2] = omega_routes(mx, my, sc);
        blocks = 0.5 * (blocks + blocks2);
        via_j = 0.5 * (via_j + via_j2);
    }

    OmegaResult r;
    r.value = blocks;
    r.value_via_j = via_j;
    r.route_disagreement = std::abs(blocks - via_j);
    if (r.route_disagreement > std::max(tol, 1e-10) * (1.0 + std::abs(blocks)))
        throw std::runtime_error("cocycle trace routes disagree by " +
                                 std::to_string(r.route_disagreement));
    return r;
}

cd cocycle_omega_loop(const LoopMatrixField& x, const LoopMatrixField& y) {
    if (x.d != y.d) throw std::invalid_argument("cocycle: field size mismatch");
    cd acc = 0;
    for (const auto& [m, b] : y.coeffs) {
        if (m == 0) continue;
        auto it = x.coeffs.find(-m);
        if (it == x.coeffs.end()) continue;
        acc += cd(0, m) * (it->second * b).trace();
    }
    return acc;
}

double cocycle_sigma(const RMat& x, const RMat& y, const RMat& z) {
    if (x.rows() != x.cols() || y.rows() != y.cols() || z.rows() != z.cols() ||
        x.rows() != y.rows() || y.rows() != z.rows())
        throw std::invalid_argument("sigma: square matrices of equal size required");
    return (x * (y * z - z * y)).trace() / (8.0 * M_PI * M_PI);
}

CentralIdentityResult verify_central_identity(int d, int k, int l, const CMat& a, const CMat& b,
                                              int cutoff, std::uint64_t completion_seed) {
    TruncatedLoopSpace s(d, cutoff, false, completion_seed);
    LoopMatrixField x = LoopMatrixField::single_mode(a, k);
    LoopMatrixField y = LoopMatrixField::single_mode(b, l);
    CentralIdentityResult r;
    r.omega_imp = cocycle_omega_imp(x, y, s).value;
    r.omega_loop = cocycle_omega_loop(x, y);
    r.residual = std::abs(2.0 * r.omega_imp + r.omega_loop);
    return r;
}

OrthogonalLoop::OrthogonalLoop(int d, std::vector<Factor> factors)
    : d_(d), factors_(std::move(factors)) {
    for (const auto& f : factors_) {
        if (f.rotation_frames.rows() != d_ || f.rotation_frames.cols() != d_)
            throw std::invalid_argument("loop factor frame has wrong size");
        if (static_cast<int>(f.frequencies.size()) != d_ / 2)
            throw std::invalid_argument("loop factor needs d/2 block frequencies");
        RMat dgen = RMat::Zero(d_, d_);
        for (int b = 0; b < d_ / 2; ++b) {
            dgen(2 * b, 2 * b + 1) = -f.frequencies[b];
            dgen(2 * b + 1, 2 * b) = f.frequencies[b];
        }
        skew_gens_.push_back(f.rotation_frames * dgen * f.rotation_frames.transpose());
    }
}

RMat OrthogonalLoop::value(double t) const {
    RMat out = RMat::Identity(d_, d_);
    for (const auto& f : factors_) {
        RMat rot = RMat::Identity(d_, d_);
        for (int b = 0; b < d_ / 2; ++b) {
            double th = f.frequencies[b] * t;
            rot(2 * b, 2 * b) = std::cos(th);
            rot(2 * b, 2 * b + 1) = -std::sin(th);
            rot(2 * b + 1, 2 * b) = std::sin(th);
            rot(2 * b + 1, 2 * b + 1) = std::cos(th);
        }
        out = out * (f.rotation_frames * rot * f.rotation_frames.transpose());
    }
    return out;
}

RMat OrthogonalLoop::log_derivative(double t) const {
    // gamma = F_1 ... F_m  =>  gamma^{-1} gamma' = sum_i S_i^T a_i S_i with
    // S_i the suffix product F_{i+1} ... F_m
    RMat acc = RMat::Zero(d_, d_);
    RMat suffix = RMat::Identity(d_, d_);
    for (int i = static_cast<int>(factors_.size()) - 1; i >= 0; --i) {
        acc += suffix.transpose() * skew_gens_[i] * suffix;
        const auto& f = factors_[i];
        RMat rot = RMat::Identity(d_, d_);
        for (int b = 0; b < d_ / 2; ++b) {
            double th = f.frequencies[b] * t;
            rot(2 * b, 2 * b) = std::cos(th);
            rot(2 * b, 2 * b + 1) = -std::sin(th);
            rot(2 * b + 1, 2 * b) = std::sin(th);
            rot(2 * b + 1, 2 * b + 1) = std::cos(th);
        }
        suffix = (f.rotation_frames * rot * f.rotation_frames.transpose()) * suffix;
    }
    return acc;
}

int OrthogonalLoop::max_winding() const {
    int w = 0;
    for (const auto& f : factors_)
        for (int fr : f.frequencies) w = std::max(w, std::abs(fr));
    return w;
}

OrthogonalLoop random_orthogonal_loop(Rng& rng, int d, int max_winding, int factors) {
    std::vector<OrthogonalLoop::Factor> fs;
    for (int i = 0; i < factors; ++i) {
        OrthogonalLoop::Factor f;
        f.rotation_frames = rng.orthogonal(d, +1);
        for (int b = 0; b < d / 2; ++b) f.frequencies.push_back(rng.uniform_int(-max_winding, max_winding));
        fs.push_back(std::move(f));
    }
    return OrthogonalLoop(d, std::move(fs));
}

DbetaResult verify_dbeta_identity(const OrthogonalLoop& gamma, const LoopMatrixField& x,
                                  const LoopMatrixField& y, int points, double orth_tol) {
    const int d = gamma.d();
    if (x.d != d || y.d != d) throw std::invalid_argument("dbeta: field size mismatch");
    LoopMatrixField xp = x.derivative();
    LoopMatrixField yp = y.derivative();
    const RMat id = RMat::Identity(d, d);

    cd dbeta_sum = 0, omega_sum = 0, tau_sum = 0;
    for (int kpt = 0; kpt < points; ++kpt) {
        double t = 2.0 * M_PI * kpt / points;
        RMat g = gamma.value(t);
        if ((g.transpose() * g - id).cwiseAbs().maxCoeff() > orth_tol)
            throw std::invalid_argument("dbeta: loop sample is not orthogonal");
        CMat ginv = g.transpose().cast<cd>();
        CMat ld = gamma.log_derivative(t).cast<cd>();
        CMat xt = ginv * x.eval(t);
        CMat yt = ginv * y.eval(t);
        CMat xt_p = ginv * xp.eval(t) - ld * xt;
        CMat yt_p = ginv * yp.eval(t) - ld * yt;
        CMat comm = xt * yt - yt * xt;
        dbeta_sum += (xt_p * yt).trace() - (yt_p * xt).trace() - (ld * comm).trace();
        omega_sum += (xt * yt_p).trace();
        tau_sum += (ld * comm).trace();
    }
    const double h = 2.0 * M_PI / points;
    DbetaResult r;
    r.dbeta = dbeta_sum * h;
    r.omega_bar = omega_sum / static_cast<double>(points);  // (1/2pi) * integral
    r.tau_sigma = tau_sum * h / (8.0 * M_PI * M_PI);
    r.residual = std::abs(r.dbeta + 4.0 * M_PI * r.omega_bar + 8.0 * M_PI * M_PI * r.tau_sigma);
    return r;
}

}  // namespace cliffver
