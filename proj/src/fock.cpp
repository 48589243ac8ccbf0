#include "cliffver/fock.hpp"

#include <Eigen/Eigenvalues>
#include <bit>
#include <numeric>

namespace cliffver {

PolarizedSpace PolarizedSpace::standard(int n) {
    PolarizedSpace p;
    p.real_dim = 2 * n;
    p.frame = CMat::Zero(2 * n, n);
    const double s = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < n; ++j) {
        p.frame(2 * j, j) = cd(s, 0);
        p.frame(2 * j + 1, j) = cd(0, -s);
    }
    return p;
}

double PolarizedSpace::frame_defect() const {
    const int n = modes();
    double d = 0.0;
    if (n > 0) {
        d = (frame.adjoint() * frame - CMat::Identity(n, n)).cwiseAbs().maxCoeff();
        d = std::max(d, (frame.transpose() * frame).cwiseAbs().maxCoeff());
    }
    return d;
}

void PolarizedSpace::validate(double tol) const {
    if (real_dim != 2 * modes())
        throw std::invalid_argument("polarized space: frame does not span a full Lagrangian");
    if (frame.rows() != real_dim)
        throw std::invalid_argument("polarized space: frame rows != real_dim");
    if (frame_defect() > tol)
        throw std::invalid_argument("polarized space: frame not orthonormal isotropic within tolerance");
}

namespace {

inline int act_sign(unsigned mask, int j) {
    unsigned below = mask & ((1u << j) - 1u);
    return (std::popcount(below) & 1) ? -1 : 1;
}

}  // namespace

FockRep build_fock_rep(const PolarizedSpace& p, double tol) {
    p.validate(tol);
    FockRep f;
    f.space = p;
    f.n = p.modes();
    f.dim = 1 << f.n;
    f.gen_create.resize(f.n);
    f.gen_annih.resize(f.n);
    for (int j = 0; j < f.n; ++j) {
        CMat cr = CMat::Zero(f.dim, f.dim);
        CMat an = CMat::Zero(f.dim, f.dim);
        const unsigned bit = 1u << j;
        for (unsigned m = 0; m < static_cast<unsigned>(f.dim); ++m) {
            if (!(m & bit)) {
                double s = act_sign(m, j);
                cr(m | bit, m) = kCreateScale * s;
                an(m, m | bit) = kAnnihScale * s;
            }
        }
        f.gen_create[j] = cr;
        f.gen_annih[j] = an;
    }
    f.grading = CMat::Zero(f.dim, f.dim);
    for (unsigned m = 0; m < static_cast<unsigned>(f.dim); ++m)
        f.grading(m, m) = (std::popcount(m) & 1) ? -1.0 : 1.0;
    return f;
}

CMat FockRep::clifford(const CVec& v) const {
    if (v.size() != space.real_dim)
        throw std::invalid_argument("clifford: vector dimension mismatch");
    CVec create_coeff = space.frame.adjoint() * v;    // <f_j, v>
    CVec annih_coeff = space.frame.transpose() * v;   // <conj f_j, v>
    CMat out = CMat::Zero(dim, dim);
    for (int j = 0; j < n; ++j) {
        if (create_coeff(j) != cd(0, 0)) out += create_coeff(j) * gen_create[j];
        if (annih_coeff(j) != cd(0, 0)) out += annih_coeff(j) * gen_annih[j];
    }
    return out;
}

CMat grading_operator(const FockRep& f) { return f.grading; }

CliffordRelationReport check_clifford_relations(const FockRep& f, double tol) {
    CliffordRelationReport rep;
    const int n = f.n;
    std::vector<const CMat*> gens;
    std::vector<CVec> vecs;
    for (int j = 0; j < n; ++j) {
        gens.push_back(&f.gen_create[j]);
        vecs.push_back(f.space.frame.col(j));
    }
    for (int j = 0; j < n; ++j) {
        gens.push_back(&f.gen_annih[j]);
        vecs.push_back(f.space.frame.col(j).conjugate());
    }
    const CMat id = CMat::Identity(f.dim, f.dim);
    for (size_t a = 0; a < gens.size(); ++a)
        for (size_t b = a; b < gens.size(); ++b) {
            cd pairing = vecs[a].transpose() * vecs[b];  // B(u, w)
            CMat resid = (*gens[a]) * (*gens[b]) + (*gens[b]) * (*gens[a]) + 2.0 * pairing * id;
            rep.max_residual = std::max(rep.max_residual, resid.norm());
        }
    rep.pass = rep.max_residual < tol;
    return rep;
}

namespace {

std::vector<CMat> generator_list(const FockRep& f) {
    std::vector<CMat> g;
    for (const auto& m : f.gen_create) g.push_back(m);
    for (const auto& m : f.gen_annih) g.push_back(m);
    return g;
}

// Dense commutant solve; parity -1/0/+1 selects odd/all/even against the grading.
int dense_commutant_dim(const FockRep& f, double tol, int parity) {
    const int d = f.dim;
    auto gens = generator_list(f);
    const CMat id = CMat::Identity(d, d);
    std::vector<CMat> rows;
    for (const auto& g : gens) {
        // vec(UM - sMU): column-major vec(AXB) = kron(B^T, A) vec(X)
        CMat k = CMat::Zero(d * d, d * d);
        double s = (parity == -1) ? -1.0 : 1.0;  // odd part anticommutes
        // kron(M^T, I) - s * kron(I, M)
        for (int c1 = 0; c1 < d; ++c1)
            for (int c2 = 0; c2 < d; ++c2) {
                cd mt = g(c2, c1);  // (M^T)(c1, c2)
                if (mt != cd(0, 0))
                    for (int r = 0; r < d; ++r) k(c1 * d + r, c2 * d + r) += mt;
            }
        for (int c = 0; c < d; ++c)
            for (int r1 = 0; r1 < d; ++r1)
                for (int r2 = 0; r2 < d; ++r2)
                    if (g(r1, r2) != cd(0, 0)) k(c * d + r1, c * d + r2) -= s * g(r1, r2);
        rows.push_back(k);
    }
    if (parity != 0) {
        // restrict to the even/odd part: Gamma M Gamma = +-M
        CMat k = CMat::Zero(d * d, d * d);
        double sign = (parity == 1) ? 1.0 : -1.0;
        for (int c = 0; c < d; ++c)
            for (int r = 0; r < d; ++r) {
                k(c * d + r, c * d + r) -= sign;
                // Gamma is diagonal
                k(c * d + r, c * d + r) += f.grading(r, r) * f.grading(c, c);
            }
        rows.push_back(k);
    }
    CMat stacked(static_cast<Eigen::Index>(rows.size()) * d * d, d * d);
    for (size_t i = 0; i < rows.size(); ++i)
        stacked.middleRows(static_cast<Eigen::Index>(i) * d * d, d * d) = rows[i];
    return kernel_dim(stacked, tol * std::sqrt(static_cast<double>(d)));
}

// Fast path: the number-operator combination H = sum_j 3^{-j} a*_j a_j lies in
// the generated algebra and has distinct diagonal entries (3-adic subset
// sums), so the commutant lives inside the diagonal algebra; its dimension is
// the number of connected components of the generator adjacency graph.
int fast_commutant_components(const FockRep& f, double tol) {
    const int d = f.dim;
    std::vector<int> parent(d);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    auto gens = generator_list(f);
    for (const auto& g : gens)
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                if (std::abs(g(r, c)) > tol) unite(r, c);
    int comps = 0;
    for (int i = 0; i < d; ++i)
        if (find(i) == i) ++comps;
    return comps;
}

}  // namespace

int commutant_dimension(const FockRep& f, double tol, bool dense) {
    if (f.n == 0) return 1;
    if (dense || f.n <= 3) return dense_commutant_dim(f, tol, 0);
    return fast_commutant_components(f, tol);
}

int graded_commutant_dimension(const FockRep& f, double tol, bool dense) {
    if (f.n == 0) return 1;
    if (dense || f.n <= 3) return dense_commutant_dim(f, tol, 1) + dense_commutant_dim(f, tol, -1);
    // commutant sits inside the diagonal algebra, whose odd part vanishes
    return fast_commutant_components(f, tol);
}

}  // namespace cliffver
