#include "cliffver/suites.hpp"

#include <chrono>
#include <cmath>
#include <fstream>

#include "cliffver/bogoliubov.hpp"
#include "cliffver/cech.hpp"
#include "cliffver/fock.hpp"
#include "cliffver/lagrangian.hpp"
#include "cliffver/loopalg.hpp"
#include "cliffver/rng.hpp"
#include "cliffver/superfactor.hpp"

namespace cliffver {

const std::vector<std::string> kSuiteNames = {
    "clifford-relations", "lagrangian-parity", "implementers",    "loop-cocycles",
    "dbeta",              "superfactor-kinds", "cech-classes",    "tensor-formula"};

bool is_known_suite(const std::string& name) {
    for (const auto& s : kSuiteNames)
        if (s == name) return true;
    return false;
}

namespace {

RMat random_so_element(Rng& rng, int dim) { return rng.orthogonal(dim, +1); }

CMat random_skew_cmat(Rng& rng, int d) {
    RMat a = rng.gaussian_matrix(d, d);
    return ((a - a.transpose()) / 2.0).cast<cd>();
}

void suite_clifford_relations(SuiteReport& rep, const SuiteParams& p, Rng& rng) {
    const int nmax = p.d < 0 ? 6 : p.d;
    const double tol = p.tol < 0 ? 1e-12 : p.tol;
    for (int n = 0; n <= nmax; ++n) {
        FockRep f = build_fock_rep(PolarizedSpace::standard(n));
        auto rel = check_clifford_relations(f, tol);
        rep.add("relations-n" + std::to_string(n), rel.max_residual, tol);
        rep.add_exact("commutant-n" + std::to_string(n), commutant_dimension(f) == 1);
        rep.add_exact("graded-commutant-n" + std::to_string(n), graded_commutant_dimension(f) == 1);
    }
    // adjoint of a generator realizes the conjugated generator up to the
    // forced global sign
    FockRep f = build_fock_rep(PolarizedSpace::standard(std::max(2, std::min(nmax, 4))));
    double star_resid = 0.0;
    for (int t = 0; t < 20; ++t) {
        CVec v = rng.gaussian_complex_matrix(f.space.real_dim, 1);
        star_resid = std::max(star_resid,
                              (f.clifford(v).adjoint() + f.clifford(v.conjugate())).norm());
    }
    rep.add("star-compatibility", star_resid, 1e-9);
    // orthogonal real unit vectors anticommute
    double anti_resid = 0.0;
    for (int t = 0; t < 20; ++t) {
        RMat q = random_so_element(rng, f.space.real_dim);
        CMat a = f.clifford(q.col(0).cast<cd>());
        CMat b = f.clifford(q.col(1).cast<cd>());
        anti_resid = std::max(anti_resid, (a * b + b * a).norm());
    }
    rep.add("orthogonal-anticommute", anti_resid, 1e-12 * f.dim);
    // a scaled generator must be detected
    FockRep g = build_fock_rep(PolarizedSpace::standard(2));
    g.gen_create[0] *= 1.1;
    rep.add_exact("perturbation-detected", check_clifford_relations(g, tol).max_residual >= 0.1);
}

void suite_lagrangian_parity(SuiteReport& rep, const SuiteParams& p, Rng& rng) {
    const int nmax = p.d < 0 ? 3 : p.d;
    const int trials = p.trials < 0 ? 100 : p.trials;
    const double tol = p.tol < 0 ? kDefaultTol : p.tol;
    for (int n = 1; n <= nmax; ++n) {
        SubLagrangian l = SubLagrangian::from_polarized(PolarizedSpace::standard(n));
        long long mismatches = 0;
        for (int t = 0; t < trials; ++t) {
            int want = (t % 2 == 0) ? +1 : -1;
            RMat g = rng.orthogonal(2 * n, want);
            SubLagrangian gl{l.real_dim, g.cast<cd>() * l.frame};
            int parity = intersection_parity(gl, l, tol);
            int expected = (want > 0) ? 0 : 1;
            if (parity != expected) ++mismatches;
        }
        rep.add_exact("det-parity-law-n" + std::to_string(n), mismatches == 0, mismatches);
    }
    // skew index is stable under small orthogonal motions, per defect
    for (int defect = 0; defect <= 3; ++defect) {
        const int rank = 2;
        const int dim = 2 * rank + defect;
        SubLagrangian l;
        l.real_dim = dim;
        l.frame = CMat::Zero(dim, rank);
        const double s = 1.0 / std::sqrt(2.0);
        for (int j = 0; j < rank; ++j) {
            l.frame(2 * j, j) = s;
            l.frame(2 * j + 1, j) = cd(0, -s);
        }
        int base = skew_index(l, tol);
        long long mismatches = 0;
        for (int t = 0; t < trials; ++t) {
            RMat g = rng.near_identity_orthogonal(dim, 0.05);
            SubLagrangian gl{dim, g.cast<cd>() * l.frame};
            if (skew_index(gl, tol) != base) ++mismatches;
        }
        rep.add_exact("skew-index-stability-defect" + std::to_string(defect),
                      mismatches == 0 && base == defect % 2, mismatches);
    }
    // completions with different seeds are equivalent and grading-compatible
    {
        SubLagrangian l;
        l.real_dim = 8;
        l.frame = CMat::Zero(8, 2);
        const double s = 1.0 / std::sqrt(2.0);
        for (int j = 0; j < 2; ++j) {
            l.frame(2 * j, j) = s;
            l.frame(2 * j + 1, j) = cd(0, -s);
        }
        SubLagrangian c1 = complete_sublagrangian(l, 11);
        SubLagrangian c2 = complete_sublagrangian(l, 17);
        bool ok = c1.defect() == 0 && c2.defect() == 0;
        ok = ok && intersection_parity(c1, c2, tol) == 0;
        ok = ok && skew_index(c1, tol) == skew_index(c2, tol);
        ok = ok && std::isfinite(equivalence_distance(c1, c2));
        rep.add_exact("completion-seed-compatibility", ok);
        SubLagrangian odd{3, CMat::Zero(3, 1)};
        odd.frame(0, 0) = s;
        odd.frame(1, 0) = cd(0, -s);
        SubLagrangian codd = complete_sublagrangian(odd, 0);
        rep.add_exact("odd-defect-augments", codd.real_dim == 4 && codd.rank() == 2);
    }
}

void suite_implementers(SuiteReport& rep, const SuiteParams& p, Rng& rng) {
    const int nmax = p.d < 0 ? 3 : p.d;
    const int trials = p.trials < 0 ? 50 : p.trials;
    const double tol = p.tol < 0 ? 1e-8 : p.tol;
    for (int n = 1; n <= nmax; ++n) {
        FockRep f = build_fock_rep(PolarizedSpace::standard(n));
        SubLagrangian l = SubLagrangian::from_polarized(f.space);
        double worst = 0.0;
        long long parity_mismatch = 0, additivity_mismatch = 0;
        for (int t = 0; t < trials; ++t) {
            RMat g = rng.orthogonal(2 * n, (t % 2 == 0) ? +1 : -1);
            Implementer imp = solve_implementer(f, g);
            worst = std::max(worst, intertwiner_residual(f, g, imp));
            SubLagrangian gl{l.real_dim, g.cast<cd>() * l.frame};
            if (imp.parity != intersection_parity(gl, l)) ++parity_mismatch;
            RMat h = rng.orthogonal(2 * n, (t % 3 == 0) ? -1 : +1);
            int pg = imp.parity;
            int ph = implementer_parity(f, h);
            int pgh = implementer_parity(f, RMat(g * h));
            if (pgh != (pg + ph) % 2) ++additivity_mismatch;
        }
        rep.add("intertwiner-residual-n" + std::to_string(n), worst, 1e-9 * f.dim);
        rep.add_exact("parity-intersection-n" + std::to_string(n), parity_mismatch == 0,
                      parity_mismatch);
        rep.add_exact("parity-additivity-n" + std::to_string(n), additivity_mismatch == 0,
                      additivity_mismatch);
    }
    {
        const int n = std::min(nmax, 2);
        FockRep f = build_fock_rep(PolarizedSpace::standard(n));
        double worst = 0.0;
        for (int t = 0; t < std::min(trials, 20); ++t) {
            RMat g = rng.orthogonal(2 * n, (t % 2 == 0) ? +1 : -1);
            RMat h = rng.orthogonal(2 * n, (t % 3 == 0) ? -1 : +1);
            RMat k = rng.orthogonal(2 * n, +1);
            cd lhs = cocycle_phase(f, g, h) * cocycle_phase(f, RMat(g * h), k);
            cd rhs = cocycle_phase(f, g, RMat(h * k)) * cocycle_phase(f, h, k);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        rep.add("cocycle-identity", worst, 1e-8);
    }
    {
        // one larger instance through the transport path
        FockRep f5 = build_fock_rep(PolarizedSpace::standard(5));
        RMat g = rng.orthogonal(10, -1);
        Implementer imp = solve_implementer(f5, g);
        rep.add("intertwiner-residual-n5", intertwiner_residual(f5, g, imp), 1e-9 * f5.dim);
        SubLagrangian l5 = SubLagrangian::from_polarized(f5.space);
        SubLagrangian gl5{10, g.cast<cd>() * l5.frame};
        rep.add_exact("parity-intersection-n5", imp.parity == intersection_parity(gl5, l5));
    }
    {
        // the dense solve and the vacuum transport must produce the same unitary
        double worst = 0.0;
        for (int n = 1; n <= std::min(nmax + 1, 4); ++n) {
            FockRep f = build_fock_rep(PolarizedSpace::standard(n));
            for (int t = 0; t < 4; ++t) {
                RMat g = rng.orthogonal(2 * n, (t % 2 == 0) ? +1 : -1);
                Implementer a = solve_implementer(f, g, ImplementerMethod::Dense);
                Implementer b = solve_implementer(f, g, ImplementerMethod::VacuumTransport);
                worst = std::max(worst, (a.unitary - b.unitary).norm());
            }
        }
        rep.add("solver-path-agreement", worst, 1e-6);
    }
    (void)tol;
}

void suite_loop_cocycles(SuiteReport& rep, const SuiteParams& p, Rng& rng) {
    const int d = p.d < 0 ? 3 : p.d;
    const int trials = p.trials < 0 ? 50 : p.trials;
    const double tol = p.tol < 0 ? 1e-9 : p.tol;
    const int k = p.mode_k, l = p.mode_l;
    const int cutoff = p.cutoff;

    double central_worst = 0.0, route_worst = 0.0, anchor_worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        CMat a = random_skew_cmat(rng, d);
        CMat b = random_skew_cmat(rng, d);
        auto r = verify_central_identity(d, k, l, a, b, cutoff);
        central_worst = std::max(central_worst, r.residual);
        TruncatedLoopSpace s(d, cutoff);
        auto omega = cocycle_omega_imp(LoopMatrixField::single_mode(a, k),
                                       LoopMatrixField::single_mode(b, l), s);
        route_worst = std::max(route_worst, omega.route_disagreement);
        if (k + l == 0) {
            cd closed_form = cd(0, 0.5 * l) * (a * b).trace();
            anchor_worst = std::max(anchor_worst, std::abs(omega.value - closed_form));
        } else {
            anchor_worst = std::max(anchor_worst, std::abs(omega.value));
        }
    }
    rep.add("central-identity", central_worst, tol);
    rep.add("route-agreement", route_worst, tol);
    rep.add("closed-form-anchor", anchor_worst, 1e-10);

    {
        // d=3 anchor: a = b = E01 - E10, modes (1, -1)
        CMat a = CMat::Zero(3, 3);
        a(0, 1) = 1.0;
        a(1, 0) = -1.0;
        auto r = verify_central_identity(3, 1, -1, a, a, cutoff);
        bool ok = std::abs(r.omega_loop - cd(0, -2)) < 1e-12 &&
                  std::abs(r.omega_imp - cd(0, 1)) < 1e-10 && r.residual < 1e-10;
        rep.add_exact("unit-mode-anchor", ok);
    }
    {
        CMat a = random_skew_cmat(rng, d);
        CMat b = random_skew_cmat(rng, d);
        LoopMatrixField x = LoopMatrixField::single_mode(a, k);
        LoopMatrixField y = LoopMatrixField::single_mode(b, l);
        TruncatedLoopSpace s1(d, cutoff), s2(d, cutoff + 4);
        cd v1 = cocycle_omega_imp(x, y, s1).value;
        cd v2 = cocycle_omega_imp(x, y, s2).value;
        rep.add("band-exactness", std::abs(v1 - v2), 1e-13);

        TruncatedLoopSpace seeded(d, cutoff, false, 99);
        rep.add("completion-seed-independence",
                std::abs(cocycle_omega_imp(x, y, seeded).value - v1), 1e-10);

        TruncatedLoopSpace flipped(d, cutoff, false, 0, true);
        rep.add("polarization-flip", std::abs(cocycle_omega_imp(x, y, flipped).value + v1), tol);
    }
    {
        // antiperiodic polarization is preserved by constant rotations
        TruncatedLoopSpace s(d, cutoff, true);
        double worst = 0.0;
        for (int t = 0; t < 5; ++t) {
            RMat g = random_so_element(rng, d);
            LoopMatrixField cg = LoopMatrixField::single_mode(g.cast<cd>(), 0);
            CMat mg = s.multiplication_operator(cg).matrix;
            CMat pl = s.projector_L();
            worst = std::max(worst, (mg * pl - pl * mg).norm());
        }
        rep.add("antiperiodic-invariance", worst, 1e-12);
    }
    {
        // omega 2-cocycle identity, exact Fourier arithmetic
        double worst = 0.0;
        for (int t = 0; t < 10; ++t) {
            LoopMatrixField x = LoopMatrixField::single_mode(random_skew_cmat(rng, d), rng.uniform_int(-3, 3));
            LoopMatrixField y = LoopMatrixField::single_mode(random_skew_cmat(rng, d), rng.uniform_int(-3, 3));
            LoopMatrixField z = LoopMatrixField::single_mode(random_skew_cmat(rng, d), rng.uniform_int(-3, 3));
            cd cyc = cocycle_omega_loop(x.commutator(y), z) + cocycle_omega_loop(y.commutator(z), x) +
                     cocycle_omega_loop(z.commutator(x), y);
            worst = std::max(worst, std::abs(cyc));
        }
        rep.add("loop-cocycle-identity", worst, 1e-10);
    }
    {
        // sigma: total antisymmetry and invariance identity
        double worst = 0.0;
        for (int t = 0; t < 10; ++t) {
            RMat w = rng.skew_matrix(d), x = rng.skew_matrix(d), y = rng.skew_matrix(d),
                 z = rng.skew_matrix(d);
            auto br = [](const RMat& a, const RMat& b) { return RMat(a * b - b * a); };
            double jac = cocycle_sigma(br(w, x), y, z) + cocycle_sigma(x, br(w, y), z) +
                         cocycle_sigma(x, y, br(w, z));
            worst = std::max(worst, std::abs(jac));
            worst = std::max(worst, std::abs(cocycle_sigma(x, x, y)));
            worst = std::max(worst, std::abs(cocycle_sigma(x, y, z) + cocycle_sigma(y, x, z)));
        }
        rep.add("sigma-invariance", worst, 1e-12);
    }
}

void suite_dbeta(SuiteReport& rep, const SuiteParams& p, Rng& rng) {
    const int d = p.d < 0 ? 4 : p.d;
    const int trials = p.trials < 0 ? 20 : p.trials;
    const double tol = p.tol < 0 ? 1e-6 : p.tol;
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        OrthogonalLoop gamma = random_orthogonal_loop(rng, d, 3);
        LoopMatrixField x = LoopMatrixField::cosine(rng.skew_matrix(d).cast<cd>(), rng.uniform_int(0, 3)) +
                            LoopMatrixField::sine(rng.skew_matrix(d).cast<cd>(), rng.uniform_int(1, 3));
        LoopMatrixField y = LoopMatrixField::cosine(rng.skew_matrix(d).cast<cd>(), rng.uniform_int(0, 3)) +
                            LoopMatrixField::sine(rng.skew_matrix(d).cast<cd>(), rng.uniform_int(1, 3));
        worst = std::max(worst, verify_dbeta_identity(gamma, x, y, p.points).residual);
    }
    rep.add("dbeta-identity", worst, tol);
    {
        OrthogonalLoop id_loop = OrthogonalLoop::constant_identity(d);
        LoopMatrixField x = LoopMatrixField::cosine(rng.skew_matrix(d).cast<cd>(), 1);
        LoopMatrixField y = LoopMatrixField::sine(rng.skew_matrix(d).cast<cd>(), 2);
        auto r = verify_dbeta_identity(id_loop, x, y, p.points);
        rep.add("constant-loop-reduction", r.residual, 1e-10);
        rep.add("constant-loop-tau-vanishes", std::abs(r.tau_sigma), 1e-12);
        auto rxx = verify_dbeta_identity(random_orthogonal_loop(rng, d, 2), x, x, p.points);
        rep.add("diagonal-vanishing", std::max(std::abs(rxx.dbeta), std::abs(rxx.omega_bar)), 1e-10);
    }
}

void suite_superfactor_kinds(SuiteReport& rep, const SuiteParams& p, Rng& rng) {
    const int dmax = p.d < 0 ? 6 : p.d;
    bool table_ok = true;
    for (int d = 1; d <= dmax; ++d) {
        Kind kind = classify_kind(clifford_algebra(d));
        Kind expect = (d % 2 == 0) ? Kind::Even : Kind::Odd;
        if (kind != expect) table_ok = false;
        rep.add_exact("kind-cl" + std::to_string(d), kind == expect);
    }
    rep.add_exact("kind-table", table_ok);
    {
        GradedMatrixAlgebra t = graded_tensor(clifford_algebra(1), clifford_algebra(1));
        rep.add_exact("cl1-tensor-cl1",
                      t.dim() == 4 && classify_kind(t) == Kind::Even && graded_center(t).dim() == 1);
    }
    {
        long long mismatches = 0;
        const int pairs = p.trials < 0 ? 20 : p.trials;
        for (int t = 0; t < pairs; ++t) {
            int da = rng.uniform_int(1, 4), db = rng.uniform_int(1, 4);
            Kind ka = classify_kind(clifford_algebra(da));
            Kind kb = classify_kind(clifford_algebra(db));
            Kind kt = classify_kind(graded_tensor(clifford_algebra(da), clifford_algebra(db)));
            int sum = ((ka == Kind::Odd) + (kb == Kind::Odd)) % 2;
            if ((kt == Kind::Odd) != (sum == 1)) ++mismatches;
        }
        rep.add_exact("kind-additivity", mismatches == 0, mismatches);
    }
    {
        CenterBasis uc = ungraded_center(clifford_algebra(1));
        rep.add_exact("cl1-ungraded-center",
                      uc.dim() == 2 && uc.even.size() == 1 && uc.odd.size() == 1);
        rep.add_exact("cc-swap-graded-center", graded_center(cc_swap_graded()).dim() == 1);
        rep.add_exact("cc-trivial-not-factor",
                      classify_kind(cc_trivially_graded()) == Kind::NotSuperFactor);
        rep.add_exact("m2-plus-m2-center", ungraded_center(m2_plus_m2_swap()).dim() == 2);
        rep.add_exact("bh-even-kind",
                      classify_kind(full_matrix_algebra({1, -1})) == Kind::Even);
    }
    {
        // graded center inside even ungraded center
        bool ok = true;
        for (int d = 1; d <= std::min(dmax, 4); ++d) {
            GradedMatrixAlgebra a = clifford_algebra(d);
            CenterBasis gc = graded_center(a);
            CenterBasis uc = ungraded_center(a);
            ok = ok && gc.odd.empty() && gc.dim() <= static_cast<int>(uc.even.size()) + 0 + 1;
        }
        rep.add_exact("graded-center-even", ok);
    }
}

struct FixtureOracle {
    std::string name;
    AbelianGroup h0, h1, h2;
    int z2b0, z2b1, z2b2;
};

const std::vector<FixtureOracle>& fixture_oracles() {
    static const std::vector<FixtureOracle> oracles = {
        {"circle", {1, {}}, {1, {}}, {0, {}}, 1, 1, 0},
        {"sphere", {1, {}}, {0, {}}, {1, {}}, 1, 0, 1},
        {"rp2", {1, {}}, {0, {}}, {0, {2}}, 1, 1, 1},
        {"torus", {1, {}}, {2, {}}, {1, {}}, 1, 2, 1},
    };
    return oracles;
}

void suite_cech_classes(SuiteReport& rep, const SuiteParams& p, Rng& rng) {
    const int trials = p.trials < 0 ? 50 : p.trials;
    const long long m = p.modulus;
    for (const auto& oracle : fixture_oracles()) {
        if (p.fixture != "all" && p.fixture != oracle.name) continue;
        SimplicialComplex c = fixture_by_name(oracle.name);
        bool groups_ok = integer_cohomology(c, 0) == oracle.h0 &&
                         integer_cohomology(c, 1) == oracle.h1 &&
                         integer_cohomology(c, 2) == oracle.h2;
        bool z2_ok = mod2_betti(c, 0) == oracle.z2b0 && mod2_betti(c, 1) == oracle.z2b1 &&
                     mod2_betti(c, 2) == oracle.z2b2;
        rep.add_exact("oracle-" + oracle.name, groups_ok && z2_ok);

        // delta composed with delta vanishes in every degree
        bool dd_zero = true;
        for (int k = 0; k <= 1; ++k) {
            IMat a = c.coboundary(k + 1);
            IMat b = c.coboundary(k);
            IMat prod = IMat::Zero(a.rows(), b.cols());
            for (Eigen::Index i = 0; i < a.rows(); ++i)
                for (Eigen::Index j = 0; j < b.cols(); ++j) {
                    long long acc = 0;
                    for (Eigen::Index q = 0; q < a.cols(); ++q)
                        acc = checked_add(acc, checked_mul(a(i, q), b(q, j)));
                    if (acc != 0) dd_zero = false;
                }
        }
        rep.add_exact("delta-squared-" + oracle.name, dd_zero);
    }

    {
        SimplicialComplex c = circle_complex();
        Cochain one_edge{1, 2, {1, 0, 0}};
        Cochain two_edges{1, 2, {1, 1, 0}};
        TransitionData t1 = bundle_from_orientation(c, one_edge);
        TransitionData t2 = bundle_from_orientation(c, two_edges);
        rep.add_exact("circle-orientation-nontrivial",
                      !cohomology_class(c, orientation_cocycle(t1)).is_zero());
        rep.add_exact("circle-orientation-trivial",
                      cohomology_class(c, orientation_cocycle(t2)).is_zero());
    }
    {
        // constructed generator cochain on the sphere, detected through the
        // class machinery
        SimplicialComplex c = sphere_complex();
        Cochain gen{2, 2, std::vector<long long>(c.triangles.size(), 0)};
        gen.values[0] = 1;
        rep.add_exact("sphere-generator-detected",
                      is_closed(c, gen) && !cohomology_class(c, gen).is_zero());
        // scalar-phase bundle: triple products form a coboundary, class 0
        Cochain mu{1, 0, {}};
        mu.values.resize(c.edges.size());
        for (auto& v : mu.values) v = rng.uniform_int(0, static_cast<int>(m) - 1);
        mu.modulus = m;
        TransitionData phases = bundle_from_phases(c, mu, m);
        rep.add_exact("sphere-phase-bundle-trivial",
                      cohomology_class(c, dd_cocycle(phases, m)).is_zero());
    }
    {
        // coboundary modification leaves both classes unchanged
        SimplicialComplex c = torus_complex();
        auto gens = mod2_generators(c, 1);
        TransitionData ta = bundle_from_orientation(c, gens.at(0));
        TransitionData tb = bundle_from_orientation(c, gens.at(1));
        TransitionData t = graded_tensor_bundle(ta, tb);
        Cochain eps0 = orientation_cocycle(t);
        Cochain lam0 = dd_cocycle(t, m);
        auto class_eps0 = cohomology_class(c, eps0);
        auto class_lam0 = cohomology_class(c, lam0);
        rep.add_exact("torus-tensor-dd-nontrivial", !class_lam0.is_zero());
        long long mismatch = 0;
        for (int trial = 0; trial < trials; ++trial) {
            TransitionData mod = t;
            for (auto& u : mod.edge_unitaries) {
                long long q = rng.uniform_int(0, static_cast<int>(m) - 1);
                cd phase = std::exp(cd(0, 2.0 * M_PI * static_cast<double>(q) / static_cast<double>(m)));
                u = phase * u;
            }
            if (!(cohomology_class(c, orientation_cocycle(mod)) == class_eps0)) ++mismatch;
            if (!(cohomology_class(c, dd_cocycle(mod, m)) == class_lam0)) ++mismatch;
        }
        rep.add_exact("coboundary-invariance", mismatch == 0, mismatch);
    }
    {
        // degree-1 Bockstein on the projective plane hits the torsion generator
        SimplicialComplex c = rp2_complex();
        auto gens = mod2_generators(c, 1);
        Cochain beta = bockstein(c, gens.at(0));
        auto cls = cohomology_class(c, beta);
        Cochain doubled = beta;
        for (auto& v : doubled.values) v *= 2;
        rep.add_exact("rp2-bockstein-generator", !cls.is_zero());
        rep.add_exact("rp2-bockstein-torsion", cohomology_class(c, doubled).is_zero());
        // additivity of the Bockstein on classes
        Cochain sum = gens.at(0);
        for (size_t i = 0; i < sum.values.size(); ++i) sum.values[i] += gens.at(0).values[i];
        sum = sum.reduced();
        Cochain beta_sum = bockstein(c, sum);
        Cochain twice = beta;
        for (size_t i = 0; i < twice.values.size(); ++i) twice.values[i] += beta.values[i];
        rep.add_exact("bockstein-additive",
                      cohomology_class(c, beta_sum) == cohomology_class(c, twice));
    }
    {
        // Leibniz rule for the cup product over Z_2 on random cochains
        SimplicialComplex c = torus_complex();
        long long mismatch = 0;
        for (int t = 0; t < 20; ++t) {
            Cochain x{1, 2, {}}, y{1, 2, {}};
            x.values.resize(c.edges.size());
            y.values.resize(c.edges.size());
            for (auto& v : x.values) v = rng.uniform_int(0, 1);
            for (auto& v : y.values) v = rng.uniform_int(0, 1);
            // over Z_2 in degree (1,1): delta(x ~ y) = dx ~ y + x ~ dy needs
            // the degree-(2,1)/(1,2) products; verify instead on closed x
            Cochain dx = apply_coboundary(c, x);
            bool x_closed = true;
            for (auto v : dx.values) x_closed = x_closed && (v == 0);
            Cochain cup = cup_product(c, x, y);
            Cochain dcup = apply_coboundary(c, cup);
            if (x_closed) {
                // with dx = 0 the product of closed cochains must be closed
                Cochain dy = apply_coboundary(c, y);
                bool y_closed = true;
                for (auto v : dy.values) y_closed = y_closed && (v == 0);
                if (y_closed)
                    for (auto v : dcup.values) mismatch += (v != 0);
            }
        }
        rep.add_exact("cup-closed-products", mismatch == 0, mismatch);
    }
    if (!p.bundle_path.empty()) {
        std::ifstream in(p.bundle_path);
        if (!in) throw std::runtime_error("cannot open bundle file: " + p.bundle_path);
        nlohmann::json doc = nlohmann::json::parse(in);
        TransitionData t = transition_data_from_json(doc);
        Cochain eps = orientation_cocycle(t);
        Cochain lam = dd_cocycle(t, m);
        rep.add_exact("external-bundle-closed",
                      is_closed(t.complex, eps) && is_closed(t.complex, lam));
        rep.add_exact("external-bundle-orientation-trivial",
                      cohomology_class(t.complex, eps).is_zero());
        rep.add_exact("external-bundle-dd-trivial",
                      cohomology_class(t.complex, lam).is_zero());
    }
}

void suite_tensor_formula(SuiteReport& rep, const SuiteParams& p, Rng& rng) {
    const long long m = p.modulus;
    auto run_fixture = [&](const std::string& name, bool expect_nonzero_correction) {
        SimplicialComplex c = fixture_by_name(name);
        auto gens = mod2_generators(c, 1);
        Cochain eps_a, eps_b;
        if (gens.size() >= 2) {
            eps_a = gens.at(0);
            eps_b = gens.at(1);
        } else if (gens.size() == 1) {
            eps_a = gens.at(0);
            eps_b = gens.at(0);
        } else {
            eps_a = Cochain{1, 2, std::vector<long long>(c.edges.size(), 0)};
            eps_b = eps_a;
        }
        TransitionData ta = bundle_from_orientation(c, eps_a);
        TransitionData tb = bundle_from_orientation(c, eps_b);
        auto report = verify_tensor_formula(ta, tb, m);
        rep.add_exact(name + "-orientation-additive", report.orientation_additive);
        rep.add_exact(name + "-dd-formula", report.dd_classes_equal);
        rep.add_exact(name + "-bockstein-formula", report.bockstein_classes_equal);
        rep.add_exact(name + "-correction-nonzero",
                      m != 2 || report.correction_nonzero == expect_nonzero_correction);
        // trivial second factor: both sides reduce to the first bundle
        Cochain zero{1, 2, std::vector<long long>(c.edges.size(), 0)};
        TransitionData trivial = bundle_from_orientation(c, zero);
        auto report2 = verify_tensor_formula(ta, trivial, m);
        rep.add_exact(name + "-unit-bundle", report2.orientation_additive &&
                                                 report2.dd_classes_equal &&
                                                 !report2.correction_nonzero);
    };
    if (p.fixture == "all" || p.fixture == "torus") run_fixture("torus", true);
    if (p.fixture == "all" || p.fixture == "rp2") run_fixture("rp2", true);
    if (p.fixture == "all" || p.fixture == "sphere") run_fixture("sphere", false);
    (void)rng;
}

}  // namespace

SuiteReport run_suite(const std::string& name, const SuiteParams& params, std::uint64_t seed) {
    if (!is_known_suite(name)) throw std::invalid_argument("unknown suite: " + name);
    SuiteReport rep;
    rep.suite = name;
    rep.seed = seed;
    rep.params["d"] = params.d;
    rep.params["cutoff"] = params.cutoff;
    rep.params["modes"] = {params.mode_k, params.mode_l};
    rep.params["trials"] = params.trials;
    rep.params["tol"] = params.tol;
    rep.params["points"] = params.points;
    rep.params["fixture"] = params.fixture;
    rep.params["modulus"] = params.modulus;

    Rng rng(seed);
    auto start = std::chrono::steady_clock::now();
    if (name == "clifford-relations") suite_clifford_relations(rep, params, rng);
    else if (name == "lagrangian-parity") suite_lagrangian_parity(rep, params, rng);
    else if (name == "implementers") suite_implementers(rep, params, rng);
    else if (name == "loop-cocycles") suite_loop_cocycles(rep, params, rng);
    else if (name == "dbeta") suite_dbeta(rep, params, rng);
    else if (name == "superfactor-kinds") suite_superfactor_kinds(rep, params, rng);
    else if (name == "cech-classes") suite_cech_classes(rep, params, rng);
    else if (name == "tensor-formula") suite_tensor_formula(rep, params, rng);
    auto stop = std::chrono::steady_clock::now();
    rep.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return rep;
}

}  // namespace cliffver
