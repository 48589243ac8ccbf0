// Acceptance harness: one line per criterion, exit code = number of failures.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "cliffver/bogoliubov.hpp"
#include "cliffver/cech.hpp"
#include "cliffver/fock.hpp"
#include "cliffver/lagrangian.hpp"
#include "cliffver/loopalg.hpp"
#include "cliffver/rng.hpp"
#include "cliffver/suites.hpp"
#include "cliffver/superfactor.hpp"

using namespace cliffver;

namespace {

int failures = 0;

void report(int num, const std::string& label, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", num, label.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CMat random_skew_cmat(Rng& rng, int d) {
    RMat a = rng.gaussian_matrix(d, d);
    return ((a - a.transpose()) / 2.0).cast<cd>();
}

void criterion_central_identity() {
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(1001);
    const int cutoff = 16;
    double worst = 0.0;
    for (int d = 3; d <= 8; ++d) {
        TruncatedLoopSpace s(d, cutoff);
        for (int l = -6; l <= 6; ++l) {
            if (l == 0) continue;
            for (int trial = 0; trial < 50; ++trial) {
                CMat a = random_skew_cmat(rng, d);
                CMat b = random_skew_cmat(rng, d);
                LoopMatrixField x = LoopMatrixField::single_mode(a, -l);
                LoopMatrixField y = LoopMatrixField::single_mode(b, l);
                cd omega_imp = cocycle_omega_imp(x, y, s).value;
                cd omega_loop = cocycle_omega_loop(x, y);
                worst = std::max(worst, std::abs(2.0 * omega_imp + omega_loop));
            }
        }
    }
    double secs = seconds_since(t0);
    bool pass = worst < 1e-9 && secs < 60.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "max residual %.3e over d=3..8, |l|<=6, 50 pairs; %.1f s",
                  worst, secs);
    report(1, "central identity 2*Omega + omega = 0 at cutoff 16", pass, buf);
}

void criterion_closed_form() {
    Rng rng(1002);
    const int cutoff = 16;
    double worst_match = 0.0, worst_offdiag = 0.0;
    for (int d = 3; d <= 8; ++d) {
        TruncatedLoopSpace s(d, cutoff);
        for (int l = 1; l <= 6; ++l) {
            for (int trial = 0; trial < 8; ++trial) {
                CMat a = random_skew_cmat(rng, d);
                CMat b = random_skew_cmat(rng, d);
                cd omega = cocycle_omega_imp(LoopMatrixField::single_mode(a, -l),
                                             LoopMatrixField::single_mode(b, l), s)
                               .value;
                cd closed = cd(0, 0.5 * l) * (a * b).trace();
                worst_match = std::max(worst_match, std::abs(omega - closed));
            }
        }
        // k + l != 0 contributes nothing
        for (int trial = 0; trial < 8; ++trial) {
            CMat a = random_skew_cmat(rng, d);
            CMat b = random_skew_cmat(rng, d);
            int k = rng.uniform_int(-6, 6);
            int l = rng.uniform_int(-6, 6);
            if (k + l == 0) l = (l < 6) ? l + 1 : l - 1;
            cd omega = cocycle_omega_imp(LoopMatrixField::single_mode(a, k),
                                         LoopMatrixField::single_mode(b, l), s)
                           .value;
            worst_offdiag = std::max(worst_offdiag, std::abs(omega));
        }
    }
    bool pass = worst_match < 1e-10 && worst_offdiag < 1e-12;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "branch residual %.3e, off-diagonal %.3e", worst_match,
                  worst_offdiag);
    report(2, "Omega equals (i l / 2) tr(ab) on conjugate mode pairs", pass, buf);
}

void criterion_omega_anchor() {
    Rng rng(1003);
    double worst = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
        int d = rng.uniform_int(2, 8);
        int l = rng.uniform_int(-6, 6);
        if (l == 0) l = 1;
        CMat a = random_skew_cmat(rng, d);
        CMat b = random_skew_cmat(rng, d);
        cd omega = cocycle_omega_loop(LoopMatrixField::single_mode(a, -l),
                                      LoopMatrixField::single_mode(b, l));
        worst = std::max(worst, std::abs(omega - cd(0, -l) * (a * b).trace()));
    }
    CMat e12 = CMat::Zero(3, 3);
    e12(0, 1) = 1.0;
    e12(1, 0) = -1.0;
    auto r = verify_central_identity(3, 1, -1, e12, e12, 16);
    bool anchor = std::abs(r.omega_loop - cd(0, -2)) < 1e-12 &&
                  std::abs(r.omega_imp - cd(0, 1)) < 1e-10;
    bool pass = worst < 1e-12 && anchor;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "fourier residual %.3e; instance omega=-2i Omega=i %s", worst,
                  anchor ? "ok" : "violated");
    report(3, "omega matches -i l tr(ab) exactly in Fourier form", pass, buf);
}

void criterion_dbeta() {
    Rng rng(1004);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        int d = 2 + (trial % 4);  // d in 2..5
        OrthogonalLoop gamma = random_orthogonal_loop(rng, d, 3);
        LoopMatrixField x = LoopMatrixField::cosine(rng.skew_matrix(d).cast<cd>(),
                                                    rng.uniform_int(0, 3)) +
                            LoopMatrixField::sine(rng.skew_matrix(d).cast<cd>(), rng.uniform_int(1, 3));
        LoopMatrixField y = LoopMatrixField::cosine(rng.skew_matrix(d).cast<cd>(),
                                                    rng.uniform_int(0, 3)) +
                            LoopMatrixField::sine(rng.skew_matrix(d).cast<cd>(), rng.uniform_int(1, 3));
        worst = std::max(worst, verify_dbeta_identity(gamma, x, y, 2048).residual);
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf), "max residual %.3e over 20 loops at 2048 panels", worst);
    report(4, "loop-potential identity dbeta = -4pi omega - 8pi^2 tau(sigma)", worst < 1e-6, buf);
}

void criterion_fock() {
    auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    bool commutants = true;
    for (int n = 1; n <= 6; ++n) {
        FockRep f = build_fock_rep(PolarizedSpace::standard(n));
        worst = std::max(worst, check_clifford_relations(f, 1e-12).max_residual);
        commutants = commutants && commutant_dimension(f) == 1 && graded_commutant_dimension(f) == 1;
    }
    double secs = seconds_since(t0);
    bool pass = worst < 1e-12 && commutants && secs < 30.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "max relation residual %.3e, commutants %s, %.1f s", worst,
                  commutants ? "trivial" : "NON-TRIVIAL", secs);
    report(5, "generator relations and irreducibility up to 64 states", pass, buf);
}

void criterion_parity() {
    Rng rng(1006);
    long long mismatches = 0;
    for (int n = 1; n <= 4; ++n) {
        FockRep f = build_fock_rep(PolarizedSpace::standard(n));
        SubLagrangian l = SubLagrangian::from_polarized(f.space);
        for (int trial = 0; trial < 200; ++trial) {
            int sign = (trial % 2 == 0) ? +1 : -1;
            RMat g = rng.orthogonal(2 * n, sign);
            int pi = implementer_parity(f, g);
            SubLagrangian gl{2 * n, g.cast<cd>() * l.frame};
            int ps = intersection_parity(gl, l);
            int pd = (sign > 0) ? 0 : 1;
            if (pi != ps || ps != pd) ++mismatches;
        }
    }
    double worst_cocycle = 0.0;
    FockRep f2 = build_fock_rep(PolarizedSpace::standard(2));
    for (int trial = 0; trial < 30; ++trial) {
        RMat g = rng.orthogonal(4, (trial % 2 == 0) ? +1 : -1);
        RMat h = rng.orthogonal(4, (trial % 3 == 0) ? -1 : +1);
        RMat k = rng.orthogonal(4, +1);
        cd lhs = cocycle_phase(f2, g, h) * cocycle_phase(f2, RMat(g * h), k);
        cd rhs = cocycle_phase(f2, g, RMat(h * k)) * cocycle_phase(f2, h, k);
        worst_cocycle = std::max(worst_cocycle, std::abs(lhs - rhs));
    }
    bool pass = mismatches == 0 && worst_cocycle < 1e-8;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%lld parity mismatches in 800 draws, cocycle defect %.3e",
                  mismatches, worst_cocycle);
    report(6, "implementer parity equals intersection parity equals (1-det)/2", pass, buf);
}

void criterion_kinds() {
    Rng rng(1007);
    bool table = true;
    std::vector<Kind> kind_of(9, Kind::Even);
    for (int d = 1; d <= 8; ++d) {
        kind_of[d] = classify_kind(clifford_algebra(d));
        table = table && (kind_of[d] == (d % 2 ? Kind::Odd : Kind::Even));
    }
    GradedMatrixAlgebra t11 = graded_tensor(clifford_algebra(1), clifford_algebra(1));
    bool cl1cl1 = t11.dim() == 4 && classify_kind(t11) == Kind::Even;
    long long additivity_mismatch = 0;
    for (int trial = 0; trial < 20; ++trial) {
        int da = rng.uniform_int(1, 4), db = rng.uniform_int(1, 4);
        Kind kt = classify_kind(graded_tensor(clifford_algebra(da), clifford_algebra(db)));
        bool odd_expected = ((kind_of[da] == Kind::Odd) + (kind_of[db] == Kind::Odd)) % 2 == 1;
        if ((kt == Kind::Odd) != odd_expected) ++additivity_mismatch;
    }
    bool pass = table && cl1cl1 && additivity_mismatch == 0;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "table %s, rank-one square %s, %lld additivity mismatches",
                  table ? "alternates" : "WRONG", cl1cl1 ? "even/dim 4" : "WRONG",
                  additivity_mismatch);
    report(7, "kind classification alternates with the generator count", pass, buf);
}

void criterion_cech() {
    SuiteParams p;
    p.trials = 50;
    SuiteReport classes = run_suite("cech-classes", p, 2024);
    SuiteReport tensor = run_suite("tensor-formula", p, 2024);
    int failing = 0;
    for (const auto& c : classes.checks)
        if (!c.pass) ++failing;
    for (const auto& c : tensor.checks)
        if (!c.pass) ++failing;
    bool pass = failing == 0;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%zu class checks, %d failing",
                  classes.checks.size() + tensor.checks.size(), failing);
    report(8, "cocycle classes on the four fixtures and the tensor formula", pass, buf);
}

void criterion_skew_stability() {
    Rng rng(1009);
    long long mismatches = 0;
    for (int defect = 0; defect <= 3; ++defect) {
        const int dim = 4 + defect;
        SubLagrangian l{dim, CMat::Zero(dim, 2)};
        const double s = 1.0 / std::sqrt(2.0);
        for (int j = 0; j < 2; ++j) {
            l.frame(2 * j, j) = s;
            l.frame(2 * j + 1, j) = cd(0, -s);
        }
        int base = skew_index(l);
        if (base != defect % 2) ++mismatches;
        for (int trial = 0; trial < 100; ++trial) {
            RMat g = rng.near_identity_orthogonal(dim, 0.05);
            SubLagrangian gl{dim, g.cast<cd>() * l.frame};
            if (skew_index(gl) != base) ++mismatches;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%lld mismatches over 400 perturbations, defects 0..3",
                  mismatches);
    report(9, "skew index is stable under small orthogonal perturbations", mismatches == 0, buf);
}

void criterion_polarization_flip() {
    Rng rng(1010);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        int d = rng.uniform_int(3, 6);
        int l = rng.uniform_int(1, 4);
        TruncatedLoopSpace s(d, 12);
        TruncatedLoopSpace flipped(d, 12, false, 0, true);
        CMat a = random_skew_cmat(rng, d);
        CMat b = random_skew_cmat(rng, d);
        LoopMatrixField x = LoopMatrixField::single_mode(a, -l);
        LoopMatrixField y = LoopMatrixField::single_mode(b, l);
        cd v = cocycle_omega_imp(x, y, s).value;
        cd w = cocycle_omega_imp(x, y, flipped).value;
        worst = std::max(worst, std::abs(v + w));
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf), "max |Omega + Omega_flipped| = %.3e over 20 pairs", worst);
    report(10, "conjugate polarization negates the extension cocycle", worst < 1e-9, buf);
}

}  // namespace

int main() {
    criterion_central_identity();
    criterion_closed_form();
    criterion_omega_anchor();
    criterion_dbeta();
    criterion_fock();
    criterion_parity();
    criterion_kinds();
    criterion_cech();
    criterion_skew_stability();
    criterion_polarization_flip();
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
