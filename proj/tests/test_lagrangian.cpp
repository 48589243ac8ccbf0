#include "doctest.h"

#include "cliffver/lagrangian.hpp"
#include "cliffver/rng.hpp"

using namespace cliffver;

namespace {
SubLagrangian standard_lagrangian(int n) {
    return SubLagrangian::from_polarized(PolarizedSpace::standard(n));
}
}  // namespace

TEST_CASE("equivalence distance") {
    SubLagrangian l = standard_lagrangian(1);
    CHECK(equivalence_distance(l, l) == 0.0);
    SubLagrangian lbar{l.real_dim, l.frame.conjugate()};
    CHECK(equivalence_distance(l, lbar) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    // a phase rotation of the frame spans the same subspace
    SubLagrangian rotated{l.real_dim, CMat(l.frame * std::exp(cd(0, 0.7)))};
    CHECK(equivalence_distance(l, rotated) < 1e-14);
    SubLagrangian other = standard_lagrangian(2);
    CHECK_THROWS_AS(equivalence_distance(l, other), std::invalid_argument);
}

TEST_CASE("intersection parity on the reflection example") {
    SubLagrangian l = standard_lagrangian(1);
    CHECK(intersection_parity(l, l) == 0);
    RMat g = RMat::Identity(2, 2);
    g(1, 1) = -1.0;
    SubLagrangian gl{2, g.cast<cd>() * l.frame};
    CHECK(intersection_parity(gl, l) == 1);
    // block sum of the example with itself has even intersection
    SubLagrangian l2 = standard_lagrangian(2);
    RMat g2 = RMat::Identity(4, 4);
    g2(1, 1) = -1.0;
    g2(3, 3) = -1.0;
    SubLagrangian g2l{4, g2.cast<cd>() * l2.frame};
    CHECK(intersection_parity(g2l, l2) == 0);
    // defect > 0 is rejected
    SubLagrangian sub{4, l.frame};  // rank 1 in ambient 4
    sub.frame = CMat::Zero(4, 1);
    sub.frame(0, 0) = cd(1.0 / std::sqrt(2.0), 0);
    sub.frame(1, 0) = cd(0, -1.0 / std::sqrt(2.0));
    CHECK_THROWS_AS(intersection_parity(sub, sub), std::invalid_argument);
}

TEST_CASE("intersection parity matches the determinant component") {
    Rng rng(17);
    for (int n = 1; n <= 3; ++n) {
        SubLagrangian l = standard_lagrangian(n);
        for (int t = 0; t < 40; ++t) {
            int sign = (t % 2 == 0) ? 1 : -1;
            RMat g = rng.orthogonal(2 * n, sign);
            SubLagrangian gl{2 * n, g.cast<cd>() * l.frame};
            CHECK(intersection_parity(gl, l) == (sign > 0 ? 0 : 1));
        }
    }
}

TEST_CASE("near-degenerate parity aborts loudly") {
    // a double reflection has a two-dimensional intersection, which blurs to
    // dimension zero under a small special-orthogonal perturbation and leaves
    // singular values of the size of the perturbation
    SubLagrangian l = standard_lagrangian(2);
    RMat refl = RMat::Identity(4, 4);
    refl(1, 1) = -1.0;
    refl(3, 3) = -1.0;
    Rng rng(5);
    RMat s = rng.skew_matrix(4);
    double eps = 1e-7;
    RMat id = RMat::Identity(4, 4);
    RMat cay = (id - eps * s).partialPivLu().solve(id + eps * s);
    RMat g = refl * cay;
    SubLagrangian gl{4, g.cast<cd>() * l.frame};
    CHECK_THROWS_AS(intersection_parity(gl, l, 1e-9), IllConditioned);
}

TEST_CASE("skew index equals defect parity") {
    CHECK(skew_index(standard_lagrangian(1)) == 0);
    SubLagrangian empty{1, CMat::Zero(1, 0)};
    CHECK(skew_index(empty) == 1);
    SubLagrangian half{3, CMat::Zero(3, 1)};
    half.frame(0, 0) = cd(1.0 / std::sqrt(2.0), 0);
    half.frame(1, 0) = cd(0, -1.0 / std::sqrt(2.0));
    CHECK(skew_index(half) == 1);
}

TEST_CASE("skew index is stable under small orthogonal motion") {
    Rng rng(19);
    for (int defect = 0; defect <= 3; ++defect) {
        int dim = 4 + defect;
        SubLagrangian l{dim, CMat::Zero(dim, 2)};
        const double s = 1.0 / std::sqrt(2.0);
        for (int j = 0; j < 2; ++j) {
            l.frame(2 * j, j) = s;
            l.frame(2 * j + 1, j) = cd(0, -s);
        }
        int base = skew_index(l);
        CHECK(base == defect % 2);
        for (int t = 0; t < 25; ++t) {
            RMat g = rng.near_identity_orthogonal(dim, 0.03);
            SubLagrangian gl{dim, g.cast<cd>() * l.frame};
            CHECK(skew_index(gl) == base);
        }
    }
}

TEST_CASE("completion pairs the defect coordinates in order") {
    SubLagrangian l{4, CMat::Zero(4, 1)};
    const double s = 1.0 / std::sqrt(2.0);
    l.frame(2, 0) = s;
    l.frame(3, 0) = cd(0, -s);
    SubLagrangian full = complete_sublagrangian(l);
    REQUIRE(full.defect() == 0);
    REQUIRE(full.rank() == 2);
    CVec expected = CVec::Zero(4);
    expected(0) = s;
    expected(1) = cd(0, -s);
    CHECK((full.frame.col(1) - expected).norm() < 1e-12);
    // defect 0 passes through unchanged
    SubLagrangian same = complete_sublagrangian(full);
    CHECK((same.frame - full.frame).norm() == 0.0);
}

TEST_CASE("odd defect grows the ambient space") {
    SubLagrangian l{3, CMat::Zero(3, 1)};
    const double s = 1.0 / std::sqrt(2.0);
    l.frame(0, 0) = s;
    l.frame(1, 0) = cd(0, -s);
    SubLagrangian full = complete_sublagrangian(l);
    CHECK(full.real_dim == 4);
    CHECK(full.rank() == 2);
    CHECK(full.defect() == 0);
}

TEST_CASE("completions from different seeds are compatible") {
    SubLagrangian l{8, CMat::Zero(8, 2)};
    const double s = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < 2; ++j) {
        l.frame(2 * j, j) = s;
        l.frame(2 * j + 1, j) = cd(0, -s);
    }
    SubLagrangian c1 = complete_sublagrangian(l, 101);
    SubLagrangian c2 = complete_sublagrangian(l, 202);
    CHECK(c1.defect() == 0);
    CHECK(c2.defect() == 0);
    CHECK(intersection_parity(c1, c2) == 0);
    CHECK(skew_index(c1) == skew_index(c2));
    CHECK(std::isfinite(equivalence_distance(c1, c2)));
}
