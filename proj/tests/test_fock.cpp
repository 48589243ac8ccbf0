#include "doctest.h"

#include "cliffver/fock.hpp"
#include "cliffver/rng.hpp"

using namespace cliffver;

TEST_CASE("one-mode generators satisfy the quadratic relations") {
    FockRep f = build_fock_rep(PolarizedSpace::standard(1));
    CMat create = f.gen_create[0], annih = f.gen_annih[0];
    CHECK((create * create).norm() == 0.0);
    CMat anti = annih * create + create * annih;
    CHECK((anti + 2.0 * CMat::Identity(2, 2)).norm() < 1e-14);
}

TEST_CASE("representation dimension is 2^n") {
    CHECK(build_fock_rep(PolarizedSpace::standard(2)).dim == 4);
    CHECK(build_fock_rep(PolarizedSpace::standard(0)).dim == 1);
}

TEST_CASE("clifford element is linear and squares by the bilinear pairing") {
    FockRep f = build_fock_rep(PolarizedSpace::standard(2));
    CHECK(f.clifford(CVec::Zero(4)).norm() == 0.0);
    // real vector f + conj f has pairing 2 with itself
    CVec v = f.space.frame.col(0) + f.space.frame.col(0).conjugate();
    CMat sq = f.clifford(v) * f.clifford(v);
    CHECK((sq + 2.0 * CMat::Identity(4, 4)).norm() < 1e-13);
    CHECK_THROWS_AS(f.clifford(CVec::Zero(3)), std::invalid_argument);
}

TEST_CASE("wedge operator sparsity on the subset basis") {
    for (int n = 1; n <= 4; ++n) {
        FockRep f = build_fock_rep(PolarizedSpace::standard(n));
        CMat pi_f = f.clifford(f.space.frame.col(0));
        int nonzeros = 0;
        for (int r = 0; r < f.dim; ++r)
            for (int c = 0; c < f.dim; ++c)
                if (std::abs(pi_f(r, c)) > 1e-14) ++nonzeros;
        CHECK(nonzeros == (1 << (n - 1)));
    }
}

TEST_CASE("grading operator diagonal and anticommutation") {
    FockRep f1 = build_fock_rep(PolarizedSpace::standard(1));
    CHECK(f1.grading(0, 0) == cd(1, 0));
    CHECK(f1.grading(1, 1) == cd(-1, 0));
    FockRep f2 = build_fock_rep(PolarizedSpace::standard(2));
    CHECK(f2.grading(0, 0) == cd(1, 0));
    CHECK(f2.grading(1, 1) == cd(-1, 0));
    CHECK(f2.grading(2, 2) == cd(-1, 0));
    CHECK(f2.grading(3, 3) == cd(1, 0));
    CMat g = grading_operator(f2);
    CMat pi = f2.clifford(f2.space.frame.col(0));
    CHECK((g * pi + pi * g).norm() < 1e-14);
    CHECK((g * g - CMat::Identity(4, 4)).norm() == 0.0);
}

TEST_CASE("relation residuals vanish for built representations") {
    for (int n = 0; n <= 4; ++n) {
        FockRep f = build_fock_rep(PolarizedSpace::standard(n));
        auto rep = check_clifford_relations(f, 1e-12);
        CHECK(rep.pass);
        CHECK(rep.max_residual < 1e-12);
    }
}

TEST_CASE("a scaled generator is detected") {
    FockRep f = build_fock_rep(PolarizedSpace::standard(2));
    f.gen_create[0] *= 1.1;
    CHECK(check_clifford_relations(f, 1e-12).max_residual >= 0.1);
}

TEST_CASE("non-isotropic frames are rejected") {
    PolarizedSpace p;
    p.real_dim = 2;
    p.frame = CMat::Zero(2, 1);
    p.frame(0, 0) = 1.0;  // <conj f, f> = 1, not isotropic
    CHECK_THROWS_AS(build_fock_rep(p), std::invalid_argument);
}

TEST_CASE("adjoint of a generator is the negated conjugate generator") {
    Rng rng(3);
    FockRep f = build_fock_rep(PolarizedSpace::standard(3));
    for (int t = 0; t < 10; ++t) {
        CVec v = rng.gaussian_complex_matrix(6, 1);
        CHECK((f.clifford(v).adjoint() + f.clifford(v.conjugate())).norm() < 1e-12);
    }
}

TEST_CASE("orthogonal real vectors anticommute exactly") {
    Rng rng(5);
    FockRep f = build_fock_rep(PolarizedSpace::standard(3));
    RMat q = rng.orthogonal(6, +1);
    CMat a = f.clifford(q.col(0).cast<cd>());
    CMat b = f.clifford(q.col(1).cast<cd>());
    CHECK((a * b + b * a).norm() < 1e-12);
}

TEST_CASE("commutant and graded commutant are scalars") {
    for (int n = 1; n <= 4; ++n) {
        FockRep f = build_fock_rep(PolarizedSpace::standard(n));
        CHECK(commutant_dimension(f) == 1);
        CHECK(graded_commutant_dimension(f) == 1);
    }
    // dense and fast paths agree where both run
    FockRep f4 = build_fock_rep(PolarizedSpace::standard(4));
    CHECK(commutant_dimension(f4, 1e-9, true) == commutant_dimension(f4, 1e-9, false));
    CHECK(graded_commutant_dimension(f4, 1e-9, true) == graded_commutant_dimension(f4, 1e-9, false));
}

TEST_CASE("wedge signs match the permutation-sign oracle") {
    // applying creators in an arbitrary order produces sign(permutation)
    // relative to the ascending order
    FockRep f = build_fock_rep(PolarizedSpace::standard(4));
    CVec vac = CVec::Zero(f.dim);
    vac(0) = 1.0;
    int perm[][4] = {{2, 0, 3, 1}, {3, 2, 1, 0}, {1, 3, 0, 2}};
    int signs[] = {-1, +1, -1};
    for (int p = 0; p < 3; ++p) {
        CVec v = vac;
        for (int j = 3; j >= 0; --j) v = f.gen_create[perm[p][j]] * v;
        // permutation sign via explicit inversion count
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (perm[p][i] > perm[p][j]) ++inv;
        double sign = (inv % 2) ? -1.0 : 1.0;
        CHECK(sign == signs[p]);
        CVec expected = CVec::Zero(f.dim);
        expected(15) = sign * std::pow(kCreateScale, 4);
        CHECK((v - expected).norm() < 1e-12);
    }
}

TEST_CASE("even products star by exact conjugate reversal") {
    Rng rng(151);
    FockRep f = build_fock_rep(PolarizedSpace::standard(3));
    for (int t = 0; t < 10; ++t) {
        CVec u = rng.gaussian_complex_matrix(6, 1);
        CVec v = rng.gaussian_complex_matrix(6, 1);
        CMat lhs = (f.clifford(u) * f.clifford(v)).adjoint();
        CMat rhs = f.clifford(v.conjugate()) * f.clifford(u.conjugate());
        CHECK((lhs - rhs).norm() < 1e-12 * (1 + rhs.norm()));
    }
}
