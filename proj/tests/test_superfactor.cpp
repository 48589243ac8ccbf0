#include "doctest.h"

#include "cliffver/rng.hpp"
#include "cliffver/superfactor.hpp"

using namespace cliffver;

TEST_CASE("graded centers") {
    // full matrix algebra with trivial grading: ordinary center
    CHECK(graded_center(full_matrix_algebra({1, 1})).dim() == 1);
    CHECK(graded_center(clifford_algebra(1)).dim() == 1);
    CHECK(graded_center(cc_swap_graded()).dim() == 1);
}

TEST_CASE("ungraded centers") {
    CHECK(ungraded_center(clifford_algebra(2)).dim() == 1);
    CenterBasis cl1 = ungraded_center(clifford_algebra(1));
    CHECK(cl1.dim() == 2);
    CHECK(cl1.even.size() == 1);
    CHECK(cl1.odd.size() == 1);
    CHECK(ungraded_center(m2_plus_m2_swap()).dim() == 2);
}

TEST_CASE("kind classification") {
    Kind expected[] = {Kind::Odd, Kind::Even, Kind::Odd, Kind::Even, Kind::Odd, Kind::Even};
    for (int d = 1; d <= 6; ++d) CHECK(classify_kind(clifford_algebra(d)) == expected[d - 1]);
    CHECK(classify_kind(full_matrix_algebra({1, -1})) == Kind::Even);
    CHECK(classify_kind(cc_trivially_graded()) == Kind::NotSuperFactor);
}

TEST_CASE("koszul twist reproduces the signed product on homogeneous pairs") {
    Rng rng(61);
    GradedMatrixAlgebra a = clifford_algebra(2);
    GradedMatrixAlgebra b = clifford_algebra(2);
    for (size_t i1 = 0; i1 < a.basis.size(); ++i1)
        for (size_t j1 = 0; j1 < b.basis.size(); ++j1)
            for (size_t i2 = 0; i2 < a.basis.size(); ++i2)
                for (size_t j2 = 0; j2 < b.basis.size(); ++j2) {
                    CMat lhs = koszul_tensor_operator(a.basis[i1], a.grading, b.basis[j1], b.degree[j1]) *
                               koszul_tensor_operator(a.basis[i2], a.grading, b.basis[j2], b.degree[j2]);
                    double sign = (a.degree[i2] * b.degree[j1]) % 2 ? -1.0 : 1.0;
                    CMat prod_a = a.basis[i1] * a.basis[i2];
                    CMat prod_b = b.basis[j1] * b.basis[j2];
                    CMat rhs = sign * koszul_tensor_operator(
                                          prod_a, a.grading, prod_b,
                                          (b.degree[j1] + b.degree[j2]) % 2);
                    CHECK((lhs - rhs).norm() < 1e-12);
                }
    (void)rng;
}

TEST_CASE("tensor products of clifford algebras") {
    GradedMatrixAlgebra t = graded_tensor(clifford_algebra(1), clifford_algebra(1));
    CHECK(t.dim() == 4);
    CHECK(graded_center(t).dim() == 1);
    CHECK(classify_kind(t) == Kind::Even);

    // unit tensor factor preserves the invariants
    GradedMatrixAlgebra unit = graded_tensor(clifford_algebra(2), clifford_algebra(0));
    CHECK(classify_kind(unit) == Kind::Even);
    CHECK(graded_center(unit).dim() == 1);
    CHECK(ungraded_center(unit).dim() == 1);

    GradedMatrixAlgebra t23 = graded_tensor(clifford_algebra(2), clifford_algebra(3));
    CHECK(classify_kind(t23) == Kind::Odd);
    CHECK(classify_kind(t23) == classify_kind(clifford_algebra(5)));
}

TEST_CASE("kind additivity over random clifford pairs") {
    Rng rng(67);
    for (int t = 0; t < 10; ++t) {
        int da = rng.uniform_int(1, 4), db = rng.uniform_int(1, 4);
        Kind kt = classify_kind(graded_tensor(clifford_algebra(da), clifford_algebra(db)));
        CHECK((kt == Kind::Odd) == ((da + db) % 2 == 1));
    }
}

TEST_CASE("graded center sits in the even ungraded center") {
    for (int d = 1; d <= 4; ++d) {
        CenterBasis gc = graded_center(clifford_algebra(d));
        CHECK(gc.odd.empty());
    }
}

TEST_CASE("algebra validation") {
    GradedMatrixAlgebra a = clifford_algebra(3);
    a.validate();
    GradedMatrixAlgebra broken = a;
    broken.degree[1] = 0;  // generator declared even
    CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
    GradedMatrixAlgebra open_basis = a;
    open_basis.basis.resize(3);  // span no longer closed under products
    open_basis.degree.resize(3);
    CHECK_THROWS_AS(open_basis.validate(), std::invalid_argument);
}
