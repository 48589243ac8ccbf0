#pragma once

#include <vector>

#include "cliffver/matrix.hpp"

namespace cliffver {

// Concrete graded *-algebra: a homogeneous basis inside a matrix algebra,
// graded by conjugation with an involutive matrix.  Closure is verified, not
// assumed.  An optional generating set (with degrees) cuts the center systems
// down to generator constraints; empty means the whole basis is used.
struct GradedMatrixAlgebra {
    int ambient = 0;
    CMat grading;
    std::vector<CMat> basis;
    std::vector<int> degree;  // 0 even, 1 odd per basis element
    std::vector<CMat> generators;
    std::vector<int> generator_degree;

    int dim() const { return static_cast<int>(basis.size()); }
    void validate(double tol = 1e-8) const;
};

enum class Kind { Even, Odd, NotSuperFactor };

inline const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Even: return "even";
        case Kind::Odd: return "odd";
        default: return "not-super-factor";
    }
}

struct CenterBasis {
    std::vector<CMat> even;
    std::vector<CMat> odd;
    int dim() const { return static_cast<int>(even.size() + odd.size()); }
};

// Solutions of the graded commutation system against the generating set.
CenterBasis graded_center(const GradedMatrixAlgebra& a, double tol = 1e-8);

// Ordinary commutant within the algebra, split into even/odd parts.
CenterBasis ungraded_center(const GradedMatrixAlgebra& a, double tol = 1e-8);

// Branches on the center dimensions: graded center must be 1-dimensional,
// then ungraded dim 1 -> even kind, 2 -> odd kind.  Any other ungraded
// dimension with trivial graded center is flagged as inconsistent.
Kind classify_kind(const GradedMatrixAlgebra& a, double tol = 1e-8);

// Koszul-signed tensor product via the grading twist: a (x) b is realized as
// (a * Gamma_A^{|b|}) (x) b, reducing the signed product to plain matrix
// multiplication.
GradedMatrixAlgebra graded_tensor(const GradedMatrixAlgebra& a, const GradedMatrixAlgebra& b);

// The twist embedding of a single homogeneous operator pair.
CMat koszul_tensor_operator(const CMat& a, const CMat& grading_a, const CMat& b, int deg_b);

// Clifford algebra on R^d inside its Fock representation (one auxiliary
// coordinate for odd d); generators are the d coordinate images.
GradedMatrixAlgebra clifford_algebra(int d);

// B(C^m) with a diagonal +-1 grading given by signs.
GradedMatrixAlgebra full_matrix_algebra(const std::vector<int>& signs);

// C (+) C with the swap grading, and with the trivial grading.
GradedMatrixAlgebra cc_swap_graded();
GradedMatrixAlgebra cc_trivially_graded();

// M_2 (+) M_2 block algebra with the swap grading.
GradedMatrixAlgebra m2_plus_m2_swap();

}  // namespace cliffver
