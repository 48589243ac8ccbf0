#pragma once

#include <optional>
#include <vector>

#include "cliffver/matrix.hpp"

namespace cliffver {

// Checked 64-bit integer arithmetic; throws OverflowError instead of wrapping.
long long checked_add(long long a, long long b);
long long checked_sub(long long a, long long b);
long long checked_mul(long long a, long long b);

struct SmithResult {
    IMat u;  // unimodular, rows x rows
    IMat d;  // diagonal, d_i | d_{i+1}, nonnegative
    IMat v;  // unimodular, cols x cols
    int rank = 0;

    std::vector<long long> diagonal() const {
        std::vector<long long> out;
        for (Eigen::Index i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
        return out;
    }
};

// U * M * V = D with U, V unimodular and D diagonal with divisibility chain.
SmithResult smith_normal_form(const IMat& m);

long long det_integer(const IMat& m);  // Bareiss fraction-free, checked

// Solves M x = b over the integers; nullopt when no integral solution exists.
std::optional<std::vector<long long>> solve_integer(const IMat& m, const std::vector<long long>& b);

// Canonical coordinates of z modulo the lattice im(M) + modulus * Z^n
// (modulus 0 means im(M) alone).  Two vectors are congruent iff their
// invariants coincide entrywise.
struct LatticeInvariant {
    std::vector<long long> coords;
    std::vector<long long> moduli;  // 0 entries mean exact integers
    bool is_zero() const;
    bool operator==(const LatticeInvariant& o) const = default;
};
LatticeInvariant reduce_mod_lattice(const IMat& m, const std::vector<long long>& z, long long modulus);

// Finitely generated abelian group Z^rank + sum Z_{torsion[i]}.
struct AbelianGroup {
    int rank = 0;
    std::vector<long long> torsion;  // entries > 1
    bool operator==(const AbelianGroup& o) const = default;
};

// GF(2) Gaussian elimination utilities (dense, small).
int gf2_rank(const IMat& m);
std::vector<std::vector<int>> gf2_kernel_basis(const IMat& m);  // 0/1 vectors
// true + preimage when b is in the column span of m over GF(2)
std::optional<std::vector<int>> gf2_solve(const IMat& m, const std::vector<int>& b);

}  // namespace cliffver
