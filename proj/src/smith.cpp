#include "cliffver/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace cliffver {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in add");
    return r;
}
long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in sub");
    return r;
}
long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in mul");
    return r;
}

namespace {

// extended gcd: returns (g, x, y) with x*a + y*b = g >= 0
struct Egcd {
    long long g, x, y;
};
Egcd egcd(long long a, long long b) {
    long long old_r = a, r = b;
    long long old_s = 1, s = 0;
    long long old_t = 0, t = 1;
    while (r != 0) {
        long long q = old_r / r;
        long long tmp;
        tmp = checked_sub(old_r, checked_mul(q, r)); old_r = r; r = tmp;
        tmp = checked_sub(old_s, checked_mul(q, s)); old_s = s; s = tmp;
        tmp = checked_sub(old_t, checked_mul(q, t)); old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

void row_combine(IMat& a, IMat& u, Eigen::Index i, Eigen::Index j, long long p, long long q,
                 long long r, long long s) {
    // rows (i, j) <- (p*row_i + q*row_j, r*row_i + s*row_j); p*s - q*r = +-1
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
        long long ai = a(i, k), aj = a(j, k);
        a(i, k) = checked_add(checked_mul(p, ai), checked_mul(q, aj));
        a(j, k) = checked_add(checked_mul(r, ai), checked_mul(s, aj));
    }
    for (Eigen::Index k = 0; k < u.cols(); ++k) {
        long long ui = u(i, k), uj = u(j, k);
        u(i, k) = checked_add(checked_mul(p, ui), checked_mul(q, uj));
        u(j, k) = checked_add(checked_mul(r, ui), checked_mul(s, uj));
    }
}

void col_combine(IMat& a, IMat& v, Eigen::Index i, Eigen::Index j, long long p, long long q,
                 long long r, long long s) {
    for (Eigen::Index k = 0; k < a.rows(); ++k) {
        long long ai = a(k, i), aj = a(k, j);
        a(k, i) = checked_add(checked_mul(p, ai), checked_mul(q, aj));
        a(k, j) = checked_add(checked_mul(r, ai), checked_mul(s, aj));
    }
    for (Eigen::Index k = 0; k < v.rows(); ++k) {
        long long vi = v(k, i), vj = v(k, j);
        v(k, i) = checked_add(checked_mul(p, vi), checked_mul(q, vj));
        v(k, j) = checked_add(checked_mul(r, vi), checked_mul(s, vj));
    }
}

}  // namespace

SmithResult smith_normal_form(const IMat& m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    SmithResult res;
    res.u = IMat::Identity(rows, rows);
    res.v = IMat::Identity(cols, cols);
    res.d = m;
    IMat& a = res.d;
    IMat& u = res.u;
    IMat& v = res.v;

    const Eigen::Index t_max = std::min(rows, cols);
    for (Eigen::Index t = 0; t < t_max; ++t) {
        // locate a pivot: smallest nonzero absolute value in the trailing block
        Eigen::Index pi = -1, pj = -1;
        long long best = 0;
        for (Eigen::Index i = t; i < rows; ++i)
            for (Eigen::Index j = t; j < cols; ++j) {
                long long x = std::llabs(a(i, j));
                if (x != 0 && (pi < 0 || x < best)) { best = x; pi = i; pj = j; }
            }
        if (pi < 0) break;  // trailing block zero
        if (pi != t) { a.row(pi).swap(a.row(t)); u.row(pi).swap(u.row(t)); }
        if (pj != t) { a.col(pj).swap(a.col(t)); v.col(pj).swap(v.col(t)); }

        // clear column then row; a plain subtraction when the pivot divides,
        // a Bezout rotation (which strictly shrinks the pivot) otherwise
        auto clear_col_entry = [&](Eigen::Index i) {
            if (a(i, t) % a(t, t) == 0) {
                long long q = a(i, t) / a(t, t);
                for (Eigen::Index k2 = 0; k2 < cols; ++k2)
                    a(i, k2) = checked_sub(a(i, k2), checked_mul(q, a(t, k2)));
                for (Eigen::Index k2 = 0; k2 < rows; ++k2)
                    u(i, k2) = checked_sub(u(i, k2), checked_mul(q, u(t, k2)));
            } else {
                auto [g, x, y] = egcd(a(t, t), a(i, t));
                row_combine(a, u, t, i, x, y, -(a(i, t) / g), a(t, t) / g);
            }
        };
        auto clear_row_entry = [&](Eigen::Index j) {
            if (a(t, j) % a(t, t) == 0) {
                long long q = a(t, j) / a(t, t);
                for (Eigen::Index k2 = 0; k2 < rows; ++k2)
                    a(k2, j) = checked_sub(a(k2, j), checked_mul(q, a(k2, t)));
                for (Eigen::Index k2 = 0; k2 < cols; ++k2)
                    v(k2, j) = checked_sub(v(k2, j), checked_mul(q, v(k2, t)));
            } else {
                auto [g, x, y] = egcd(a(t, t), a(t, j));
                col_combine(a, v, t, j, x, y, -(a(t, j) / g), a(t, t) / g);
            }
        };
        bool again = true;
        while (again) {
            again = false;
            for (Eigen::Index i = t + 1; i < rows; ++i)
                if (a(i, t) != 0) clear_col_entry(i);
            for (Eigen::Index j = t + 1; j < cols; ++j)
                if (a(t, j) != 0) clear_row_entry(j);
            for (Eigen::Index i = t + 1; i < rows && !again; ++i)
                if (a(i, t) != 0) again = true;
        }

        // pull the block gcd into the pivot so the divisibility chain can hold
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (Eigen::Index i = t + 1; i < rows && !dirty; ++i)
                for (Eigen::Index j = t + 1; j < cols && !dirty; ++j) {
                    if (a(t, t) != 0 && a(i, j) % a(t, t) != 0) {
                        // add row i to row t, then re-clear
                        for (Eigen::Index k = 0; k < cols; ++k)
                            a(t, k) = checked_add(a(t, k), a(i, k));
                        for (Eigen::Index k = 0; k < rows; ++k)
                            u(t, k) = checked_add(u(t, k), u(i, k));
                        again = true;
                        while (again) {
                            again = false;
                            for (Eigen::Index j2 = t + 1; j2 < cols; ++j2)
                                if (a(t, j2) != 0) clear_row_entry(j2);
                            for (Eigen::Index i2 = t + 1; i2 < rows; ++i2)
                                if (a(i2, t) != 0) clear_col_entry(i2);
                            for (Eigen::Index j2 = t + 1; j2 < cols && !again; ++j2)
                                if (a(t, j2) != 0) again = true;
                        }
                        dirty = true;
                    }
                }
        }

        if (a(t, t) < 0) {
            a.row(t) = -a.row(t);
            u.row(t) = -u.row(t);
        }
    }

    for (Eigen::Index i = 0; i < t_max; ++i)
        if (res.d(i, i) != 0) res.rank = static_cast<int>(i) + 1;
    return res;
}

long long det_integer(const IMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: square matrix required");
    const Eigen::Index n = m.rows();
    if (n == 0) return 1;
    IMat a = m;
    long long prev = 1;
    int sign = 1;
    for (Eigen::Index k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index p = -1;
            for (Eigen::Index i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            a.row(k).swap(a.row(p));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j) {
                long long num = checked_sub(checked_mul(a(i, j), a(k, k)), checked_mul(a(i, k), a(k, j)));
                a(i, j) = num / prev;  // Bareiss: exact division
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::optional<std::vector<long long>> solve_integer(const IMat& m, const std::vector<long long>& b) {
    if (static_cast<Eigen::Index>(b.size()) != m.rows())
        throw std::invalid_argument("solve_integer: size mismatch");
    SmithResult s = smith_normal_form(m);
    const Eigen::Index rows = m.rows(), cols = m.cols();
    std::vector<long long> ub(rows, 0);
    for (Eigen::Index i = 0; i < rows; ++i) {
        long long acc = 0;
        for (Eigen::Index j = 0; j < rows; ++j)
            acc = checked_add(acc, checked_mul(s.u(i, j), b[j]));
        ub[i] = acc;
    }
    std::vector<long long> y(cols, 0);
    const Eigen::Index t_max = std::min(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        long long d = (i < t_max) ? s.d(i, i) : 0;
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        }
    }
    std::vector<long long> x(cols, 0);
    for (Eigen::Index i = 0; i < cols; ++i) {
        long long acc = 0;
        for (Eigen::Index j = 0; j < cols; ++j)
            acc = checked_add(acc, checked_mul(s.v(i, j), y[j]));
        x[i] = acc;
    }
    return x;
}

bool LatticeInvariant::is_zero() const {
    for (long long c : coords)
        if (c != 0) return false;
    return true;
}

LatticeInvariant reduce_mod_lattice(const IMat& m, const std::vector<long long>& z, long long modulus) {
    const Eigen::Index n = m.rows();
    if (static_cast<Eigen::Index>(z.size()) != n)
        throw std::invalid_argument("reduce_mod_lattice: size mismatch");
    IMat aug;
    if (modulus != 0) {
        aug.resize(n, m.cols() + n);
        aug.leftCols(m.cols()) = m;
        aug.rightCols(n) = modulus * IMat::Identity(n, n);
    } else {
        aug = m;
    }
    SmithResult s = smith_normal_form(aug);
    LatticeInvariant inv;
    inv.coords.resize(n);
    inv.moduli.resize(n);
    const Eigen::Index t_max = std::min(aug.rows(), aug.cols());
    for (Eigen::Index i = 0; i < n; ++i) {
        long long acc = 0;
        for (Eigen::Index j = 0; j < n; ++j)
            acc = checked_add(acc, checked_mul(s.u(i, j), z[j]));
        long long d = (i < t_max) ? s.d(i, i) : 0;
        if (d != 0) {
            long long r = acc % d;
            if (r < 0) r += d;
            inv.coords[i] = r;
            inv.moduli[i] = d;
        } else {
            inv.coords[i] = acc;
            inv.moduli[i] = 0;
        }
    }
    return inv;
}

int gf2_rank(const IMat& m) {
    std::vector<std::vector<int>> a(m.rows(), std::vector<int>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) a[i][j] = static_cast<int>(((m(i, j) % 2) + 2) % 2);
    int rank = 0;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = row; i < m.rows(); ++i)
            if (a[i][col]) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[row]);
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (i != row && a[i][col])
                for (Eigen::Index j = 0; j < m.cols(); ++j) a[i][j] ^= a[row][j];
        ++row;
        ++rank;
    }
    return rank;
}

std::vector<std::vector<int>> gf2_kernel_basis(const IMat& m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    std::vector<std::vector<int>> a(rows, std::vector<int>(cols));
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) a[i][j] = static_cast<int>(((m(i, j) % 2) + 2) % 2);
    std::vector<Eigen::Index> pivot_col;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = row; i < rows; ++i)
            if (a[i][col]) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[row]);
        for (Eigen::Index i = 0; i < rows; ++i)
            if (i != row && a[i][col])
                for (Eigen::Index j = 0; j < cols; ++j) a[i][j] ^= a[row][j];
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<std::vector<int>> basis;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<int> vec(cols, 0);
        vec[free_col] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r)
            vec[pivot_col[r]] = a[r][free_col];
        basis.push_back(std::move(vec));
    }
    return basis;
}

std::optional<std::vector<int>> gf2_solve(const IMat& m, const std::vector<int>& b) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    if (static_cast<Eigen::Index>(b.size()) != rows)
        throw std::invalid_argument("gf2_solve: size mismatch");
    std::vector<std::vector<int>> a(rows, std::vector<int>(cols + 1));
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) a[i][j] = static_cast<int>(((m(i, j) % 2) + 2) % 2);
        a[i][cols] = ((b[i] % 2) + 2) % 2;
    }
    std::vector<Eigen::Index> pivot_col;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = row; i < rows; ++i)
            if (a[i][col]) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[row]);
        for (Eigen::Index i = 0; i < rows; ++i)
            if (i != row && a[i][col])
                for (Eigen::Index j = 0; j <= cols; ++j) a[i][j] ^= a[row][j];
        pivot_col.push_back(col);
        ++row;
    }
    for (Eigen::Index i = row; i < rows; ++i)
        if (a[i][cols]) return std::nullopt;
    std::vector<int> x(cols, 0);
    for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = a[r][cols];
    return x;
}

}  // namespace cliffver
