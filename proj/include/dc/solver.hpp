#pragma once

#include "dc/rational.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dc {

enum class Dom { Z, Q };

using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Plain rational linear solve A x = b by Gauss-Jordan elimination.
// Returns a particular solution with free variables set to zero, or nothing
// when the system is inconsistent.
inline std::optional<QVector> solve_linear_exact(QMatrix A, QVector b) {
    const int m = static_cast<int>(A.size());
    const int n = m ? static_cast<int>(A[0].size()) : 0;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int sel = -1;
        for (int i = r; i < m; ++i)
            if (A[i][c] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(A[r], A[sel]);
        std::swap(b[r], b[sel]);
        Rational inv = A[r][c];
        for (auto& v : A[r]) v /= inv;
        b[r] /= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rational f = A[i][c];
            for (int j = 0; j < n; ++j) A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < m; ++i)
        if (b[i] != 0) return std::nullopt;
    QVector x(n, Rational(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

// Row-style Hermite normal form with the unimodular transform tracked:
// H = U * M, pivots positive, entries above each pivot reduced into [0, pivot).
struct HnfResult {
    std::vector<std::vector<Int>> H;
    std::vector<std::vector<Int>> U;
    int rank = 0;
};

inline HnfResult row_hnf(std::vector<std::vector<Int>> M) {
    const int m = static_cast<int>(M.size());
    const int n = m ? static_cast<int>(M[0].size()) : 0;
    std::vector<std::vector<Int>> U(m, std::vector<Int>(m, 0));
    for (int i = 0; i < m; ++i) U[i][i] = 1;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int sel = -1;
        for (int i = r; i < m; ++i)
            if (M[i][c] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(M[r], M[sel]);
        std::swap(U[r], U[sel]);
        for (int i = r + 1; i < m; ++i) {
            while (M[i][c] != 0) {
                Int q = floor_div(M[r][c], M[i][c]);
                for (int j = 0; j < n; ++j) M[r][j] -= q * M[i][j];
                for (int j = 0; j < m; ++j) U[r][j] -= q * U[i][j];
                std::swap(M[r], M[i]);
                std::swap(U[r], U[i]);
            }
        }
        if (M[r][c] < 0) {
            for (auto& v : M[r]) v = -v;
            for (auto& v : U[r]) v = -v;
        }
        for (int i = 0; i < r; ++i) {
            Int q = floor_div(M[i][c], M[r][c]);
            if (q != 0) {
                for (int j = 0; j < n; ++j) M[i][j] -= q * M[r][j];
                for (int j = 0; j < m; ++j) U[i][j] -= q * U[r][j];
            }
        }
        ++r;
    }
    return {std::move(M), std::move(U), r};
}

// Solve A x ≡ b (mod Z in every row) where each column is constrained to
// integer or rational scalars.
//
// Two stages. First, Gauss-Jordan pivoting restricted to rational columns;
// each pivot row gains an explicit integer slack recording its mod-Z freedom.
// Second, every unused row is a congruence over the integer vector
// w = (integer-domain variables, pivot slacks); these are absorbed one at a
// time into an affine lattice offset + basis, using extended-gcd chains for
// particular solutions and unimodular column transforms for the kernel.
inline std::optional<QVector> solve_mod_integers(const QMatrix& A, const QVector& b,
                                                 const std::vector<Dom>& domains) {
    const int m = static_cast<int>(A.size());
    const int n = m ? static_cast<int>(A[0].size()) : static_cast<int>(domains.size());
    std::vector<int> rcols, zcols;
    for (int j = 0; j < n; ++j)
        (domains[j] == Dom::Q ? rcols : zcols).push_back(j);

    QMatrix M = A;
    QVector rhs = b;
    std::vector<QVector> slk(m);
    std::vector<std::pair<int, int>> pivots;
    std::vector<bool> used(m, false);

    for (int j : rcols) {
        int piv = -1;
        for (int i = 0; i < m; ++i)
            if (!used[i] && M[i][j] != 0) { piv = i; break; }
        if (piv < 0) continue;
        Rational p = M[piv][j];
        for (auto& v : M[piv]) v /= p;
        rhs[piv] /= p;
        for (auto& v : slk[piv]) v /= p;
        for (int i = 0; i < m; ++i) slk[i].push_back(Rational(0));
        slk[piv].back() = Rational(-1) / p;
        pivots.emplace_back(piv, j);
        used[piv] = true;
        for (int i = 0; i < m; ++i) {
            if (i == piv || M[i][j] == 0) continue;
            Rational f = M[i][j];
            for (int k = 0; k < n; ++k) M[i][k] -= f * M[piv][k];
            rhs[i] -= f * rhs[piv];
            for (std::size_t k = 0; k < slk[i].size(); ++k) slk[i][k] -= f * slk[piv][k];
        }
    }

    const int s = static_cast<int>(zcols.size() + pivots.size());
    std::vector<Int> o(s, 0);
    std::vector<std::vector<Int>> Bv(s, std::vector<Int>(s, 0));
    for (int i = 0; i < s; ++i) Bv[i][i] = 1;

    for (int t = 0; t < m; ++t) {
        if (used[t]) continue;
        QVector c;
        c.reserve(s);
        for (int j : zcols) c.push_back(M[t][j]);
        for (const auto& v : slk[t]) c.push_back(v);
        Rational beta = rhs[t];
        bool all_zero = true;
        for (const auto& v : c)
            if (v != 0) { all_zero = false; break; }
        if (all_zero) {
            if (!is_integer(beta)) return std::nullopt;
            continue;
        }
        // c . (o + Bv v) ≡ beta (mod Z)  =>  (c Bv) v ≡ beta - c.o (mod Z)
        Rational co = 0;
        for (int i = 0; i < s; ++i) co += c[i] * Rational(o[i]);
        QVector cB(s, Rational(0));
        for (int col = 0; col < s; ++col) {
            Rational acc = 0;
            for (int i = 0; i < s; ++i)
                if (c[i] != 0 && Bv[i][col] != 0) acc += c[i] * Rational(Bv[i][col]);
            cB[col] = acc;
        }
        Rational rv = beta - co;
        Int lam = den(rv);
        for (const auto& v : cB) lam = ilcm(lam, den(v));
        if (lam == 1) continue; // integer combination of integers, no constraint mod Z
        std::vector<Int> ci(s);
        for (int i = 0; i < s; ++i) ci[i] = num(cB[i]) * (lam / den(cB[i]));
        Int ri = num(rv) * (lam / den(rv));
        Int g = 0;
        for (const auto& v : ci) g = igcd(g, v);
        g = igcd(g, lam);
        if (g == 0) {
            if (ri % lam != 0) return std::nullopt;
            continue;
        }
        if (ri % g != 0) return std::nullopt;
        // particular solution of sum ci[i] v[i] + lam*u = ri via an xgcd chain
        std::vector<Int> coeffs(s + 1, 0);
        Int gg = 0;
        for (int idx = 0; idx <= s; ++idx) {
            Int val = idx < s ? ci[idx] : lam;
            if (val == 0) continue;
            if (gg == 0) {
                gg = val < 0 ? Int(-val) : val;
                std::fill(coeffs.begin(), coeffs.end(), Int(0));
                coeffs[idx] = val > 0 ? 1 : -1;
            } else {
                Xgcd e = xgcd(gg, val);
                for (auto& cc : coeffs) cc *= e.x;
                coeffs[idx] += e.y;
                gg = e.g;
            }
        }
        Int mult = ri / gg;
        std::vector<Int> vpart(s);
        for (int i = 0; i < s; ++i) vpart[i] = coeffs[i] * mult;
        for (int i = 0; i < s; ++i) {
            Int acc = 0;
            for (int col = 0; col < s; ++col)
                if (Bv[i][col] != 0 && vpart[col] != 0) acc += Bv[i][col] * vpart[col];
            o[i] += acc;
        }
        // kernel of ci . v ≡ 0 (mod lam): unimodular V with ci V = (g0, 0, ...),
        // then scale the lead column by lam / gcd(g0, lam)
        std::vector<std::vector<Int>> V(s, std::vector<Int>(s, 0));
        for (int i = 0; i < s; ++i) V[i][i] = 1;
        std::vector<Int> cur = ci;
        int lead = -1;
        bool changed = false;
        for (int idx = 0; idx < s; ++idx) {
            if (cur[idx] == 0) continue;
            if (lead < 0) {
                lead = idx;
            } else {
                Xgcd e = xgcd(cur[lead], cur[idx]);
                Int a2 = cur[lead] / e.g, b2 = cur[idx] / e.g;
                for (int r2 = 0; r2 < s; ++r2) {
                    Int nl = e.x * V[r2][lead] + e.y * V[r2][idx];
                    Int ni = -b2 * V[r2][lead] + a2 * V[r2][idx];
                    V[r2][lead] = nl;
                    V[r2][idx] = ni;
                }
                cur[lead] = e.g;
                cur[idx] = 0;
                changed = true;
            }
        }
        if (lead >= 0) {
            Int g0 = cur[lead] < 0 ? Int(-cur[lead]) : cur[lead];
            Int scale = lam / igcd(g0, lam);
            if (scale != 1) {
                for (int r2 = 0; r2 < s; ++r2) V[r2][lead] *= scale;
                changed = true;
            }
        }
        if (changed) {
            std::vector<std::vector<Int>> nb(s, std::vector<Int>(s, 0));
            for (int i = 0; i < s; ++i)
                for (int kk = 0; kk < s; ++kk) {
                    if (Bv[i][kk] == 0) continue;
                    for (int j = 0; j < s; ++j)
                        if (V[kk][j] != 0) nb[i][j] += Bv[i][kk] * V[kk][j];
                }
            Bv = std::move(nb);
        }
    }

    QVector x(n, Rational(0));
    for (std::size_t idx = 0; idx < zcols.size(); ++idx) x[zcols[idx]] = Rational(o[idx]);
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
        auto [prow, pcol] = pivots[pi];
        Rational val = rhs[prow];
        for (std::size_t idx = 0; idx < zcols.size(); ++idx)
            if (M[prow][zcols[idx]] != 0) val -= M[prow][zcols[idx]] * Rational(o[idx]);
        for (std::size_t idx = 0; idx < pivots.size(); ++idx)
            if (slk[prow][idx] != 0) val -= slk[prow][idx] * Rational(o[zcols.size() + idx]);
        x[pcol] = val;
    }
    for (int i = 0; i < m; ++i) {
        Rational tot = -b[i];
        for (int j = 0; j < n; ++j)
            if (A[i][j] != 0 && x[j] != 0) tot += A[i][j] * x[j];
        if (!is_integer(tot))
            throw std::logic_error("solve_mod_integers: substitution check failed");
    }
    for (int j : zcols)
        if (!is_integer(x[j]))
            throw std::logic_error("solve_mod_integers: integer domain violated");
    return x;
}

} // namespace dc
