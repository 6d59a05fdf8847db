#pragma once

#include "dc/series.hpp"
#include "dc/series2.hpp"
#include "dc/solver.hpp"
#include "dc/spaces.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dc {

// Extra directions a congruence class may be reduced by, on top of the always
// present integral series, rational constants and rational weight-n forms.
// Each generator either spans a rational line (Dom::Q) or contributes an
// integer lattice direction (Dom::Z).
struct IndeterminacySpec {
    struct Gen {
        Series series;
        Dom dom = Dom::Z;
        std::string label;
    };

    std::vector<Gen> gens;

    bool empty() const { return gens.empty(); }

    void add(Series g, Dom dom, std::string label = {}) {
        gens.push_back(Gen{std::move(g), dom, std::move(label)});
    }
};

namespace detail {

// number of coefficient rows shared by the input, the generators and a form
// space at that precision; enough rows to make the mod-Z solve conclusive
inline int working_prec(const Series& x, int level, int n, const IndeterminacySpec& indet) {
    int r = x.prec();
    for (const auto& g : indet.gens) r = std::min(r, g.series.prec());
    int need = sturm_bound(level, n) + dim_formula(level, n) + static_cast<int>(indet.gens.size());
    if (r < need)
        throw PrecisionTooLow("class arithmetic at weight " + std::to_string(n) + " needs " +
                              std::to_string(need) + " coefficients, have " + std::to_string(r));
    return r;
}

inline QVector tail_vector(const Series& s, int lo, int hi) {
    QVector v(hi - lo + 1);
    for (int i = lo; i <= hi; ++i) v[i - lo] = s.coeff(i);
    return v;
}

// subtract basis multiples so coefficients 0..dim-1 vanish; the unit pivots
// make the result independent of the subtraction order
inline Series head_normalized(const Series& s, const FormSpace& S, int prec) {
    Series h = s.truncated(prec);
    for (int i = 0; i < S.dim(); ++i) {
        Rational c = h.coeff(i);
        if (c != 0) h = h - c * S.basis[i].truncated(prec);
    }
    return h;
}

struct Rref {
    std::vector<QVector> rows; // leading entries 1, pivot columns cleared elsewhere
    std::vector<int> pivots;
};

inline Rref rref(std::vector<QVector> rows) {
    Rref out;
    if (rows.empty()) return out;
    const int ncols = static_cast<int>(rows[0].size());
    int r = 0;
    for (int c = 0; c < ncols && r < static_cast<int>(rows.size()); ++c) {
        int sel = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][c] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        Rational lead = rows[r][c];
        for (int j = 0; j < ncols; ++j) rows[r][j] /= lead;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (int j = 0; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

// canonical representative modulo the row span: clear the pivot coordinates
inline void project(QVector& v, const Rref& q) {
    for (std::size_t r = 0; r < q.rows.size(); ++r) {
        Rational t = v[q.pivots[r]];
        if (t == 0) continue;
        for (std::size_t c = 0; c < v.size(); ++c) v[c] -= t * q.rows[r][c];
    }
}

} // namespace detail

// True when x lies in the subgroup generated by integral series, rational
// constants, rational weight-n forms and the supplied extra generators; this
// is the zero test for the divided-congruence class of x.
inline bool zero_test(const Series& x, int level, int n,
                      const IndeterminacySpec& indet = {}) {
    const int r = detail::working_prec(x, level, n, indet);
    const FormSpace& S = space(level, n, r);

    std::vector<Series> cols;
    std::vector<Dom> doms;
    for (const Series& f : S.basis) {
        cols.push_back(f);
        doms.push_back(Dom::Q);
    }
    cols.push_back(Series::constant(1, r));
    doms.push_back(Dom::Q);
    for (const auto& g : indet.gens) {
        cols.push_back(g.series);
        doms.push_back(g.dom);
    }

    QMatrix A(r + 1, QVector(cols.size()));
    QVector b(r + 1);
    for (int i = 0; i <= r; ++i) {
        b[i] = x.coeff(i);
        for (std::size_t c = 0; c < cols.size(); ++c) A[i][c] = cols[c].coeff(i);
    }
    return solve_mod_integers(A, b, doms).has_value();
}

inline bool class_eq(const Series& x, const Series& y, int level, int n,
                     const IndeterminacySpec& indet = {}) {
    return zero_test(x - y, level, n, indet);
}

// Canonical coordinates of a class: after clearing the leading coefficients
// against the echelon basis, the tail is reduced modulo the rational
// directions (constants plus rational generators) and then into the
// fundamental domain of the integer lattice (integral series, the remaining
// basis elements, integral generators). Entries lie in [0, 1); two series
// represent the same class exactly when their fingerprints agree.
struct Fingerprint {
    int level = 1;
    int weight = 0;
    int start = 0; // tail entry t corresponds to the q^(start+t) coefficient
    std::vector<Rational> tail;

    bool is_zero() const {
        for (const auto& e : tail)
            if (e != 0) return false;
        return true;
    }

    Int lcm_den() const {
        Int l = 1;
        for (const auto& e : tail) l = ilcm(l, den(e));
        return l;
    }

    friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
        return a.level == b.level && a.weight == b.weight && a.start == b.start &&
               a.tail == b.tail;
    }
    friend bool operator!=(const Fingerprint& a, const Fingerprint& b) { return !(a == b); }
};

inline Fingerprint fingerprint(const Series& x, int level, int n,
                               const IndeterminacySpec& indet = {}) {
    const int B = detail::working_prec(x, level, n, indet);
    const FormSpace& S = space(level, n, B);
    const int d = S.dim();
    const int len = B - d + 1;

    QVector T = detail::tail_vector(detail::head_normalized(x, S, B), d, B);

    // rational directions: what adding a constant does to a normalized tail,
    // plus the rational generators
    std::vector<QVector> qdirs;
    if (d == 0) {
        QVector e0(len);
        e0[0] = 1;
        qdirs.push_back(std::move(e0));
    } else {
        qdirs.push_back(detail::tail_vector(S.basis[0], d, B));
    }
    for (const auto& g : indet.gens)
        if (g.dom == Dom::Q)
            qdirs.push_back(detail::tail_vector(detail::head_normalized(g.series, S, B), d, B));
    detail::Rref Q = detail::rref(std::move(qdirs));
    detail::project(T, Q);

    // integer lattice: basis tails past the first, integral generators, and
    // every unit vector (integral series), all pushed into the complement of
    // the rational span
    std::vector<QVector> zgens;
    for (int i = 1; i < d; ++i) zgens.push_back(detail::tail_vector(S.basis[i], d, B));
    for (const auto& g : indet.gens)
        if (g.dom == Dom::Z)
            zgens.push_back(detail::tail_vector(detail::head_normalized(g.series, S, B), d, B));
    for (int j = 0; j < len; ++j) {
        QVector e(len);
        e[j] = 1;
        zgens.push_back(std::move(e));
    }
    for (auto& v : zgens) detail::project(v, Q);

    Int mu = 1;
    for (const auto& v : zgens)
        for (const auto& e : v) mu = ilcm(mu, den(e));

    std::vector<std::vector<Int>> M;
    M.reserve(zgens.size());
    for (const auto& v : zgens) {
        std::vector<Int> row(len);
        for (int j = 0; j < len; ++j) row[j] = num(v[j] * Rational(mu));
        M.push_back(std::move(row));
    }
    HnfResult h = row_hnf(std::move(M));

    QVector t(len);
    for (int j = 0; j < len; ++j) t[j] = T[j] * Rational(mu);
    for (int r = 0; r < h.rank; ++r) {
        int p = 0;
        while (h.H[r][p] == 0) ++p;
        Int q = rfloor(t[p] / Rational(h.H[r][p]));
        if (q == 0) continue;
        for (int j = p; j < len; ++j) t[j] -= Rational(q * h.H[r][j]);
    }

    Fingerprint fp;
    fp.level = level;
    fp.weight = n;
    fp.start = d;
    fp.tail.resize(len);
    for (int j = 0; j < len; ++j) fp.tail[j] = t[j] / Rational(mu);
    return fp;
}

// Smallest m >= 1 with m*x zero in the quotient. The fingerprint entries are
// canonical residues, so the order divides the lcm of their denominators and
// a divisor search terminates.
inline Int order_of(const Series& x, int level, int n,
                    const IndeterminacySpec& indet = {}) {
    Fingerprint fp = fingerprint(x, level, n, indet);
    if (fp.is_zero()) return 1;
    Int bound = fp.lcm_den();
    std::vector<Int> divisors;
    for (Int d = 1; d * d <= bound; ++d) {
        if (bound % d != 0) continue;
        divisors.push_back(d);
        if (d * d != bound) divisors.push_back(bound / d);
    }
    std::sort(divisors.begin(), divisors.end());
    for (const Int& m : divisors) {
        if (m == 1) continue; // fingerprint already nonzero
        if (zero_test(Rational(m) * x, level, n, indet)) return m;
    }
    throw std::logic_error("order search exhausted the fingerprint denominator bound");
}

// Virtual weight-n representative: a form g in (M_n)_Q whose positive-degree
// coefficients agree with those of f modulo Z. The output is canonical, with
// coordinates reduced into the fundamental domain of the cycle lattice
// (balanced residues, first coordinate modulo 1/gamma).
inline Series bracket1(const Series& f, int level, int n) {
    const int r = f.prec();
    const FormSpace& S = space(level, n, r); // checks r >= sturm_bound + dim
    const int d = S.dim();

    if (d == 0) {
        if (!f.integral_from(1))
            throw NoVirtualWeight("no weight-" + std::to_string(n) + " forms at level " +
                                  std::to_string(level) + " and the input is not integral");
        return Series(r);
    }

    QMatrix A(r, QVector(d));
    QVector b(r);
    for (int i = 1; i <= r; ++i) {
        b[i - 1] = f.coeff(i);
        for (int j = 0; j < d; ++j) A[i - 1][j] = S.basis[j].coeff(i);
    }
    auto sol = solve_mod_integers(A, b, std::vector<Dom>(d, Dom::Q));
    if (!sol)
        throw NoVirtualWeight("input has no virtual weight " + std::to_string(n) +
                              " at level " + std::to_string(level));

    // solutions differ exactly by the cycle lattice (1/gamma)Z x Z^(d-1)
    QVector a = *sol;
    Int gamma = gamma_of(S);
    a[0] = gamma == 0 ? Rational(0) : balanced_reduce(a[0], Rational(1, gamma));
    for (int j = 1; j < d; ++j) a[j] = balanced_reduce(a[j], 1);

    Series g(r);
    for (int j = 0; j < d; ++j)
        if (a[j] != 0) g = g + a[j] * S.basis[j];
    if (!(f - g).integral_from(1))
        throw std::logic_error("bracket1 substitution check failed");
    return g;
}

// p-adapted representative of the class of x: subtracts a member of
// (M_n)_Q + Q so that p times the result is integral in positive degrees.
// Exists exactly when the class of x is p-torsion.
inline Series p_adapt(const Series& x, const Int& p, int level, int n) {
    if (p <= 0) throw std::invalid_argument("p_adapt needs a positive multiplier");
    const int r = x.prec();
    const FormSpace& S = space(level, n, r);
    const int d = S.dim();

    Series out(r);
    if (d == 0) {
        if (!(Rational(p) * x).integral_from(1))
            throw NotPTorsion("class is not " + p.str() + "-torsion at weight " +
                              std::to_string(n));
        out = x;
    } else {
        QMatrix A(r, QVector(d));
        QVector b(r);
        for (int i = 1; i <= r; ++i) {
            b[i - 1] = Rational(p) * x.coeff(i);
            for (int j = 0; j < d; ++j) A[i - 1][j] = Rational(p) * S.basis[j].coeff(i);
        }
        auto sol = solve_mod_integers(A, b, std::vector<Dom>(d, Dom::Q));
        if (!sol)
            throw NotPTorsion("class is not " + p.str() + "-torsion at weight " +
                              std::to_string(n));

        // solutions differ by the cycle lattice divided by p
        QVector a = *sol;
        Int gamma = gamma_of(S);
        a[0] = gamma == 0 ? Rational(0) : balanced_reduce(a[0], Rational(1, p * gamma));
        for (int j = 1; j < d; ++j) a[j] = balanced_reduce(a[j], Rational(1, p));

        out = x;
        for (int j = 0; j < d; ++j)
            if (a[j] != 0) out = out - a[j] * S.basis[j];
    }

    Rational c0 = balanced_reduce(out.q0(), Rational(1, p));
    if (c0 != out.q0()) out = out - Series::constant(out.q0() - c0, r);
    if (!(Rational(p) * out).integral_from(1))
        throw std::logic_error("p_adapt substitution check failed");
    return out;
}

// Bivariate virtual weight-n representative: a sum of basis tensor products
// over all weight splits w + (n-w) whose strictly positive bidegree
// coefficients agree with those of F modulo Z.
inline Series2 bracket2(const Series2& F, int level, int n) {
    const int r = F.prec();

    struct Col {
        int w, u, v;
    };
    std::vector<Col> cols;
    for (int w = 0; w <= n; ++w) {
        if (dim_formula(level, w) == 0 || dim_formula(level, n - w) == 0) continue;
        const FormSpace& L = space(level, w, r);
        const FormSpace& R = space(level, n - w, r);
        for (int u = 0; u < L.dim(); ++u)
            for (int v = 0; v < R.dim(); ++v) cols.push_back({w, u, v});
    }

    if (cols.empty()) {
        if (!F.integral_positive_bidegrees())
            throw NoVirtualWeight("no weight splits available at weight " + std::to_string(n));
        return Series2(r);
    }

    QMatrix A(r * r, QVector(cols.size()));
    QVector b(r * r);
    int row = 0;
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= r; ++j, ++row) {
            b[row] = F.coeff(i, j);
            for (std::size_t c = 0; c < cols.size(); ++c) {
                const Col& col = cols[c];
                A[row][c] = space(level, col.w, r).basis[col.u].coeff(i) *
                            space(level, n - col.w, r).basis[col.v].coeff(j);
            }
        }
    }
    auto sol = solve_mod_integers(A, b, std::vector<Dom>(cols.size(), Dom::Q));
    if (!sol)
        throw NoVirtualWeight("input has no bivariate virtual weight " + std::to_string(n));

    Series2 G(r);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if ((*sol)[c] == 0) continue;
        const Col& col = cols[c];
        G = G + (*sol)[c] * Series2::tensor(space(level, col.w, r).basis[col.u],
                                            space(level, n - col.w, r).basis[col.v]);
    }
    if (!(F - G).integral_positive_bidegrees())
        throw std::logic_error("bracket2 substitution check failed");
    return G;
}

} // namespace dc
