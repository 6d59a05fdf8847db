#pragma once

#include "dc/eisenstein.hpp"
#include "dc/errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace dc {

// dim M_k for level 1 (SL_2(Z)) and level 3 (Gamma_1(3))
inline int dim_formula(int level, int k) {
    if (k < 0) return 0;
    if (level == 1) {
        if (k % 2 != 0) return 0;
        if (k % 12 == 2) return k / 12;
        return k / 12 + 1;
    }
    if (level == 3) return k / 3 + 1;
    throw std::invalid_argument("dim_formula: level must be 1 or 3");
}

// number of leading q-expansion coefficients that pin down a weight-k form,
// with a safety guard on top of the index-based bound
inline int sturm_bound(int level, int k) {
    if (level != 1 && level != 3) throw std::invalid_argument("sturm_bound: level must be 1 or 3");
    int mu = level == 1 ? 1 : 8;
    return (k * mu + 11) / 12 + 5;
}

// Unit-pivot echelon basis of M_k: q^i(f_j) = delta_ij for i, j < dim, all
// coefficients integral.
struct FormSpace {
    int level = 0;
    int weight = 0;
    int prec = 0;
    std::vector<Series> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

namespace detail {

inline FormSpace build_space(int level, int k, int prec) {
    const int d = dim_formula(level, k);
    if (prec < sturm_bound(level, k) + d)
        throw PrecisionTooLow("space: need precision at least " +
                              std::to_string(sturm_bound(level, k) + d) +
                              " for level " + std::to_string(level) +
                              " weight " + std::to_string(k));
    FormSpace S;
    S.level = level;
    S.weight = k;
    S.prec = prec;
    if (d == 0) return S;

    // monomial generators in the two Eisenstein generators of the ring
    std::vector<Series> mons;
    if (level == 1) {
        Series e4 = eisenstein(1, 4, prec), e6 = eisenstein(1, 6, prec);
        for (int a = 0; 4 * a <= k; ++a) {
            if ((k - 4 * a) % 6 != 0) continue;
            int b = (k - 4 * a) / 6;
            mons.push_back(e4.pow(a) * e6.pow(b));
        }
    } else {
        Series e1 = eisenstein(3, 1, prec), g3 = eisenstein(3, 3, prec);
        for (int a = 0; a <= k; ++a) {
            if ((k - a) % 3 != 0) continue;
            int b = (k - a) / 3;
            mons.push_back(e1.pow(a) * g3.pow(b));
        }
    }

    // rational echelon reduction with unit-normalized pivots
    std::vector<std::vector<Rational>> rows;
    rows.reserve(mons.size());
    for (const auto& f : mons) rows.push_back(f.coeffs());
    int r = 0;
    std::vector<int> pivot_cols;
    for (int c = 0; c <= prec && r < static_cast<int>(rows.size()); ++c) {
        int sel = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][c] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        Rational inv = rows[r][c];
        for (auto& v : rows[r]) v /= inv;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (int j = c; j <= prec; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    if (r != d)
        throw BasisError("space: echelon rank " + std::to_string(r) +
                         " does not match dimension " + std::to_string(d));
    for (int j = 0; j < d; ++j)
        if (pivot_cols[j] != j)
            throw BasisError("space: pivots are not the leading coefficients");
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i <= prec; ++i)
            if (!is_integer(rows[j][i]))
                throw BasisError("space: echelon basis is not integral at level " +
                                 std::to_string(level) + " weight " + std::to_string(k));
        S.basis.push_back(Series::from_coeffs(rows[j], prec));
    }
    return S;
}

} // namespace detail

// cached accessor; spaces are immutable once built
inline const FormSpace& space(int level, int k, int prec) {
    static std::map<std::tuple<int, int, int>, std::unique_ptr<FormSpace>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_tuple(level, k, prec);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto built = std::make_unique<FormSpace>(detail::build_space(level, k, prec));
        it = cache.emplace(key, std::move(built)).first;
    }
    return *it->second;
}

// coordinates in the echelon basis; the unit pivots make this a successive
// subtraction of leading coefficients
inline std::optional<std::vector<Rational>> try_to_coordinates(const Series& f,
                                                               const FormSpace& S) {
    int p = std::min(f.prec(), S.prec);
    Series residual = f.truncated(p);
    std::vector<Rational> coords(S.dim());
    for (int i = 0; i < S.dim(); ++i) {
        coords[i] = residual.coeff(i);
        if (coords[i] != 0) residual = residual - coords[i] * S.basis[i].truncated(p);
    }
    if (!residual.is_zero()) return std::nullopt;
    return coords;
}

inline std::vector<Rational> to_coordinates(const Series& f, const FormSpace& S) {
    auto c = try_to_coordinates(f, S);
    if (!c)
        throw NotInSpace("to_coordinates: series is not in M_" + std::to_string(S.weight) +
                         " at level " + std::to_string(S.level));
    return *c;
}

// gcd of the higher coefficients of the first basis element; the divided
// class f_0 / gamma generates the Eisenstein part of the cycle lattice
inline Int gamma_of(const FormSpace& S) {
    if (S.dim() == 0) return 0;
    Int g = 0;
    for (int i = std::max(1, S.dim()); i <= S.prec; ++i)
        g = igcd(g, num(S.basis[0].coeff(i)));
    return g;
}

// generators of the lattice of weight-k cycles: series in (M_k)_Q whose
// positive-degree coefficients are integral
inline std::vector<Series> cycle_basis(const FormSpace& S) {
    std::vector<Series> out;
    if (S.dim() == 0) return out;
    Int g = gamma_of(S);
    if (g > 1)
        out.push_back(S.basis[0] / Rational(g));
    else
        out.push_back(S.basis[0]);
    for (int j = 1; j < S.dim(); ++j) out.push_back(S.basis[j]);
    return out;
}

} // namespace dc
