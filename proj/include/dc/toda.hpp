#pragma once

#include "dc/congruence.hpp"
#include "dc/eisenstein.hpp"
#include "dc/series.hpp"
#include "dc/series2.hpp"
#include "dc/spaces.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace dc {

// Stable homotopy element of odd stem 2l-1 carried by its e-invariant.
// e_M is a divided congruence of weight l representing the class and
// e = q^0(e_M) is the classical e-invariant.
struct EInvariant {
    std::string name;
    int stem;
    Rational e;
    Series e_M;
    int weight;
    int level;

    EInvariant(std::string name_, int stem_, Rational e_, Series e_M_, int level_)
        : name(std::move(name_)),
          stem(stem_),
          e(std::move(e_)),
          e_M(std::move(e_M_)),
          weight((stem_ + 1) / 2),
          level(level_) {
        if (stem <= 0 || stem % 2 == 0)
            throw std::invalid_argument("EInvariant: stem must be odd and positive");
        if (level != 1 && level != 3)
            throw std::invalid_argument("EInvariant: level must be 1 or 3");
        if (e_M.q0() != e)
            throw std::invalid_argument("EInvariant: e must equal q^0(e_M)");
    }

    // the multiple m*alpha; scales both the constant and the representative
    EInvariant scaled_by(const Int& m) const {
        return EInvariant(m.str() + name, stem, Rational(m) * e, Rational(m) * e_M, level);
    }
};

// Stable homotopy element of even stem 2n-2 recorded by a representative of
// its f-invariant, to be reduced at weight n = (stem + 2)/2.
struct FInvariantClass {
    std::string name;
    int stem;
    Series representative;
    int weight;
    int level;

    FInvariantClass(std::string name_, int stem_, Series rep, int weight_, int level_)
        : name(std::move(name_)),
          stem(stem_),
          representative(std::move(rep)),
          weight(weight_),
          level(level_) {
        if (stem < 0 || stem % 2 != 0)
            throw std::invalid_argument("FInvariantClass: stem must be even and nonnegative");
        if (2 * weight != stem + 2)
            throw std::invalid_argument("FInvariantClass: weight must equal (stem + 2)/2");
        if (level != 1 && level != 3)
            throw std::invalid_argument("FInvariantClass: level must be 1 or 3");
    }
};

namespace detail {

inline int level_join(int a, int b) { return (a == 3 || b == 3) ? 3 : 1; }

inline Series clip(const Series& s, int prec) {
    return s.prec() > prec ? s.truncated(prec) : s;
}

}  // namespace detail

// Named generators of the small stems used by the worked computations.
struct Catalog {
    EInvariant eta;
    EInvariant nu;
    EInvariant sigma;
    EInvariant two_sigma;
    FInvariantClass f_nu_sq;
    FInvariantClass f_sigma_sq;
};

inline Catalog catalog(int prec = 64) {
    Series e1 = eisenstein(3, 1, prec);
    Series e4 = eisenstein(1, 4, prec);
    EInvariant eta("eta", 1, Rational(1, 2), e1 / Rational(2), 3);
    EInvariant nu("nu", 3, Rational(1, 12), (e1 * e1) / Rational(12), 3);
    EInvariant sigma("sigma", 7, Rational(1, 240), e4 / Rational(240), 1);
    EInvariant two_sigma = sigma.scaled_by(2);
    FInvariantClass f_nu_sq("f(nu^2)", 6, (e1 * e1) / Rational(144), 4, 3);
    FInvariantClass f_sigma_sq("f(sigma^2)", 14, e4 / Rational(240 * 240), 8, 1);
    return Catalog{std::move(eta), std::move(nu), std::move(sigma),
                   std::move(two_sigma), std::move(f_nu_sq), std::move(f_sigma_sq)};
}

// f-invariant of a composite of two odd-stem elements: e(a) e_M(b) at the sum
// of the weights.
inline FInvariantClass f_product(const EInvariant& a, const EInvariant& b) {
    return FInvariantClass("f(" + a.name + " " + b.name + ")", a.stem + b.stem,
                           a.e * b.e_M, a.weight + b.weight,
                           detail::level_join(a.level, b.level));
}

// Which slot of the bracket <x, p i, y> carries the even-stem input.
enum class PSide { left, right };

// Three-fold bracket with the multiple of the identity in the middle.
// side == left is <fa, p i, eb> with value p e(eb) f(fa); side == right is
// <eb, p i, fa> with value -p e(eb) f(fa). The representative is p-adapted
// at its own weight and the class is read off at weight fa.weight + eb.weight.
inline FInvariantClass toda3_center_p(const FInvariantClass& fa, const Int& p,
                                      const EInvariant& eb, PSide side) {
    Series ad = p_adapt(fa.representative, p, fa.level, fa.weight);
    Rational c = Rational(p) * eb.e;
    Series rep = (side == PSide::left ? c : -c) * ad;
    std::string bracket = side == PSide::left
        ? "<" + fa.name + ", " + p.str() + "i, " + eb.name + ">"
        : "<" + eb.name + ", " + p.str() + "i, " + fa.name + ">";
    return FInvariantClass(std::move(bracket), fa.stem + eb.stem + 1, std::move(rep),
                           fa.weight + eb.weight, fa.level);
}

// Three-fold bracket <a, b, c> of odd-stem elements. The two partial brackets
// are univariate virtual-weight solves; their failure means the obstruction
// class of the bracket is nonzero and surfaces as NoVirtualWeight.
inline FInvariantClass toda3_odd(const EInvariant& a, const EInvariant& b,
                                 const EInvariant& c) {
    int k = a.weight, l = b.weight, m = c.weight;
    Series f_ab = bracket1(b.e * a.e_M, a.level, k + l);
    Series f_bc = bracket1(c.e * b.e_M, b.level, l + m);
    Series rep = (f_bc.q0() - b.e * c.e) * a.e_M + c.e * f_ab;
    return FInvariantClass("<" + a.name + ", " + b.name + ", " + c.name + ">",
                           a.stem + b.stem + c.stem + 1, std::move(rep),
                           k + l + m, a.level);
}

// Argument order of the three-fold bracket with the multiple of the identity
// at one end: f marks the even-stem input, e the odd-stem one, p the identity
// multiple. The letters spell the bracket left to right.
enum class PShape { fep, pef, efp, pfe };

// Three-fold bracket with the identity multiple at an end, assembled from the
// bivariate virtual-weight solve. The middle-slot representative is p-adapted
// first (shapes efp and pfe); end-slot even inputs enter as given.
inline FInvariantClass toda3_with_p(PShape shape, const FInvariantClass& f,
                                    const EInvariant& e, const Int& p,
                                    int bracket_prec = 24) {
    int level = detail::level_join(f.level, e.level);
    int w = f.weight + e.weight;
    int stem = f.stem + e.stem + 1;
    Rational pr(p);
    std::string pi = p.str() + "i";
    switch (shape) {
        case PShape::fep: {
            Series fr = detail::clip(f.representative, bracket_prec);
            Series2 R = bracket2(Series2::tensor(fr, detail::clip(e.e_M, bracket_prec)),
                                 level, w);
            Series rep = pr * e.e * fr + pr * chi0_left(R);
            return FInvariantClass("<" + f.name + ", " + e.name + ", " + pi + ">",
                                   stem, std::move(rep), w, level);
        }
        case PShape::pef: {
            Series2 R = bracket2(Series2::tensor(detail::clip(e.e_M, bracket_prec),
                                                 detail::clip(f.representative, bracket_prec)),
                                 level, w);
            Series rep = -(pr * chi0_left(R));
            return FInvariantClass("<" + pi + ", " + e.name + ", " + f.name + ">",
                                   stem, std::move(rep), w, level);
        }
        case PShape::efp: {
            Series ad = detail::clip(p_adapt(f.representative, p, f.level, f.weight),
                                     bracket_prec);
            Series em = detail::clip(e.e_M, bracket_prec);
            Series2 R = bracket2(Series2::tensor(em, ad), level, w);
            Series rep = -(pr * (em * ad)) - pr * chi0_left(R);
            return FInvariantClass("<" + e.name + ", " + f.name + ", " + pi + ">",
                                   stem, std::move(rep), w, level);
        }
        case PShape::pfe: {
            Series ad = detail::clip(p_adapt(f.representative, p, f.level, f.weight),
                                     bracket_prec);
            Series2 R = bracket2(Series2::tensor(ad, detail::clip(e.e_M, bracket_prec)),
                                 level, w);
            Series rep = pr * chi0_left(R);
            return FInvariantClass("<" + pi + ", " + f.name + ", " + e.name + ">",
                                   stem, std::move(rep), w, level);
        }
    }
    throw std::logic_error("toda3_with_p: unreachable");
}

// Four-fold bracket <p i, fa, p i, fb>. Both representatives are p-adapted,
// the scaled tensor is matched by a bivariate virtual-weight form and the
// value is p times its left constant slice.
inline FInvariantClass toda4(const FInvariantClass& fa, const FInvariantClass& fb,
                             const Int& p, int bracket_prec = 32) {
    int level = detail::level_join(fa.level, fb.level);
    int w = fa.weight + fb.weight;
    Series ada = detail::clip(p_adapt(fa.representative, p, fa.level, fa.weight),
                              bracket_prec);
    Series adb = detail::clip(p_adapt(fb.representative, p, fb.level, fb.weight),
                              bracket_prec);
    Series2 R = bracket2(Rational(p) * Series2::tensor(ada, adb), level, w);
    Series rep = Rational(p) * chi0_left(R);
    std::string pi = p.str() + "i";
    return FInvariantClass("<" + pi + ", " + fa.name + ", " + pi + ", " + fb.name + ">",
                           fa.stem + fb.stem + 2, std::move(rep), w, level);
}

// Indeterminacy of the center bracket: e(eb) times the cycles at the weight
// of the even-stem input, read at the requested level.
inline IndeterminacySpec center_p_indeterminacy(const FInvariantClass& fa,
                                                const EInvariant& eb, int level,
                                                int prec = 64) {
    IndeterminacySpec ind;
    if (eb.e == 0) return ind;
    for (const Series& cyc : cycle_basis(space(level, fa.weight, prec)))
        ind.add(eb.e * cyc, Dom::Z, "e(" + eb.name + ")*cycle");
    return ind;
}

// Indeterminacy of the odd bracket: e_M(a) times the constants of cycles at
// weight l+m plus e(c) times the cycles at weight k+l.
inline IndeterminacySpec odd_bracket_indeterminacy(const EInvariant& a,
                                                   const EInvariant& b,
                                                   const EInvariant& c,
                                                   int prec = 64) {
    IndeterminacySpec ind;
    Int g = gamma_of(space(b.level, b.weight + c.weight, prec));
    if (g != 0 && !a.e_M.is_zero())
        ind.add(a.e_M / Rational(g), Dom::Z, "eM(" + a.name + ")/gamma");
    if (c.e != 0)
        for (const Series& cyc : cycle_basis(space(a.level, a.weight + b.weight, prec)))
            ind.add(c.e * cyc, Dom::Z, "e(" + c.name + ")*cycle");
    return ind;
}

// Generator list approximating p times the p-primary part of the quotient at
// the given weight: the p-divided cycles.
inline IndeterminacySpec p_divided_indeterminacy(const Int& p, int level, int weight,
                                                 int prec = 64) {
    IndeterminacySpec ind;
    for (const Series& cyc : cycle_basis(space(level, weight, prec)))
        ind.add(cyc / Rational(p), Dom::Z, "cycle/p");
    return ind;
}

// Indeterminacy of the four-fold bracket: p-divided cycles at the target
// weight, the p-scaled adapted inputs divided by the constants of the cycles
// at the opposite weight, and the product of the leading divided cycles.
inline IndeterminacySpec four_fold_indeterminacy(const FInvariantClass& fa,
                                                 const FInvariantClass& fb,
                                                 const Int& p, int prec = 64) {
    int level = detail::level_join(fa.level, fb.level);
    int k = fa.weight, l = fb.weight;
    IndeterminacySpec ind = p_divided_indeterminacy(p, level, k + l, prec);
    Int gk = gamma_of(space(level, k, prec));
    Int gl = gamma_of(space(level, l, prec));
    Series ada = p_adapt(fa.representative, p, fa.level, k);
    Series adb = p_adapt(fb.representative, p, fb.level, l);
    if (gk != 0)
        ind.add(Rational(p, gk) * adb, Dom::Z, "p/gamma_k*f(b)");
    if (gl != 0)
        ind.add(Rational(p, gl) * ada, Dom::Z, "p/gamma_l*f(a)");
    if (gk != 0 && gl != 0) {
        const Series& f0k = space(level, k, prec).basis[0];
        Rational c0l = space(level, l, prec).basis[0].q0() / Rational(gl);
        ind.add(Rational(p, gk) * c0l * f0k, Dom::Z, "p*lead_k*q0(lead_l)");
    }
    return ind;
}

}  // namespace dc
