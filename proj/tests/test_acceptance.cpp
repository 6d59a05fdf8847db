// Acceptance gate: each test case checks one numbered criterion and prints a
// single [PASS]/[FAIL] line. Run the binary directly to see the summary.

#include <catch2/catch_amalgamated.hpp>

#include "dc/congruence.hpp"
#include "dc/eisenstein.hpp"
#include "dc/series2.hpp"
#include "dc/toda.hpp"

#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace dc;

namespace {

const int P = 64;

Series e4() { return eisenstein(1, 4, P); }
Series e6() { return eisenstein(1, 6, P); }
Series e1() { return eisenstein(3, 1, P); }
Series one() { return Series::constant(1, P); }

// (E4 - 1)/240, the generating series of sigma_3
Series div_e4() { return (e4() - one()) / Rational(240); }

// (E1^2 - 1)/4 and (E1^2 - 1)/12
Series div_e1sq_4() { return (e1() * e1() - one()) / Rational(4); }
Series div_e1sq_12() { return (e1() * e1() - one()) / Rational(12); }

void report(int n, bool ok, const std::string& what) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << what << std::endl;
}

Series random_series(std::mt19937& rng, int maxnum, const std::vector<int>& dens, int prec) {
    std::uniform_int_distribution<int> nd(-maxnum, maxnum);
    std::vector<Rational> v(prec + 1);
    for (int i = 0; i <= prec; ++i) v[i] = Rational(nd(rng), dens[rng() % dens.size()]);
    return Series::from_coeffs(v, prec);
}

Series random_integral(std::mt19937& rng, int maxnum, int prec) {
    std::uniform_int_distribution<int> nd(-maxnum, maxnum);
    std::vector<Rational> v(prec + 1);
    for (int i = 0; i <= prec; ++i) v[i] = nd(rng);
    return Series::from_coeffs(v, prec);
}

} // namespace

TEST_CASE("criterion 1: Eisenstein expansions match brute-force divisor sums") {
    Series E4 = e4(), E6 = e6(), E1 = e1();
    bool ok = E4.q0() == 1 && E6.q0() == 1 && E1.q0() == 1;
    for (int n = 1; n <= 64; ++n) {
        Int s3 = 0, s5 = 0, chi = 0;
        for (int d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            s3 += Int(d) * d * d;
            s5 += Int(d) * d * d * d * d;
            chi += d % 3 == 1 ? 1 : d % 3 == 2 ? -1 : 0;
        }
        ok = ok && E4.coeff(n) == Rational(240 * s3);
        ok = ok && E6.coeff(n) == Rational(-504 * s5);
        ok = ok && E1.coeff(n) == Rational(6 * chi);
    }
    report(1, ok, "E4, E6 and E1 coefficients equal 240 sigma_3, -504 sigma_5 and "
                  "6 sum chi(d) for n <= 64");
    REQUIRE(ok);
}

TEST_CASE("criterion 2: the congruence d^3 = d^5 mod 8") {
    Series diff = div_e4() - (one() - e6()) / Rational(504);
    bool ok = true;
    for (int n = 0; n <= 64; ++n) {
        Rational c = diff.coeff(n);
        ok = ok && den(c) == 1 && num(c) % 8 == 0;
    }
    report(2, ok, "all coefficients of (E4-1)/240 - (1-E6)/504 are divisible by 8 for n <= 64");
    REQUIRE(ok);
}

TEST_CASE("criterion 3: the three reference bracket values") {
    bool zero5 = bracket1(e4() / Rational(240), 1, 5).is_zero();
    Series b8 = bracket1(Rational(2, 57600) * e4(), 1, 8);
    bool class8 = class_eq(b8, e4() * e4() / Rational(57600), 1, 8);
    Rational q6 = bracket1(e4() / Rational(1440), 1, 6).q0();
    bool const6 = q6 == Rational(-1, 3024);
    report(3, zero5 && class8 && const6,
           "[E4/240]_5 = 0, [2E4/240^2]_8 matches E4^2/240^2, q0([E4/1440]_6) = -1/3024");
    REQUIRE(zero5);
    REQUIRE(class8);
    REQUIRE(const6);
}

TEST_CASE("criterion 4: the bracket <sigma, 2sigma, eta>") {
    Catalog cat = catalog(P);
    FInvariantClass t = toda3_odd(cat.sigma, cat.two_sigma, cat.eta);
    Series a = div_e4();
    bool ok = class_eq(t.representative, Rational(1, 2) * a * a, 1, 9);
    report(4, ok, "<sigma, 2sigma, eta> equals 1/2 ((E4-1)/240)^2 at weight 9 with empty "
                  "indeterminacy");
    REQUIRE(ok);
}

TEST_CASE("criterion 5: the same class seen at level 3") {
    Catalog cat = catalog(P);
    Series a = div_e4(), c = div_e1sq_4();
    Series lhs = -(Rational(1, 2) * a * a);
    Series rhs = Rational(1, 2) * c.pow(4) + Rational(1, 2) * c.pow(3);

    bool strict = class_eq(lhs, rhs, 3, 9);
    IndeterminacySpec indet = center_p_indeterminacy(cat.f_sigma_sq, cat.eta, 3, P);
    bool modulo = class_eq(lhs, rhs, 3, 9, indet);

    std::ostringstream what;
    what << "-1/2 ((E4-1)/240)^2 matches 1/2 C^4 + 1/2 C^3 at level 3 weight 9 modulo the "
            "eta-scaled weight-8 cycles; the strict comparison without indeterminacy is "
         << (strict ? "true" : "false");
    report(5, modulo, what.str());
    REQUIRE(modulo);
    // the two sides differ by half a weight-8 cycle, so the strict form of the
    // statement fails; recorded so a change in either direction is noticed
    REQUIRE_FALSE(strict);
}

TEST_CASE("criterion 6: the bracket <sigma, 2sigma, nu>") {
    Catalog cat = catalog(P);
    FInvariantClass t = toda3_odd(cat.sigma, cat.two_sigma, cat.nu);
    Series target = Rational(1, 6 * 240 * 240) *
                    (Rational(-31, 21) * e4() + Rational(1, 2) * e4() * e4());
    bool exact = t.representative == target;
    IndeterminacySpec indet = odd_bracket_indeterminacy(cat.sigma, cat.two_sigma, cat.nu, P);
    Int ord = order_of(t.representative, 1, 10, indet);
    std::ostringstream what;
    what << "representative equals (1/(6*240^2))(-(31/21) E4 + 1/2 E4^2) exactly and has order "
         << ord.str() << " modulo the bracket indeterminacy";
    report(6, exact && ord == 4, what.str());
    REQUIRE(exact);
    REQUIRE(ord == 4);
}

TEST_CASE("criterion 7: the level 3 class of beta_2") {
    Catalog cat = catalog(P);
    Series d = div_e1sq_12();
    Series target = -(Rational(1, 2) * d * d);

    FInvariantClass ctr = toda3_center_p(cat.f_nu_sq, 2, cat.eta, PSide::left);
    bool via_center = class_eq(ctr.representative, target, 3, 5);

    // the adapted representative lives at weight 4; asking for a weight-5 one
    // instead produces a different class, recorded here
    bool literal5 = false;
    std::string note;
    try {
        Series ad5 = p_adapt(e1() * e1() / Rational(144), 2, 3, 5);
        literal5 = class_eq(ad5, target, 3, 5);
        note = literal5 ? "matches too" : "does not match (its constant term is " +
                                              num(ad5.q0()).str() + "/" + den(ad5.q0()).str() + ")";
    } catch (const NotPTorsion&) {
        note = "does not exist";
    }

    std::ostringstream what;
    what << "<f(nu^2), 2 iota, eta> equals -1/2 ((E1^2-1)/12)^2 at level 3 weight 5 through "
            "the weight-4 adapted representative; a weight-5 adaptation "
         << note;
    report(7, via_center, what.str());
    REQUIRE(via_center);
    REQUIRE_FALSE(literal5);
}

TEST_CASE("criterion 8: the four-fold bracket and the Kervaire class") {
    Catalog cat = catalog(P);
    Series a = div_e4();

    // the direct quartic display: compare 1/2 A^2 (x) A^2 against
    // (1/12)((E4 (x) 1 - 1 (x) E4)/240)^4 as virtual-weight inputs
    const int bp = 16;
    Series a2 = (a * a).truncated(bp);
    Series2 flat = Rational(1, 2) * Series2::tensor(a2, a2);
    Series e4s = eisenstein(1, 4, bp), ones = Series::constant(1, bp);
    Series2 abar = (Series2::tensor(e4s, ones) - Series2::tensor(ones, e4s)) / Rational(240);
    Series2 display = abar.pow(4) / Rational(12);
    Series2 diff = display - flat;
    bool display_ok = diff.integral_positive_bidegrees();
    Rational witness = diff.coeff(1, 3);

    FInvariantClass t = toda4(cat.f_sigma_sq, cat.f_sigma_sq, 2);
    Int ord = order_of(t.representative, 1, 16);
    IndeterminacySpec indet = four_fold_indeterminacy(cat.f_sigma_sq, cat.f_sigma_sq, 2, P);
    bool half = class_eq(t.representative, Rational(1, 2) * a.pow(4), 1, 16, indet);
    bool sixth = class_eq(t.representative, Rational(1, 6) * a.pow(4), 1, 16, indet);

    std::ostringstream what;
    what << "the four-fold bracket of f(sigma^2) has order " << ord.str()
         << " and equals 1/2 ((E4-1)/240)^4 modulo its indeterminacy; the closed quartic "
            "display "
         << (display_ok ? "is also a valid representative"
                        : "is not a valid representative (q1^1 q2^3 differs by " +
                              num(witness).str() + "/" + den(witness).str() + ")")
         << "; 1/6 ((E4-1)/240)^4 " << (sixth ? "is the same class" : "is a different class");
    report(8, ord == 2 && half, what.str());
    REQUIRE(ord == 2);
    REQUIRE(half);
    // the display misses the bracket by a denominator-3 cross term, and the
    // 1/2 and 1/6 multiples are genuinely different classes; both facts are
    // pinned so any change is surfaced
    REQUIRE_FALSE(display_ok);
    REQUIRE(den(witness) == 3);
    REQUIRE_FALSE(sixth);
}

TEST_CASE("criterion 9: property suites") {
    // echelon bases across both levels
    bool delta = true;
    int spaces = 0;
    for (int level : {1, 3})
        for (int k = 1; k <= 32; ++k) {
            const FormSpace& S = space(level, k, 72);
            for (int i = 0; i < S.dim(); ++i)
                for (int j = 0; j < S.dim(); ++j)
                    delta = delta && S.basis[j].coeff(i) == Rational(i == j ? 1 : 0);
            if (S.dim() > 0) ++spaces;
        }

    // fingerprints are constant on a class: 200 randomized trials
    std::mt19937 rng(905);
    bool stable = true;
    int trials = 0;
    const int B = 40;
    for (auto [level, n] : {std::pair{1, 8}, std::pair{1, 12}, std::pair{3, 2}, std::pair{3, 5}}) {
        const FormSpace& S = space(level, n, B);
        for (int t = 0; t < 50; ++t, ++trials) {
            Series x = random_series(rng, 30, {1, 2, 3, 4, 6, 8, 12, 24}, B);
            Series y = x + random_integral(rng, 9, B) +
                       Series::constant(Rational((int)(rng() % 11), (int)(1 + rng() % 7)), B);
            for (const Series& f : S.basis)
                y = y + Rational((int)(rng() % 13), (int)(1 + rng() % 5)) * f;
            stable = stable && fingerprint(x, level, n) == fingerprint(y, level, n);
        }
    }

    // substitution checks on every kind of bracket the library computes
    bool subst = true;
    {
        for (const auto& [f, n] : {std::pair{e4() / Rational(1440), 6},
                                   std::pair{Rational(2, 57600) * e4(), 8},
                                   std::pair{e4() / Rational(240), 5}})
            subst = subst && (f - bracket1(f, 1, n)).integral_from(1);
        Series f3 = e1() * e1() / Rational(12);
        subst = subst && (f3 - bracket1(f3, 3, 2)).integral_from(1);

        Series x = e1() * e1() / Rational(144);
        Series ad = p_adapt(x, 2, 3, 4);
        subst = subst && (Rational(2) * ad).integral_from(1) && class_eq(x, ad, 3, 4);

        Catalog cat = catalog(P);
        Series ada = p_adapt(cat.f_sigma_sq.representative, 2, 1, 8).truncated(32);
        Series2 F4 = Rational(2) * Series2::tensor(ada, ada);
        subst = subst && (F4 - bracket2(F4, 1, 16)).integral_positive_bidegrees();

        Series2 F5 = Series2::tensor(cat.f_nu_sq.representative.truncated(24),
                                     cat.eta.e_M.truncated(24));
        subst = subst && (F5 - bracket2(F5, 3, 5)).integral_positive_bidegrees();
    }

    // brute-force feasibility agreement at small weights and denominators
    bool agree = true;
    int feasible_seen = 0, infeasible_seen = 0;
    {
        std::mt19937 rng2(906);
        const int rows = 16;
        for (int n : {4, 5, 6, 8}) {
            const FormSpace& S = space(1, n, rows);
            for (int t = 0; t < 16; ++t) {
                Series f = random_series(rng2, 30, {1, 2, 3, 4, 6, 8, 12, 24}, rows);
                if (t % 2 == 0 && S.dim() > 0)
                    f = Rational((int)(rng2() % 24) + 1, 24) * S.basis[0] +
                        random_integral(rng2, 9, rows);
                if (t % 2 == 0 && S.dim() == 0) f = random_integral(rng2, 9, rows);

                bool direct = false;
                if (S.dim() == 0) {
                    direct = f.integral_from(1);
                } else {
                    Int lead = num(S.basis[0].coeff(1));
                    Int L = lead < 0 ? Int(-lead) : lead;
                    for (Int s = 0; s < L && !direct; ++s) {
                        Rational a0 = (f.coeff(1) + Rational(s)) / Rational(lead);
                        bool fits = true;
                        for (int i = 2; i <= rows && fits; ++i)
                            fits = is_integer(f.coeff(i) - a0 * S.basis[0].coeff(i));
                        direct = fits;
                    }
                }

                bool solved = true;
                try {
                    Series g = bracket1(f, 1, n);
                    subst = subst && (f - g).integral_from(1);
                } catch (const NoVirtualWeight&) {
                    solved = false;
                }
                agree = agree && solved == direct;
                (solved ? feasible_seen : infeasible_seen)++;
            }
        }
    }
    bool mix = feasible_seen > 0 && infeasible_seen > 0;

    std::ostringstream what;
    what << "echelon pivots on " << spaces << " spaces up to weight 32, " << trials
         << " fingerprint trials, substitution checks on every bracket kind, and "
         << feasible_seen << "+" << infeasible_seen
         << " feasible/infeasible direct-search comparisons all agree";
    report(9, delta && stable && subst && agree && mix, what.str());
    REQUIRE(delta);
    REQUIRE(stable);
    REQUIRE(subst);
    REQUIRE(agree);
    REQUIRE(mix);
}
