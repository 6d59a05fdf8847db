#include <catch2/catch_amalgamated.hpp>

#include "dc/spaces.hpp"

#include <random>

using namespace dc;

TEST_CASE("dimension formula") {
    REQUIRE(dim_formula(1, 0) == 1);
    REQUIRE(dim_formula(1, 2) == 0);
    REQUIRE(dim_formula(1, 4) == 1);
    REQUIRE(dim_formula(1, 6) == 1);
    REQUIRE(dim_formula(1, 8) == 1);
    REQUIRE(dim_formula(1, 10) == 1);
    REQUIRE(dim_formula(1, 12) == 2);
    REQUIRE(dim_formula(1, 14) == 1);
    REQUIRE(dim_formula(1, 16) == 2);
    REQUIRE(dim_formula(1, 26) == 2);
    REQUIRE(dim_formula(1, 5) == 0);
    REQUIRE(dim_formula(1, -4) == 0);
    REQUIRE(dim_formula(3, 0) == 1);
    REQUIRE(dim_formula(3, 1) == 1);
    REQUIRE(dim_formula(3, 2) == 1);
    REQUIRE(dim_formula(3, 3) == 2);
    REQUIRE(dim_formula(3, 8) == 3);
    REQUIRE(dim_formula(3, 9) == 4);
}

TEST_CASE("sturm bound values") {
    REQUIRE(sturm_bound(1, 12) == 6);
    REQUIRE(sturm_bound(1, 32) == 8);
    REQUIRE(sturm_bound(3, 8) == 11);
    REQUIRE(sturm_bound(3, 32) == 27);
}

TEST_CASE("echelon bases have unit pivots and integral coefficients up to weight 32") {
    const int prec = 64;
    for (int level : {1, 3}) {
        for (int k = 0; k <= 32; ++k) {
            if (level == 1 && k % 2 != 0) continue;
            const FormSpace& S = space(level, k, prec);
            REQUIRE(S.dim() == dim_formula(level, k));
            for (int j = 0; j < S.dim(); ++j) {
                REQUIRE(S.basis[j].integral_from(0));
                for (int i = 0; i < S.dim(); ++i)
                    REQUIRE(S.basis[j].coeff(i) == Rational(i == j ? 1 : 0));
            }
        }
    }
}

TEST_CASE("weight 12 echelon basis matches the classical expansion") {
    const FormSpace& S = space(1, 12, 64);
    REQUIRE(S.dim() == 2);
    // second element is the discriminant cusp form
    REQUIRE(S.basis[1].coeff(1) == 1);
    REQUIRE(S.basis[1].coeff(2) == -24);
    REQUIRE(S.basis[1].coeff(3) == 252);
    REQUIRE(S.basis[1].coeff(4) == -1472);
    REQUIRE(S.basis[0].coeff(2) == 196560);
}

TEST_CASE("divided Eisenstein denominators") {
    const int prec = 64;
    REQUIRE(gamma_of(space(1, 4, prec)) == 240);
    REQUIRE(gamma_of(space(1, 6, prec)) == 504);
    REQUIRE(gamma_of(space(1, 8, prec)) == 480);
    REQUIRE(gamma_of(space(1, 10, prec)) == 264);
    REQUIRE(gamma_of(space(1, 12, prec)) == 65520);
    REQUIRE(gamma_of(space(1, 14, prec)) == 24);
    REQUIRE(gamma_of(space(1, 16, prec)) == 16320);
    REQUIRE(gamma_of(space(3, 1, prec)) == 6);
    REQUIRE(gamma_of(space(3, 2, prec)) == 12);
    REQUIRE(gamma_of(space(3, 3, prec)) == 18);
    REQUIRE(gamma_of(space(3, 4, prec)) == 240);
    REQUIRE(gamma_of(space(3, 5, prec)) == 6);
    REQUIRE(gamma_of(space(3, 8, prec)) == 480);
}

TEST_CASE("cycle basis generators have integral positive coefficients") {
    for (int level : {1, 3}) {
        for (int k : {4, 8, 12, 16}) {
            const FormSpace& S = space(level, k, 64);
            for (const Series& c : cycle_basis(S)) REQUIRE(c.integral_from(1));
        }
    }
    // weight 0 cycles are the integer constants
    auto c0 = cycle_basis(space(1, 0, 64));
    REQUIRE(c0.size() == 1);
    REQUIRE(c0[0] == Series::constant(1, 64));
}

TEST_CASE("coordinates round-trip") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> numd(-9, 9);
    std::uniform_int_distribution<int> dend(1, 7);
    for (int level : {1, 3}) {
        for (int k : {8, 12, 16}) {
            const FormSpace& S = space(level, k, 64);
            std::vector<Rational> want(S.dim());
            Series f(64);
            for (int j = 0; j < S.dim(); ++j) {
                want[j] = Rational(numd(rng), dend(rng));
                f = f + want[j] * S.basis[j];
            }
            REQUIRE(to_coordinates(f, S) == want);
        }
    }
    // a series outside the space is rejected
    Series e6 = eisenstein(1, 6, 64);
    REQUIRE_THROWS_AS(to_coordinates(e6, space(1, 4, 64)), NotInSpace);
    REQUIRE_FALSE(try_to_coordinates(e6, space(1, 4, 64)).has_value());
}

TEST_CASE("products of basis elements land in the product weight space") {
    std::mt19937 rng(55);
    for (int level : {1, 3}) {
        std::vector<int> weights = level == 1 ? std::vector<int>{4, 6, 8, 10, 12}
                                              : std::vector<int>{1, 2, 3, 4, 5, 6};
        for (int t = 0; t < 12; ++t) {
            int w1 = weights[rng() % weights.size()];
            int w2 = weights[rng() % weights.size()];
            if (w1 + w2 > 20) continue;
            const FormSpace& S1 = space(level, w1, 64);
            const FormSpace& S2 = space(level, w2, 64);
            const FormSpace& SP = space(level, w1 + w2, 64);
            if (S1.dim() == 0 || S2.dim() == 0) continue;
            const Series& f = S1.basis[rng() % S1.dim()];
            const Series& g = S2.basis[rng() % S2.dim()];
            REQUIRE(try_to_coordinates(f * g, SP).has_value());
        }
    }
}

TEST_CASE("space cache returns stable references") {
    const FormSpace& a = space(1, 12, 64);
    const FormSpace& b = space(1, 12, 64);
    REQUIRE(&a == &b);
}

TEST_CASE("insufficient precision is rejected") {
    REQUIRE_THROWS_AS(space(1, 12, 3), PrecisionTooLow);
    REQUIRE_THROWS_AS(space(3, 32, 20), PrecisionTooLow);
}
