#pragma once

#include "dc/series.hpp"

#include <stdexcept>
#include <vector>

namespace dc {

enum class Character { Trivial, ChiMinus3 };

// chi_{-3}, the nontrivial character mod 3: 0, 1, -1 for d = 0, 1, 2 mod 3
inline int chi_minus3(long d) {
    switch (((d % 3) + 3) % 3) {
        case 1: return 1;
        case 2: return -1;
        default: return 0;
    }
}

inline int character_value(Character chi, long d) {
    return chi == Character::Trivial ? 1 : chi_minus3(d);
}

// coefficient of q^n is sum over divisors d of n of chi(d) * d^power; q^0 is 0
inline Series divisor_sum_series(int power, Character chi, int prec) {
    std::vector<Rational> c(prec + 1, Rational(0));
    for (long d = 1; d <= prec; ++d) {
        int ch = character_value(chi, d);
        if (ch == 0) continue;
        Int dp = 1;
        for (int e = 0; e < power; ++e) dp *= d;
        Int term = ch > 0 ? dp : Int(-dp);
        for (long n = d; n <= prec; n += d) c[n] += Rational(term);
    }
    return Series::from_coeffs(c, prec);
}

// The normalized Eisenstein generators used for the two ring levels:
//   level 1: E4 = 1 + 240 sum sigma_3 q^n, E6 = 1 - 504 sum sigma_5 q^n
//   level 3: E1 = 1 + 6 sum (sum_{d|n} chi_{-3}(d)) q^n,
//            G3 = 1 - 9 sum (sum_{d|n} chi_{-3}(d) d^2) q^n
inline Series eisenstein(int level, int weight, int prec) {
    if (level == 1 && weight == 4)
        return Series::constant(1, prec) + Rational(240) * divisor_sum_series(3, Character::Trivial, prec);
    if (level == 1 && weight == 6)
        return Series::constant(1, prec) - Rational(504) * divisor_sum_series(5, Character::Trivial, prec);
    if (level == 3 && weight == 1)
        return Series::constant(1, prec) + Rational(6) * divisor_sum_series(0, Character::ChiMinus3, prec);
    if (level == 3 && weight == 3)
        return Series::constant(1, prec) - Rational(9) * divisor_sum_series(2, Character::ChiMinus3, prec);
    throw std::invalid_argument("eisenstein: supported (level, weight) pairs are (1,4), (1,6), (3,1), (3,3)");
}

} // namespace dc
