#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline Int igcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int ilcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int l = boost::multiprecision::lcm(a, b);
    return l < 0 ? Int(-l) : l;
}

// floor(r), exact
inline Int rfloor(const Rational& r) {
    Int n = num(r), d = den(r);
    Int q = n / d; // truncates toward zero
    if (n < 0 && q * d != n) --q;
    return q;
}

// canonical representative of r + Z in [0, 1)
inline Rational qmodz_reduce(const Rational& r) { return r - Rational(rfloor(r)); }

// canonical representative of r + step*Z in (-step/2, step/2], step > 0
inline Rational balanced_reduce(const Rational& r, const Rational& step) {
    Rational res = r - Rational(rfloor(r / step)) * step;
    if (res > step / 2) res -= step;
    return res;
}

struct Xgcd {
    Int g, x, y; // g = a*x + b*y, g >= 0
};

inline Xgcd xgcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r; // both tracked exactly; sign handled at the end
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

} // namespace dc
