#pragma once

#include "dc/errors.hpp"
#include "dc/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace dc {

// Truncated q-expansion with exact rational coefficients. Stored over one
// common denominator so ring operations run in integer arithmetic; the
// denominator is kept reduced (gcd with all numerators is 1) which makes
// equality a plain member comparison.
class Series {
public:
    explicit Series(int prec) : prec_(prec), den_(1), num_(prec + 1, Int(0)) {
        if (prec < 0) throw std::invalid_argument("Series precision must be nonnegative");
    }

    static Series constant(const Rational& c, int prec) {
        Series s(prec);
        s.den_ = den(c);
        s.num_[0] = num(c);
        return s;
    }

    static Series from_coeffs(const std::vector<Rational>& v, int prec) {
        Series s(prec);
        Int l = 1;
        for (int i = 0; i <= prec && i < static_cast<int>(v.size()); ++i)
            l = ilcm(l, den(v[i]));
        s.den_ = l;
        for (int i = 0; i <= prec && i < static_cast<int>(v.size()); ++i)
            s.num_[i] = num(v[i]) * (l / den(v[i]));
        s.normalize();
        return s;
    }

    int prec() const { return prec_; }

    Rational coeff(int i) const {
        if (i < 0 || i > prec_)
            throw PrecisionTooLow("coefficient index " + std::to_string(i) +
                                  " beyond precision " + std::to_string(prec_));
        return Rational(num_[i], den_);
    }

    Rational q0() const { return coeff(0); }

    std::vector<Rational> coeffs() const {
        std::vector<Rational> v(prec_ + 1);
        for (int i = 0; i <= prec_; ++i) v[i] = Rational(num_[i], den_);
        return v;
    }

    bool is_zero() const {
        return std::all_of(num_.begin(), num_.end(), [](const Int& x) { return x == 0; });
    }

    // all coefficients with index >= lo are integers
    bool integral_from(int lo) const {
        for (int i = std::max(lo, 0); i <= prec_; ++i)
            if (num_[i] % den_ != 0) return false;
        return true;
    }

    Series truncated(int new_prec) const {
        if (new_prec > prec_)
            throw PrecisionTooLow("cannot extend a series by truncation");
        Series s(new_prec);
        s.den_ = den_;
        for (int i = 0; i <= new_prec; ++i) s.num_[i] = num_[i];
        s.normalize();
        return s;
    }

    friend Series operator+(const Series& a, const Series& b) {
        int p = std::min(a.prec_, b.prec_);
        Series s(p);
        s.den_ = ilcm(a.den_, b.den_);
        Int fa = s.den_ / a.den_, fb = s.den_ / b.den_;
        for (int i = 0; i <= p; ++i) s.num_[i] = a.num_[i] * fa + b.num_[i] * fb;
        s.normalize();
        return s;
    }

    friend Series operator-(const Series& a, const Series& b) {
        int p = std::min(a.prec_, b.prec_);
        Series s(p);
        s.den_ = ilcm(a.den_, b.den_);
        Int fa = s.den_ / a.den_, fb = s.den_ / b.den_;
        for (int i = 0; i <= p; ++i) s.num_[i] = a.num_[i] * fa - b.num_[i] * fb;
        s.normalize();
        return s;
    }

    Series operator-() const {
        Series s(*this);
        for (auto& x : s.num_) x = -x;
        return s;
    }

    friend Series operator*(const Series& a, const Series& b) {
        int p = std::min(a.prec_, b.prec_);
        Series s(p);
        s.den_ = a.den_ * b.den_;
        for (int i = 0; i <= p; ++i) {
            if (a.num_[i] == 0) continue;
            for (int j = 0; i + j <= p; ++j) {
                if (b.num_[j] == 0) continue;
                s.num_[i + j] += a.num_[i] * b.num_[j];
            }
        }
        s.normalize();
        return s;
    }

    friend Series operator*(const Rational& c, const Series& a) {
        Series s(a);
        s.den_ *= den(c);
        for (auto& x : s.num_) x *= num(c);
        s.normalize();
        return s;
    }

    friend Series operator*(const Series& a, const Rational& c) { return c * a; }

    friend Series operator/(const Series& a, const Rational& c) {
        if (c == 0) throw std::domain_error("division by zero");
        return Rational(den(c), num(c)) * a;
    }

    Series pow(int k) const {
        if (k < 0) throw std::domain_error("negative series power");
        Series r = constant(1, prec_);
        Series base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = (k >>= 1) > 0 ? base * base : base;
        }
        return r;
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.prec_ == b.prec_ && a.den_ == b.den_ && a.num_ == b.num_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    int prec_;
    Int den_;
    std::vector<Int> num_;

    void normalize() {
        if (den_ < 0) {
            den_ = -den_;
            for (auto& x : num_) x = -x;
        }
        Int g = den_;
        for (const auto& x : num_) {
            if (g == 1) break;
            g = igcd(g, x);
        }
        if (g > 1) {
            den_ /= g;
            for (auto& x : num_) x /= g;
        }
    }
};

} // namespace dc
