#pragma once

#include "dc/series.hpp"

#include <vector>

namespace dc {

// Truncated bivariate q-expansion (q_L, q_R), exact rational coefficients over
// one common denominator. Both variables share the same precision.
class Series2 {
public:
    explicit Series2(int prec)
        : prec_(prec), den_(1),
          num_(static_cast<std::size_t>(prec + 1) * (prec + 1), Int(0)) {
        if (prec < 0) throw std::invalid_argument("Series2 precision must be nonnegative");
    }

    static Series2 tensor(const Series& f, const Series& g) {
        int p = std::min(f.prec(), g.prec());
        Series2 s(p);
        std::vector<Rational> fc = f.coeffs(), gc = g.coeffs();
        Int lf = 1, lg = 1;
        for (int i = 0; i <= p; ++i) lf = ilcm(lf, den(fc[i]));
        for (int j = 0; j <= p; ++j) lg = ilcm(lg, den(gc[j]));
        s.den_ = lf * lg;
        for (int i = 0; i <= p; ++i) {
            Int fi = num(fc[i]) * (lf / den(fc[i]));
            if (fi == 0) continue;
            for (int j = 0; j <= p; ++j) {
                Int gj = num(gc[j]) * (lg / den(gc[j]));
                if (gj == 0) continue;
                s.at(i, j) = fi * gj;
            }
        }
        s.normalize();
        return s;
    }

    int prec() const { return prec_; }

    Rational coeff(int i, int j) const {
        if (i < 0 || j < 0 || i > prec_ || j > prec_)
            throw PrecisionTooLow("bidegree beyond precision");
        return Rational(cat(i, j), den_);
    }

    bool is_zero() const {
        return std::all_of(num_.begin(), num_.end(), [](const Int& x) { return x == 0; });
    }

    // all coefficients with both indices >= 1 are integers
    bool integral_positive_bidegrees() const {
        for (int i = 1; i <= prec_; ++i)
            for (int j = 1; j <= prec_; ++j)
                if (cat(i, j) % den_ != 0) return false;
        return true;
    }

    // the row q_L^0: chi^0 of a pure tensor f (x) g is q^0(f) * g
    friend Series chi0_left(const Series2& F) {
        std::vector<Rational> row(F.prec_ + 1);
        for (int j = 0; j <= F.prec_; ++j) row[j] = Rational(F.cat(0, j), F.den_);
        return Series::from_coeffs(row, F.prec_);
    }

    friend Series2 operator+(const Series2& a, const Series2& b) {
        int p = std::min(a.prec_, b.prec_);
        Series2 s(p);
        s.den_ = ilcm(a.den_, b.den_);
        Int fa = s.den_ / a.den_, fb = s.den_ / b.den_;
        for (int i = 0; i <= p; ++i)
            for (int j = 0; j <= p; ++j)
                s.at(i, j) = a.cat(i, j) * fa + b.cat(i, j) * fb;
        s.normalize();
        return s;
    }

    friend Series2 operator-(const Series2& a, const Series2& b) {
        int p = std::min(a.prec_, b.prec_);
        Series2 s(p);
        s.den_ = ilcm(a.den_, b.den_);
        Int fa = s.den_ / a.den_, fb = s.den_ / b.den_;
        for (int i = 0; i <= p; ++i)
            for (int j = 0; j <= p; ++j)
                s.at(i, j) = a.cat(i, j) * fa - b.cat(i, j) * fb;
        s.normalize();
        return s;
    }

    Series2 operator-() const {
        Series2 s(*this);
        for (auto& x : s.num_) x = -x;
        return s;
    }

    friend Series2 operator*(const Rational& c, const Series2& a) {
        Series2 s(a);
        s.den_ *= den(c);
        for (auto& x : s.num_) x *= num(c);
        s.normalize();
        return s;
    }

    friend Series2 operator*(const Series2& a, const Rational& c) { return c * a; }

    friend Series2 operator/(const Series2& a, const Rational& c) {
        if (c == 0) throw std::domain_error("division by zero");
        return Rational(den(c), num(c)) * a;
    }

    friend Series2 operator*(const Series2& a, const Series2& b) {
        int p = std::min(a.prec_, b.prec_);
        Series2 s(p);
        s.den_ = a.den_ * b.den_;
        for (int i = 0; i <= p; ++i)
            for (int j = 0; j <= p; ++j) {
                const Int& av = a.cat(i, j);
                if (av == 0) continue;
                for (int k = 0; i + k <= p; ++k)
                    for (int l = 0; j + l <= p; ++l) {
                        const Int& bv = b.cat(k, l);
                        if (bv == 0) continue;
                        s.at(i + k, j + l) += av * bv;
                    }
            }
        s.normalize();
        return s;
    }

    Series2 pow(int k) const {
        if (k < 0) throw std::domain_error("negative series power");
        Series2 r = tensor(Series::constant(1, prec_), Series::constant(1, prec_));
        Series2 base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = (k >>= 1) > 0 ? base * base : base;
        }
        return r;
    }

    friend bool operator==(const Series2& a, const Series2& b) {
        return a.prec_ == b.prec_ && a.den_ == b.den_ && a.num_ == b.num_;
    }
    friend bool operator!=(const Series2& a, const Series2& b) { return !(a == b); }

private:
    int prec_;
    Int den_;
    std::vector<Int> num_;

    Int& at(int i, int j) { return num_[static_cast<std::size_t>(i) * (prec_ + 1) + j]; }
    const Int& cat(int i, int j) const {
        return num_[static_cast<std::size_t>(i) * (prec_ + 1) + j];
    }

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
