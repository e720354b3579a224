#pragma once

#include <string>

#include "gftk/errors.hpp"
#include "gftk/rational.hpp"

namespace gftk {

// a + b*sqrt(d) with rational a, b. d is a squarefree integer > 1, fixed per
// computation; d == 0 encodes a plain rational (b must then be 0). Arithmetic
// between values with different nonzero d is a usage error, not a field tower.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(long v) : a_(v), b_(0), d_(0) {}
    QuadExt(const Rational& a) : a_(a), b_(0), d_(0) {}
    QuadExt(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (b_ == 0) {
            d_ = 0;
        } else if (d_ <= 1) {
            throw InvalidArgument("QuadExt: d must be a squarefree integer > 1");
        }
    }

    const Rational& rat_part() const { return a_; }
    const Rational& sqrt_part() const { return b_; }
    long d() const { return d_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadExt conj() const { return b_ == 0 ? *this : QuadExt(a_, -b_, d_); }

    friend QuadExt operator-(const QuadExt& x) {
        return x.b_ == 0 ? QuadExt(-x.a_) : QuadExt(-x.a_, -x.b_, x.d_);
    }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        long d = merged_d(x, y);
        Rational b = x.b_ + y.b_;
        return b == 0 ? QuadExt(x.a_ + y.a_) : QuadExt(x.a_ + y.a_, b, d);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        long d = merged_d(x, y);
        Rational a = x.a_ * y.a_ + Rational(d) * x.b_ * y.b_;
        Rational b = x.a_ * y.b_ + x.b_ * y.a_;
        return b == 0 ? QuadExt(a) : QuadExt(a, b, d);
    }

    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        if (y.is_zero()) throw InvalidArgument("QuadExt: division by zero");
        if (y.b_ == 0) {
            return x.b_ == 0 ? QuadExt(x.a_ / y.a_) : QuadExt(x.a_ / y.a_, x.b_ / y.a_, x.d_);
        }
        // 1/(a+b*sqrt(d)) = (a-b*sqrt(d)) / (a^2 - d*b^2); the norm is nonzero
        // because sqrt(d) is irrational for squarefree d > 1.
        Rational norm = y.a_ * y.a_ - Rational(y.d_) * y.b_ * y.b_;
        QuadExt yinv(y.a_ / norm, -y.b_ / norm, y.d_);
        return x * yinv;
    }

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

private:
    static long merged_d(const QuadExt& x, const QuadExt& y) {
        if (x.b_ == 0) return y.d_;
        if (y.b_ == 0) return x.d_;
        if (x.d_ != y.d_)
            throw InvalidArgument("QuadExt: mixing sqrt(" + std::to_string(x.d_) + ") with sqrt(" +
                                  std::to_string(y.d_) + ")");
        return x.d_;
    }

    Rational a_, b_;
    long d_;
};

} // namespace gftk
