#pragma once

#include <numeric>

#include "gftk/series.hpp"

namespace gftk {

// Series with fractional exponents: a Laurent series in y = z^(1/r). The body
// exponent k stands for z^(k/r). Kept reduced: the gcd of r with all exponents
// in the support is 1 (so r = 1 exactly when every exponent is integral), and
// r = 1 for the zero series.
class Puiseux {
public:
    Puiseux() : ram_(1), body_(QSeries::zero(0)) {}

    Puiseux(long ram, QSeries body) : ram_(ram), body_(std::move(body)) {
        if (ram_ < 1) throw InvalidArgument("Puiseux: ramification must be >= 1");
        reduce();
    }

    explicit Puiseux(const RSeries& s) : ram_(1), body_(embed(s)) {}

    long ramification() const { return ram_; }
    const QSeries& body() const { return body_; }

    bool is_zero() const { return body_.is_zero(); }
    Rational valuation() const { return reduced(body_.valuation(), ram_); }
    Rational precision() const { return reduced(body_.precision(), ram_); }

    // Coefficient of z^e; exponents off the z^(1/r) grid are exact zeros.
    QuadExt coeff(const Rational& e) const {
        Rational idx = e * ram_;
        if (!is_integer(idx)) {
            if (e * ram_ >= Rational(body_.precision()))
                throw InvalidArgument("Puiseux: coefficient beyond precision");
            return QuadExt(0);
        }
        return body_.coeff(static_cast<long>(idx.get_num().get_si()));
    }

    Puiseux lifted(long target_ram) const {
        if (target_ram % ram_ != 0) throw InvalidArgument("Puiseux: lift target must be a multiple of r");
        long f = target_ram / ram_;
        if (f == 1) return *this;
        std::vector<QuadExt> c(static_cast<std::size_t>(body_.coeffs().size() ? (body_.coeffs().size() - 1) * f + 1 : 0),
                               QuadExt(0));
        for (std::size_t k = 0; k < body_.coeffs().size(); ++k) c[k * f] = body_.coeffs()[k];
        Puiseux p;
        p.ram_ = target_ram;
        p.body_ = QSeries::from_coeffs(std::move(c), body_.valuation() * f, body_.precision() * f);
        return p;
    }

    friend Puiseux operator+(const Puiseux& a, const Puiseux& b) {
        long L = std::lcm(a.ram_, b.ram_);
        return Puiseux(L, a.lifted(L).body_ + b.lifted(L).body_);
    }
    friend Puiseux operator-(const Puiseux& a, const Puiseux& b) {
        long L = std::lcm(a.ram_, b.ram_);
        return Puiseux(L, a.lifted(L).body_ - b.lifted(L).body_);
    }
    friend Puiseux operator*(const Puiseux& a, const Puiseux& b) {
        long L = std::lcm(a.ram_, b.ram_);
        return Puiseux(L, a.lifted(L).body_ * b.lifted(L).body_);
    }
    friend bool operator==(const Puiseux& a, const Puiseux& b) {
        return a.ram_ == b.ram_ && a.body_ == b.body_;
    }
    friend bool operator!=(const Puiseux& a, const Puiseux& b) { return !(a == b); }

private:
    // Divide exponents and r by their common gcd. Precision maps to
    // ceil(prec/g): exactly the integral exponents k with k*g < prec.
    void reduce() {
        long g = ram_;
        if (body_.is_zero()) {
            long p = body_.precision();
            body_ = QSeries::zero(p >= 0 ? (p + ram_ - 1) / ram_ : p / ram_);
            ram_ = 1;
            return;
        }
        for (long e = body_.valuation(); e < body_.precision() && g > 1; ++e)
            if (!(body_.coeff(e) == QuadExt(0))) g = std::gcd(g, std::abs(e) == 0 ? g : std::abs(e));
        if (g <= 1) return;
        std::vector<QuadExt> c;
        for (long e = body_.valuation(); e < body_.precision(); e += g) c.push_back(body_.coeff(e));
        long p = body_.precision();
        long newprec = (p >= 0) ? (p + g - 1) / g : -((-p) / g);
        body_ = QSeries::from_coeffs(std::move(c), body_.valuation() / g, newprec);
        ram_ /= g;
    }

    long ram_;
    QSeries body_;
};

inline Puiseux ps_add(const Puiseux& a, const Puiseux& b) { return a + b; }
inline Puiseux ps_mul(const Puiseux& a, const Puiseux& b) { return a * b; }

inline Puiseux ps_div(const Puiseux& a, const Puiseux& b) {
    long L = std::lcm(a.ramification(), b.ramification());
    return Puiseux(L, ps_div(a.lifted(L).body(), b.lifted(L).body()));
}

// Inverse of the RSeries embedding. Only valid when every exponent is
// integral and every coefficient lies in Q.
inline RSeries rational_series(const Puiseux& a) {
    if (a.ramification() != 1)
        throw InvalidArgument("rational_series: fractional exponents remain");
    const QSeries& b = a.body();
    if (b.is_zero()) return RSeries::zero(b.precision());
    std::vector<Rational> c;
    for (long e = b.valuation(); e < b.precision(); ++e) {
        const QuadExt& q = b.coeff(e);
        if (!q.is_rational())
            throw InvalidArgument("rational_series: irrational coefficient");
        c.push_back(q.rat_part());
    }
    return RSeries::from_coeffs(std::move(c), b.valuation(), b.precision());
}

// d/dz: exponent k/r maps to coefficient factor k/r and exponent k/r - 1.
inline Puiseux ps_derivative(const Puiseux& a) {
    const QSeries& b = a.body();
    long r = a.ramification();
    if (b.is_zero()) return Puiseux(r, QSeries::zero(b.precision() - r));
    std::vector<QuadExt> c;
    for (long e = b.valuation(); e < b.precision(); ++e)
        c.push_back(b.coeff(e) * QuadExt(reduced(e, r)));
    return Puiseux(r, QSeries::from_coeffs(std::move(c), b.valuation() - r, b.precision() - r));
}

} // namespace gftk
