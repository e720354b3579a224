#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "gftk/errors.hpp"
#include "gftk/quadext.hpp"
#include "gftk/rational.hpp"

namespace gftk {

// Truncated Laurent series over an exact field K (Rational or QuadExt).
//
// Coefficients are stored for exponents val .. prec-1; the series is known
// modulo z^prec and nothing beyond. The stored leading coefficient (at the
// valuation) is nonzero unless the series is zero through its precision, in
// which case val == prec and the coefficient list is empty. Asking for a
// coefficient at or beyond prec is an error by design: silent zeros hide
// truncation bugs.
//
// Precision bookkeeping (exact, never optimistic):
//   add:        min(prec_a, prec_b)
//   mul:        min(val_a + prec_b, val_b + prec_a)
//   inverse:    prec_b - 2*val_b
//   div:        min(val_a + prec_b - 2*val_b, prec_a - val_b)
//   derivative: prec - 1
//   log1p:      prec_a
//   compose:    min(val_inner * prec_outer, prec_inner)
template <class K>
class Series {
public:
    Series() : val_(0), prec_(0) {}

    static Series zero(long prec) {
        Series s;
        s.val_ = prec;
        s.prec_ = prec;
        return s;
    }

    static Series constant(const K& c, long prec) { return monomial(c, 0, prec); }

    static Series monomial(const K& c, long e, long prec) {
        if (c == K(0)) return zero(prec);
        if (prec <= e) throw InvalidArgument("Series: monomial exponent must be below precision");
        Series s;
        s.val_ = e;
        s.prec_ = prec;
        s.c_.assign(static_cast<std::size_t>(prec - e), K(0));
        s.c_[0] = c;
        return s;
    }

    // Coefficients for exponents val, val+1, ...; trimmed/normalized so the
    // invariants hold. Entries beyond prec-1 are rejected.
    static Series from_coeffs(std::vector<K> coeffs, long val, long prec) {
        if (val + static_cast<long>(coeffs.size()) > prec)
            throw InvalidArgument("Series: more coefficients than the stated precision allows");
        Series s;
        s.val_ = val;
        s.prec_ = prec;
        s.c_ = std::move(coeffs);
        s.c_.resize(static_cast<std::size_t>(prec - val), K(0));
        s.normalize();
        return s;
    }

    // Polynomial c0 + c1*z + ... viewed as a series with the given precision.
    static Series polynomial(const std::vector<K>& asc, long prec) {
        std::vector<K> c(asc.begin(), asc.end());
        if (static_cast<long>(c.size()) > prec) c.resize(static_cast<std::size_t>(prec));
        return from_coeffs(std::move(c), 0, prec);
    }

    long valuation() const { return val_; } // == prec() for the zero series
    long precision() const { return prec_; }
    bool is_zero() const { return c_.empty(); }

    K coeff(long e) const {
        if (e >= prec_)
            throw InvalidArgument("Series: coefficient of z^" + std::to_string(e) +
                                  " requested but series is only known mod z^" + std::to_string(prec_));
        if (e < val_) return K(0);
        return c_[static_cast<std::size_t>(e - val_)];
    }

    const std::vector<K>& coeffs() const { return c_; }

    // Same knowledge, lower claim.
    Series truncated(long prec) const {
        if (prec > prec_) throw InvalidArgument("Series: cannot truncate to a higher precision");
        std::vector<K> c(c_.begin(), c_.begin() + std::min<long>(c_.size(), std::max(0L, prec - val_)));
        return from_coeffs(std::move(c), std::min(val_, prec), prec);
    }

    // Reinterpret the stored coefficients as exact data known to a higher
    // precision. Only correct when the caller knows the tail is really zero
    // (Newton iterations, exact polynomials).
    Series extended(long prec) const {
        if (prec < prec_) throw InvalidArgument("Series: use truncated() to lower precision");
        return from_coeffs(c_, is_zero() ? prec : val_, prec);
    }

    // Multiply by z^k.
    Series shifted(long k) const {
        Series s = *this;
        s.val_ += k;
        s.prec_ += k;
        return s;
    }

    friend Series operator-(const Series& a) {
        Series s = a;
        for (K& x : s.c_) x = -x;
        return s;
    }

    friend Series operator+(const Series& a, const Series& b) {
        long prec = std::min(a.prec_, b.prec_);
        long val = std::min({a.val_, b.val_, prec});
        std::vector<K> c(static_cast<std::size_t>(prec - val), K(0));
        auto acc = [&](const Series& s) {
            for (long e = s.val_; e < std::min(s.prec_, prec); ++e)
                c[static_cast<std::size_t>(e - val)] += s.c_[static_cast<std::size_t>(e - s.val_)];
        };
        acc(a);
        acc(b);
        return from_coeffs(std::move(c), val, prec);
    }

    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

    friend Series operator*(const Series& a, const Series& b) {
        long n = std::min<long>(a.c_.size(), b.c_.size());
        long val = a.val_ + b.val_;
        long prec = std::min(a.val_ + b.prec_, b.val_ + a.prec_);
        if (n == 0) return zero(prec);
        std::vector<K> c(static_cast<std::size_t>(n), K(0));
        for (long i = 0; i < std::min<long>(a.c_.size(), n); ++i) {
            if (a.c_[static_cast<std::size_t>(i)] == K(0)) continue;
            long jmax = std::min<long>(b.c_.size(), n - i);
            for (long j = 0; j < jmax; ++j)
                c[static_cast<std::size_t>(i + j)] +=
                    a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
        }
        return from_coeffs(std::move(c), val, prec);
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.val_ == b.val_ && a.prec_ == b.prec_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    void normalize() {
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead] == K(0)) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            val_ = prec_;
        } else if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            val_ += static_cast<long>(lead);
        }
    }

    long val_;
    long prec_;
    std::vector<K> c_;
};

using RSeries = Series<Rational>;
using QSeries = Series<QuadExt>;

template <class K>
Series<K> ps_add(const Series<K>& a, const Series<K>& b) { return a + b; }

template <class K>
Series<K> ps_sub(const Series<K>& a, const Series<K>& b) { return a - b; }

template <class K>
Series<K> ps_mul(const Series<K>& a, const Series<K>& b) { return a * b; }

template <class K>
Series<K> ps_inv(const Series<K>& b) {
    if (b.is_zero()) throw DivisionByZeroSeries("inverse of a series that is zero to its precision");
    long n = b.precision() - b.valuation();
    const auto& bc = b.coeffs();
    std::vector<K> r(static_cast<std::size_t>(n), K(0));
    r[0] = K(1) / bc[0];
    for (long k = 1; k < n; ++k) {
        K s(0);
        for (long j = 1; j <= k; ++j) s += bc[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k - j)];
        r[static_cast<std::size_t>(k)] = -s * r[0];
    }
    return Series<K>::from_coeffs(std::move(r), -b.valuation(), b.precision() - 2 * b.valuation());
}

template <class K>
Series<K> ps_div(const Series<K>& a, const Series<K>& b) { return a * ps_inv(b); }

template <class K>
Series<K> ps_derivative(const Series<K>& a) {
    long prec = a.precision() - 1;
    if (a.is_zero()) return Series<K>::zero(prec);
    std::vector<K> c;
    c.reserve(a.coeffs().size());
    for (long e = a.valuation(); e < a.precision(); ++e) c.push_back(a.coeff(e) * K(e));
    return Series<K>::from_coeffs(std::move(c), a.valuation() - 1, prec);
}

// log(1 + a) for a with valuation >= 1.
template <class K>
Series<K> ps_log1p(const Series<K>& a) {
    long prec = a.precision();
    if (a.is_zero()) return Series<K>::zero(prec);
    if (a.valuation() < 1)
        throw InvalidArgument("ps_log1p: argument must have valuation >= 1 (constant term of 1+a must be 1)");
    Series<K> acc = Series<K>::zero(prec);
    Series<K> pw = a;
    long k = 1;
    while (!pw.is_zero() && pw.valuation() < prec) {
        Series<K> term = pw;
        K f = K((k % 2 == 1) ? 1 : -1) / K(k);
        acc = acc + term * Series<K>::constant(f, prec);
        pw = (pw * a).truncated(std::min(prec, pw.valuation() + a.precision()));
        ++k;
    }
    return acc.truncated(prec);
}

// outer(inner(z)); outer must have valuation >= 0, inner valuation >= 1.
template <class K>
Series<K> ps_compose(const Series<K>& outer, const Series<K>& inner) {
    if (!inner.is_zero() && inner.valuation() < 1)
        throw InvalidArgument("ps_compose: inner series must have valuation >= 1");
    if (outer.valuation() < 0)
        throw InvalidArgument("ps_compose: outer series must have valuation >= 0");
    long vi = inner.is_zero() ? inner.precision() : inner.valuation();
    long prec = std::min(vi * std::max(outer.precision(), 1L), inner.precision());
    if (outer.is_zero()) return Series<K>::zero(prec);
    Series<K> in = inner.precision() > prec ? inner.truncated(prec) : inner;
    Series<K> r = Series<K>::zero(prec);
    for (long e = outer.precision() - 1; e >= 0; --e) {
        r = r * in + Series<K>::constant(outer.coeff(e), prec);
    }
    return r.truncated(prec);
}

// base^n by square-and-multiply; the multiplication bookkeeping carries the
// precision honestly through the chain. Negative n inverts first.
template <class K>
Series<K> ps_pow(const Series<K>& base, long n) {
    if (n < 0) return ps_inv(ps_pow(base, -n));
    if (n == 0) return Series<K>::constant(K(1), base.precision());
    int hb = 0;
    while ((n >> (hb + 1)) != 0) ++hb;
    Series<K> r = base;
    for (int i = hb - 1; i >= 0; --i) {
        r = r * r;
        if ((n >> i) & 1) r = r * base;
    }
    return r;
}

// Compare through exponents < upto (which must not exceed either precision).
template <class K>
bool ps_equal_through(const Series<K>& a, const Series<K>& b, long upto) {
    if (upto > a.precision() || upto > b.precision())
        throw InvalidArgument("ps_equal_through: comparison order exceeds known precision");
    for (long e = std::min(a.valuation(), b.valuation()); e < upto; ++e)
        if (a.coeff(e) != b.coeff(e)) return false;
    return true;
}

// First exponent (below the shared precision) where the two differ.
template <class K>
std::optional<long> ps_first_difference(const Series<K>& a, const Series<K>& b) {
    long upto = std::min(a.precision(), b.precision());
    for (long e = std::min(a.valuation(), b.valuation()); e < upto; ++e)
        if (a.coeff(e) != b.coeff(e)) return e;
    return std::nullopt;
}

inline QSeries embed(const RSeries& a) {
    std::vector<QuadExt> c(a.coeffs().begin(), a.coeffs().end());
    return QSeries::from_coeffs(std::move(c), a.valuation(), a.precision());
}

} // namespace gftk
