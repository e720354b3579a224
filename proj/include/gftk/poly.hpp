#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gftk/series.hpp"

namespace gftk {

// Dense univariate polynomial over Q; index = exponent. Also reused as the
// per-t-degree z-coefficients of PolyTZ. Trailing zeros are allowed; helpers
// treat the value, not the representation.
using ZPoly = std::vector<Rational>;

inline bool zp_is_zero(const ZPoly& p) {
    for (const auto& c : p)
        if (c != 0) return false;
    return true;
}

inline long zp_degree(const ZPoly& p) { // -1 for the zero polynomial
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

inline long zp_valuation(const ZPoly& p) { // degree+1 sentinel never needed; -1 for zero
    for (long i = 0; i < static_cast<long>(p.size()); ++i)
        if (p[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

inline Rational zp_coeff(const ZPoly& p, long i) {
    return (i >= 0 && i < static_cast<long>(p.size())) ? p[static_cast<std::size_t>(i)] : Rational(0);
}

inline void zp_add_scaled(ZPoly& acc, const ZPoly& p, const Rational& f) {
    if (acc.size() < p.size()) acc.resize(p.size(), Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) acc[i] += f * p[i];
}

inline Rational zp_eval(const ZPoly& p, const Rational& x) {
    Rational r(0);
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) r = r * x + p[static_cast<std::size_t>(i)];
    return r;
}

inline ZPoly zp_derivative(const ZPoly& p) {
    ZPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
    return d;
}

// Horner evaluation in an extension field K of Q.
template <class K>
K zp_eval_at(const ZPoly& p, const K& x) {
    K r(0);
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) r = r * x + K(p[static_cast<std::size_t>(i)]);
    return r;
}

template <class K>
Series<K> zp_as_series(const ZPoly& p, long prec) {
    std::vector<K> c;
    c.reserve(p.size());
    for (const auto& q : p) c.push_back(K(q));
    if (static_cast<long>(c.size()) > prec) c.resize(static_cast<std::size_t>(std::max(0L, prec)));
    return Series<K>::from_coeffs(std::move(c), 0, prec);
}

// Rational roots of a univariate polynomial over Q (the classical p/q sieve
// over a primitive integer model), with multiplicities. `remaining_degree` is
// what is left after dividing all rational roots and the x^k content out --
// nonzero means irrational or complex roots exist.
struct RationalRoots {
    std::vector<std::pair<Rational, int>> roots; // ascending by value
    long zero_multiplicity = 0;
    long remaining_degree = 0;
};
RationalRoots rational_roots(const ZPoly& p);

// Polynomial in t whose coefficients are polynomials in z over Q.
struct PolyTZ {
    std::vector<ZPoly> tc; // tc[i] multiplies t^i

    long t_degree() const {
        for (long i = static_cast<long>(tc.size()) - 1; i >= 0; --i)
            if (!zp_is_zero(tc[static_cast<std::size_t>(i)])) return i;
        return -1;
    }
    long t_valuation() const {
        for (long i = 0; i < static_cast<long>(tc.size()); ++i)
            if (!zp_is_zero(tc[static_cast<std::size_t>(i)])) return i;
        return -1;
    }
    bool is_zero() const { return t_degree() < 0; }

    ZPoly at_z0_in_t() const { // the univariate D(t, 0)
        ZPoly u;
        u.reserve(tc.size());
        for (const auto& c : tc) u.push_back(zp_coeff(c, 0));
        return u;
    }

    PolyTZ derivative_t() const {
        PolyTZ d;
        for (std::size_t i = 1; i < tc.size(); ++i) {
            ZPoly c = tc[i];
            for (auto& q : c) q *= Rational(static_cast<long>(i));
            d.tc.push_back(std::move(c));
        }
        return d;
    }

    // Smallest z-valuation across coefficients; dividing it out never changes
    // the branches. Returns the removed power.
    long strip_z_content() {
        long v = -1;
        for (const auto& c : tc) {
            if (zp_is_zero(c)) continue;
            long cv = zp_valuation(c);
            v = (v < 0) ? cv : std::min(v, cv);
        }
        if (v <= 0) return 0;
        for (auto& c : tc) {
            if (zp_is_zero(c)) {
                c.clear();
            } else {
                c.erase(c.begin(), c.begin() + v);
            }
        }
        return v;
    }
};

// Horner evaluation of P(s, z) over truncated series; exact coefficients are
// injected at the working precision.
template <class K>
Series<K> eval_at(const PolyTZ& p, const Series<K>& s, long workprec) {
    Series<K> r = Series<K>::zero(workprec);
    for (long i = p.t_degree(); i >= 0; --i)
        r = r * s + zp_as_series<K>(p.tc[static_cast<std::size_t>(i)], workprec);
    return r;
}

// Sparse bivariate polynomial over Q; key = (deg_x, deg_y).
class XYPoly {
public:
    XYPoly() = default;
    static XYPoly constant(const Rational& c) {
        XYPoly p;
        p.add_term(0, 0, c);
        return p;
    }
    static XYPoly variable(char v) { // 'x' or 'y'
        XYPoly p;
        p.add_term(v == 'x' ? 1 : 0, v == 'y' ? 1 : 0, Rational(1));
        return p;
    }

    void add_term(long i, long j, const Rational& c) {
        if (c == 0) return;
        auto key = std::make_pair(i, j);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<std::pair<long, long>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational at_origin() const {
        auto it = terms_.find({0, 0});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    long max_deg_y() const {
        long m = 0;
        for (const auto& [k, c] : terms_) m = std::max(m, k.second);
        return m;
    }

    friend XYPoly operator+(const XYPoly& a, const XYPoly& b) {
        XYPoly r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
        return r;
    }
    friend XYPoly operator-(const XYPoly& a, const XYPoly& b) {
        XYPoly r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
        return r;
    }
    friend XYPoly operator*(const XYPoly& a, const XYPoly& b) {
        XYPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    XYPoly pow(long n) const {
        XYPoly r = constant(1);
        for (long k = 0; k < n; ++k) r = r * (*this);
        return r;
    }
    friend bool operator==(const XYPoly& a, const XYPoly& b) { return a.terms_ == b.terms_; }

private:
    std::map<std::pair<long, long>, Rational> terms_;
};

// F(x,y) = num/den with den(0,0) != 0, so F expands as a bivariate power
// series at the origin.
struct RationalBivariate {
    XYPoly num, den;
    RationalBivariate(XYPoly n, XYPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.at_origin() == 0)
            throw InvalidArgument("RationalBivariate: denominator must have a nonzero constant term");
    }
};

} // namespace gftk
