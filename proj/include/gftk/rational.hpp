#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "gftk/errors.hpp"

namespace gftk {

// Exact scalars. mpq_class keeps the canonical-form invariant for us
// (reduced, denominator > 0) as long as every entry point canonicalizes;
// the parse helper below is the only place raw strings come in.
using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// mpq_class(num, den) does not canonicalize on its own; always go through
// this when building a fraction from parts.
inline Rational reduced(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q" with decimal digits; throws InvalidArgument otherwise.
inline Rational rational_from_string(std::string_view s) {
    auto fail = [&] { throw InvalidArgument("not a rational literal: '" + std::string(s) + "'"); };
    if (s.empty()) fail();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool digits = false, slash = false;
    for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] == '/') {
            if (slash || !digits) fail();
            slash = true;
            digits = false;
        } else if (s[k] >= '0' && s[k] <= '9') {
            digits = true;
        } else {
            fail();
        }
    }
    if (!digits) fail();
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), std::string(s).c_str(), 10) != 0) fail();
    if (q.get_den() == 0) throw InvalidArgument("zero denominator: '" + std::string(s) + "'");
    q.canonicalize();
    return q;
}

// Generalized binomial coefficient: falling factorial over k!, so negative
// upper indices work (binomial(-1,2) = 1) and 0 <= n < k gives 0.
inline Rational binomial(long n, long k) {
    if (k < 0) throw InvalidArgument("binomial: k must be >= 0");
    Integer num = 1;
    for (long i = 0; i < k; ++i) num *= Integer(n - i);
    Integer den = 1;
    for (long i = 2; i <= k; ++i) den *= i;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace gftk
