#include "gftk/poly.hpp"

#include <algorithm>

#include "gftk/intfactor.hpp"

namespace gftk {

namespace {

// Divide p by (x - r) in place; precondition: p(r) == 0.
void divide_linear(ZPoly& p, const Rational& r) {
    long d = zp_degree(p);
    ZPoly q(static_cast<std::size_t>(d), Rational(0));
    Rational carry(0);
    for (long i = d; i >= 1; --i) {
        carry = carry * r + zp_coeff(p, i);
        q[static_cast<std::size_t>(i - 1)] = carry;
    }
    p = std::move(q);
}

} // namespace

RationalRoots rational_roots(const ZPoly& p) {
    RationalRoots out;
    if (zp_is_zero(p)) return out;

    ZPoly w = p;
    out.zero_multiplicity = zp_valuation(w);
    w.erase(w.begin(), w.begin() + out.zero_multiplicity);

    long d = zp_degree(w);
    if (d == 0) return out;

    // Primitive integer model: clear denominators, then the p/q sieve needs
    // only the extreme coefficients.
    Integer lcm_den(1);
    for (const auto& c : w)
        if (c != 0) lcm_den = lcm(lcm_den, Rational(c).get_den());
    Integer a0 = Rational(w[0] * Rational(lcm_den)).get_num();
    Integer an = Rational(w[static_cast<std::size_t>(d)] * Rational(lcm_den)).get_num();

    std::vector<Rational> candidates;
    for (const Integer& pn : divisors(abs(a0)))
        for (const Integer& qn : divisors(abs(an))) {
            Rational r(pn, qn);
            r.canonicalize();
            candidates.push_back(r);
            candidates.push_back(-r);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const Rational& r : candidates) {
        int mult = 0;
        while (zp_degree(w) >= 1 && zp_eval(w, r) == 0) {
            divide_linear(w, r);
            ++mult;
        }
        if (mult > 0) out.roots.emplace_back(r, mult);
    }

    out.remaining_degree = zp_degree(w);
    return out;
}

} // namespace gftk
