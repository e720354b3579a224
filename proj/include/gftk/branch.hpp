#pragma once

#include <utility>
#include <vector>

#include "gftk/poly.hpp"
#include "gftk/puiseux.hpp"

namespace gftk {

// Branch analysis of D(t,z) = 0 near z = 0.
//
// Valuation convention: Newton-polygon points are (t-degree i, z-valuation of
// c_i); a lower-hull segment of slope σ and horizontal length ℓ accounts for
// ℓ branches t = s(z) with val_z s = −σ. A branch is bounded as z → 0 iff its
// valuation is ≥ 0. Powers of t dividing D are the identically-zero branches;
// they are not part of the hull and classify_bounded handles them directly.

// (valuation, count) per hull segment, valuation descending (bounded end
// first). Counts sum to t_degree − t_valuation.
std::vector<std::pair<Rational, long>> newton_polygon(const PolyTZ& d);

// One root branch t = s(z).
struct Branch {
    Rational valuation;                      // leading exponent of s
    long ramification = 1;                   // r in z^{1/r}
    bool bounded = true;                     // valuation >= 0
    long multiplicity_at_leading_order = 1;  // 2 for a branch born from a double leading root
    long sqrt_d = 0;                         // 0: rational coefficients; else coefficients in Q(√d)
    Puiseux expansion;
};

struct BranchSummary {
    std::vector<Branch> bounded;                       // sorted by s(0)
    std::vector<std::pair<Rational, long>> unbounded;  // (valuation, count), valuation descending
};

// Unique series s with s(0) = t0 and D(s, z) ≡ 0 mod z^prec, by Newton
// iteration with quadratic precision doubling. Requires t0 to be a simple
// root of D(t, 0); throws NotASimpleRoot otherwise. K is Rational or QuadExt.
template <class K>
Series<K> hensel_lift(const PolyTZ& d, const K& t0, long prec) {
    if (d.is_zero() || prec < 1) throw InvalidArgument("hensel_lift: nonzero polynomial and prec >= 1 required");
    ZPoly u = d.at_z0_in_t();
    if (!(zp_eval_at(u, t0) == K(0)) || zp_eval_at(zp_derivative(u), t0) == K(0))
        throw NotASimpleRoot("hensel_lift: t0 is not a simple root of D(t,0)");

    PolyTZ dt = d.derivative_t();
    Series<K> s = Series<K>::constant(t0, 1);
    long p = 1;
    while (p < prec) {
        long np = std::min(2 * p, prec);
        Series<K> sx = s.extended(np);
        Series<K> num = eval_at(d, sx, np);
        if (num.is_zero()) {
            s = sx;
        } else {
            s = sx - ps_div(num, eval_at(dt, sx, np));
        }
        p = np;
    }
    return s;
}

// All branches of the given valuation (one of newton_polygon's), each
// expanded mod z^prec. Simple leading roots lift with rational coefficients;
// a double rational leading root (integer valuation only) recenters once into
// a conjugate pair of ramification-2 branches, over Q(√d) when the shifted
// discriminant is not a perfect square. Anything needing more — triple
// leading roots, irrational leading roots, ramification beyond 2 — throws
// UnsupportedRamification.
std::vector<Branch> expand_branch(const PolyTZ& d, const Rational& q, long prec);

// Bounded branches fully expanded mod z^prec, unbounded ones summarised by
// (valuation, count). Every bounded branch must come from a simple root of
// D(t,0) — a repeated bounded root throws MultipleBoundedRoot (the residue
// formula downstream needs simple poles), and bounded roots outside Q throw
// UnsupportedRamification.
BranchSummary classify_bounded(const PolyTZ& d, long prec);

// D(s(z), z) as a series in Y = z^{1/ram}; for residual checks.
QSeries eval_at_puiseux(const PolyTZ& d, const Puiseux& s, long yprec);

} // namespace gftk
