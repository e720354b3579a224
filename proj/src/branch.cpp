#include "gftk/branch.hpp"

#include <algorithm>
#include <climits>

#include "gftk/intfactor.hpp"

namespace gftk {

namespace {

long as_long(const Integer& n, const char* what) {
    if (!n.fits_slong_p()) throw InvalidArgument(std::string(what) + ": value out of range");
    return n.get_si();
}

// D(u·z^q, z) cleared of fractional content: with q = a/b and y = z^{1/b},
// the term c·z^e·t^i becomes c·u^i·y^{be+ai−μ}, μ chosen so the minimum
// exponent is 0. Roots u(y) with u(0) ≠ 0 are exactly the valuation-q
// branches of D.
PolyTZ substitute_slope(const PolyTZ& d, long a, long b) {
    long mu = LONG_MAX;
    for (std::size_t i = 0; i < d.tc.size(); ++i) {
        const ZPoly& c = d.tc[i];
        if (zp_is_zero(c)) continue;
        mu = std::min(mu, b * zp_valuation(c) + a * static_cast<long>(i));
    }
    PolyTZ e;
    e.tc.assign(d.tc.size(), ZPoly{});
    for (std::size_t i = 0; i < d.tc.size(); ++i) {
        const ZPoly& c = d.tc[i];
        for (std::size_t ee = 0; ee < c.size(); ++ee) {
            if (c[ee] == 0) continue;
            long ex = b * static_cast<long>(ee) + a * static_cast<long>(i) - mu;
            ZPoly& out = e.tc[i];
            if (static_cast<long>(out.size()) <= ex) out.resize(static_cast<std::size_t>(ex) + 1, Rational(0));
            out[static_cast<std::size_t>(ex)] += c[ee];
        }
    }
    return e;
}

// E(u0 + v, y) by Taylor shift in the outer variable.
PolyTZ shift_root(const PolyTZ& e, const Rational& u0) {
    long n = e.t_degree();
    std::vector<Rational> pw(static_cast<std::size_t>(n) + 1, Rational(1));
    for (long k = 1; k <= n; ++k) pw[static_cast<std::size_t>(k)] = pw[static_cast<std::size_t>(k - 1)] * u0;
    PolyTZ out;
    out.tc.assign(static_cast<std::size_t>(n) + 1, ZPoly{});
    for (long i = 0; i <= n; ++i) {
        const ZPoly& c = e.tc[static_cast<std::size_t>(i)];
        if (zp_is_zero(c)) continue;
        for (long j = 0; j <= i; ++j)
            zp_add_scaled(out.tc[static_cast<std::size_t>(j)], c, binomial(i, j) * pw[static_cast<std::size_t>(i - j)]);
    }
    return out;
}

// v = Y·w and y = Y², then divide out the Y² content: v^j·y^e ↦ w^j·Y^{2e+j−2}.
// Well-defined because the recentered polynomial has no constant term and no
// pure-v term at y = 0.
PolyTZ ramify2(const PolyTZ& e2) {
    PolyTZ out;
    out.tc.assign(e2.tc.size(), ZPoly{});
    for (std::size_t j = 0; j < e2.tc.size(); ++j) {
        const ZPoly& c = e2.tc[j];
        for (std::size_t e = 0; e < c.size(); ++e) {
            if (c[e] == 0) continue;
            long ex = 2 * static_cast<long>(e) + static_cast<long>(j) - 2;
            ZPoly& row = out.tc[j];
            if (static_cast<long>(row.size()) <= ex) row.resize(static_cast<std::size_t>(ex) + 1, Rational(0));
            row[static_cast<std::size_t>(ex)] = c[e];
        }
    }
    return out;
}

QSeries conjugated(const QSeries& s) {
    std::vector<QuadExt> c = s.coeffs();
    for (auto& q : c) q = q.conj();
    return QSeries::from_coeffs(std::move(c), s.valuation(), s.precision());
}

// A double leading root u0 of E(u,0): recenter u = u0 + v and split v into a
// square root of the shifted constant term, giving the conjugate pair
// u0 ± √(ratio)·Y + O(Y²) with Y = y^{1/2}.
void append_ramified_pair(std::vector<Branch>& out, const PolyTZ& e, const Rational& u0, long a, long prec) {
    PolyTZ e2 = shift_root(e, u0);
    const ZPoly& cpoly = e2.tc[0];
    if (zp_is_zero(cpoly))
        throw UnsupportedRamification("expand_branch: repeated exact branch, nothing to split");
    if (zp_valuation(cpoly) != 1)
        throw UnsupportedRamification("expand_branch: double leading root does not split at first order");
    Rational a0 = zp_coeff(e2.tc[2], 0);
    Rational c1 = zp_coeff(cpoly, 1);
    Rational ratio = -c1 / a0; // w(0)² for v = Y·w
    if (ratio < 0)
        throw UnsupportedRamification("expand_branch: conjugate pair is complex (negative discriminant)");
    Integer pq = ratio.get_num() * ratio.get_den();
    Integer sq = square_part(pq);
    Integer dd = pq / (sq * sq);
    Rational mag(sq, ratio.get_den());
    mag.canonicalize();

    PolyTZ e3 = ramify2(e2);
    long py = std::max(1L, 2 * (prec - a) + 2);

    QSeries wplus, wminus;
    long sqrt_d = 0;
    if (dd == 1) {
        wplus = embed(hensel_lift(e3, mag, py));
        wminus = embed(hensel_lift(e3, Rational(-mag), py));
    } else {
        sqrt_d = as_long(dd, "expand_branch: discriminant");
        wplus = hensel_lift(e3, QuadExt(Rational(0), mag, sqrt_d), py);
        wminus = conjugated(wplus);
    }

    for (const QSeries& w : {wplus, wminus}) {
        QSeries u = QSeries::constant(QuadExt(u0), py + 1) + w.shifted(1);
        Branch br;
        br.valuation = Rational(a);
        br.bounded = a >= 0;
        br.multiplicity_at_leading_order = 2;
        br.sqrt_d = sqrt_d;
        br.expansion = Puiseux(2, u.shifted(2 * a).truncated(2 * prec));
        br.ramification = br.expansion.ramification();
        out.push_back(std::move(br));
    }
}

} // namespace

std::vector<std::pair<Rational, long>> newton_polygon(const PolyTZ& d) {
    if (d.is_zero()) throw InvalidArgument("newton_polygon: zero polynomial");
    std::vector<std::pair<long, long>> hull; // (i, v_i), lower hull with strictly increasing slopes
    for (std::size_t i = 0; i < d.tc.size(); ++i) {
        if (zp_is_zero(d.tc[i])) continue;
        std::pair<long, long> p{static_cast<long>(i), zp_valuation(d.tc[i])};
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // drop b if it sits on or above the chord a→p
            if ((b.second - a.second) * (p.first - a.first) >= (p.second - a.second) * (b.first - a.first))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    std::vector<std::pair<Rational, long>> out;
    for (std::size_t k = 1; k < hull.size(); ++k) {
        Rational slope(hull[k].second - hull[k - 1].second, hull[k].first - hull[k - 1].first);
        slope.canonicalize();
        out.emplace_back(-slope, hull[k].first - hull[k - 1].first);
    }
    return out;
}

std::vector<Branch> expand_branch(const PolyTZ& d, const Rational& q, long prec) {
    if (d.is_zero() || prec < 1) throw InvalidArgument("expand_branch: nonzero polynomial and prec >= 1 required");
    Rational qc = q;
    qc.canonicalize();
    long a = as_long(qc.get_num(), "expand_branch: valuation");
    long b = as_long(qc.get_den(), "expand_branch: valuation");

    PolyTZ e = substitute_slope(d, a, b);
    RationalRoots rr = rational_roots(e.at_z0_in_t());
    if (rr.remaining_degree > 0)
        throw UnsupportedRamification("expand_branch: leading coefficient outside Q");

    std::vector<Branch> out;
    for (const auto& [u0, mult] : rr.roots) {
        if (mult == 1) {
            long py = std::max(1L, b * prec - a);
            QSeries body = embed(hensel_lift(e, u0, py)).shifted(a).truncated(b * prec);
            Branch br;
            br.valuation = qc;
            br.bounded = qc >= 0;
            br.expansion = Puiseux(b, body);
            br.ramification = br.expansion.ramification();
            out.push_back(std::move(br));
        } else if (mult == 2 && b == 1) {
            append_ramified_pair(out, e, u0, a, prec);
        } else {
            throw UnsupportedRamification("expand_branch: leading root of multiplicity " + std::to_string(mult) +
                                          (b > 1 ? " on a ramified segment" : ""));
        }
    }
    return out;
}

BranchSummary classify_bounded(const PolyTZ& d, long prec) {
    if (d.is_zero() || prec < 1) throw InvalidArgument("classify_bounded: nonzero polynomial and prec >= 1 required");
    PolyTZ dd = d;
    dd.strip_z_content();
    RationalRoots rr = rational_roots(dd.at_z0_in_t());
    if (rr.zero_multiplicity >= 2)
        throw MultipleBoundedRoot("classify_bounded: repeated root of D(t,0) at t = 0");
    for (const auto& [t0, mult] : rr.roots)
        if (mult >= 2) throw MultipleBoundedRoot("classify_bounded: repeated root of D(t,0) at t = " + to_string(t0));
    if (rr.remaining_degree > 0)
        throw UnsupportedRamification("classify_bounded: D(t,0) has roots outside Q");

    std::vector<Rational> roots;
    if (rr.zero_multiplicity == 1) roots.push_back(Rational(0));
    for (const auto& [t0, mult] : rr.roots) roots.push_back(t0);
    std::sort(roots.begin(), roots.end());

    BranchSummary out;
    for (const Rational& t0 : roots) {
        Branch br;
        br.expansion = Puiseux(hensel_lift(dd, t0, prec));
        br.valuation = br.expansion.valuation();
        out.bounded.push_back(std::move(br));
    }
    for (const auto& [q, cnt] : newton_polygon(dd))
        if (q < 0) out.unbounded.emplace_back(q, cnt);
    return out;
}

QSeries eval_at_puiseux(const PolyTZ& d, const Puiseux& s, long yprec) {
    long r = s.ramification();
    QSeries acc = QSeries::zero(yprec);
    for (long i = d.t_degree(); i >= 0; --i) {
        const ZPoly& c = d.tc[static_cast<std::size_t>(i)];
        std::vector<QuadExt> v;
        for (std::size_t e = 0; e < c.size(); ++e) {
            if (r * static_cast<long>(e) >= yprec) break;
            if (c[e] == 0) continue;
            while (static_cast<long>(v.size()) < r * static_cast<long>(e)) v.emplace_back(0L);
            v.emplace_back(c[e]);
        }
        acc = acc * s.body() + QSeries::from_coeffs(std::move(v), 0, yprec);
    }
    return acc;
}

} // namespace gftk
