#include "gftk/diagonal.hpp"

#include <algorithm>
#include <utility>

#include "gftk/a348410.hpp"

namespace gftk {

namespace {

void add_term(PolyTZ& p, long tpow, long zpow, const Rational& c) {
    if (static_cast<long>(p.tc.size()) <= tpow)
        p.tc.resize(static_cast<std::size_t>(tpow) + 1);
    ZPoly& row = p.tc[static_cast<std::size_t>(tpow)];
    if (static_cast<long>(row.size()) <= zpow)
        row.resize(static_cast<std::size_t>(zpow) + 1, Rational(0));
    row[static_cast<std::size_t>(zpow)] += c;
}

} // namespace

DiagonalProblem substitute_diagonal(const RationalBivariate& f) {
    // x -> zt and y -> 1/t send x^i y^j to z^i t^(i-j). Multiplying numerator
    // and denominator by t^B (B = largest y-degree in sight) clears the
    // negative powers; the extra 1/t goes to the denominator.
    long b = std::max(f.num.max_deg_y(), f.den.max_deg_y());
    PolyTZ num, den;
    for (const auto& [e, c] : f.num.terms())
        add_term(num, e.first - e.second + b, e.first, c);
    for (const auto& [e, c] : f.den.terms())
        add_term(den, e.first - e.second + b + 1, e.first, c);
    long k = den.t_valuation();
    if (!num.is_zero()) k = std::min(k, num.t_valuation());
    if (k > 0) {
        if (!num.is_zero()) num.tc.erase(num.tc.begin(), num.tc.begin() + k);
        den.tc.erase(den.tc.begin(), den.tc.begin() + k);
    }
    return {std::move(num), std::move(den)};
}

RSeries diagonal_gf(const RationalBivariate& f, long prec) {
    DiagonalProblem p = substitute_diagonal(f);
    if (p.num.is_zero()) return RSeries::zero(prec);
    BranchSummary bs = classify_bounded(p.den, prec);
    PolyTZ dt = p.den.derivative_t();
    Puiseux total(1, QSeries::zero(prec));
    for (const Branch& br : bs.bounded) {
        long r = br.expansion.ramification();
        long yprec = r * prec;
        QSeries dval = eval_at_puiseux(dt, br.expansion, yprec);
        if (dval.is_zero())
            throw ResidueUndefined("diagonal_gf: d/dt of the denominator is zero on a branch");
        QSeries nval = eval_at_puiseux(p.num, br.expansion, yprec);
        total = total + Puiseux(r, ps_div(nval, dval));
    }
    return rational_series(total).truncated(prec);
}

namespace {

// Coefficient grid of 1/den up to x^nx y^ny, by the convolution recurrence
// den * inv = 1 solved in graded order. Cost O(nx*ny*terms(den)).
std::vector<std::vector<Rational>> inverse_grid(const XYPoly& den, long nx, long ny) {
    Rational c0 = den.at_origin();
    std::vector<std::pair<std::pair<long, long>, Rational>> tail;
    for (const auto& [e, c] : den.terms())
        if (e != std::make_pair(0L, 0L) && c != 0) tail.emplace_back(e, c);
    std::vector<std::vector<Rational>> inv(
        static_cast<std::size_t>(nx) + 1,
        std::vector<Rational>(static_cast<std::size_t>(ny) + 1, Rational(0)));
    for (long i = 0; i <= nx; ++i)
        for (long j = 0; j <= ny; ++j) {
            Rational s = (i == 0 && j == 0) ? Rational(1) : Rational(0);
            for (const auto& [e, c] : tail) {
                if (e.first > i || e.second > j) continue;
                s -= c * inv[static_cast<std::size_t>(i - e.first)]
                            [static_cast<std::size_t>(j - e.second)];
            }
            inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s / c0;
        }
    return inv;
}

} // namespace

std::vector<Rational> diagonal_oracle_coeffs(const RationalBivariate& f, long count) {
    if (count <= 0) return {};
    long n = count - 1;
    std::vector<std::vector<Rational>> inv = inverse_grid(f.den, n, n);
    std::vector<Rational> out(static_cast<std::size_t>(count), Rational(0));
    // Multiply by the numerator, keeping only the diagonal entries.
    for (const auto& [e, c] : f.num.terms()) {
        if (c == 0) continue;
        long lo = std::max(e.first, e.second);
        for (long m = lo; m <= n; ++m)
            out[static_cast<std::size_t>(m)] +=
                c * inv[static_cast<std::size_t>(m - e.first)]
                       [static_cast<std::size_t>(m - e.second)];
    }
    return out;
}

Rational diagonal_oracle(const RationalBivariate& f, long n) {
    return diagonal_oracle_coeffs(f, n + 1).back();
}

ClosedFormReport closed_form_check(long prec) {
    ClosedFormReport rep;
    RationalBivariate f = a348410_f();
    DiagonalProblem p = substitute_diagonal(f);
    BranchSummary bs = classify_bounded(p.den, prec);
    // A348410 has a single bounded branch; everything below evaluates on it.
    const Puiseux& s4p = bs.bounded.front().expansion;
    RSeries s4 = rational_series(s4p);

    PolyTZ dt = p.den.derivative_t();
    rep.residue_series =
        rational_series(Puiseux(1, ps_div(eval_at_puiseux(p.num, s4p, prec),
                                          eval_at_puiseux(dt, s4p, prec))))
            .truncated(prec);

    RSeries one = RSeries::constant(Rational(1), prec);
    RSeries w = s4.shifted(1).truncated(prec);
    RSeries w2 = (w * w).truncated(prec);
    RSeries den_w = one - w - RSeries::constant(Rational(4), prec) * w2;
    rep.s4_closed_form = ps_div(one - w2, den_w).truncated(prec);

    // g = (-32 + 35z + 64z^2) + (40z + 67z^2) s4 + (32z^2 - 28z^3) s4^2
    //     + (-40z^3 - 16z^4) s4^3, all over 256z^2 + 107z - 32.
    PolyTZ rew;
    rew.tc = {
        ZPoly{-32, 35, 64},
        ZPoly{0, 40, 67},
        ZPoly{0, 0, 32, -28},
        ZPoly{0, 0, 0, -40, -16},
    };
    RSeries rden = zp_as_series<Rational>(ZPoly{-32, 107, 256}, prec);
    rep.rational_rewrite = ps_div(eval_at(rew, s4, prec), rden).truncated(prec);

    rep.checked_order = prec;
    rep.all_equal = true;
    for (const RSeries* other : {&rep.s4_closed_form, &rep.rational_rewrite}) {
        if (auto d = ps_first_difference(rep.residue_series, *other)) {
            rep.all_equal = false;
            rep.checked_order = std::min(rep.checked_order, *d);
        }
    }

    RSeries lhs = eval_at(dt, s4, prec);
    RSeries rhs = ((one - w) * den_w).truncated(prec);
    rep.derivative_identity = !ps_first_difference(lhs, rhs).has_value();
    return rep;
}

} // namespace gftk
