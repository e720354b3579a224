#include "gftk/gbs.hpp"

namespace gftk {

GBSeries gbs_series(long m, long prec) {
    if (prec < 1) throw InvalidArgument("gbs_series: prec must be >= 1");
    if (m < -64 || m > 64) throw InvalidArgument("gbs_series: |m| must be <= 64");
    RSeries one = RSeries::constant(Rational(1), prec);
    RSeries u = RSeries::monomial(Rational(1), 1, prec);
    RSeries b = one;
    for (long pass = 0; pass < prec; ++pass) {
        RSeries next = one + (u * ps_pow(b, m)).truncated(prec);
        if (next == b) break;
        b = std::move(next);
    }
    if (!(b - one - (u * ps_pow(b, m)).truncated(prec)).is_zero())
        throw std::logic_error("gbs_series: fixed point did not converge");
    return {m, prec, std::move(b)};
}

namespace {

// sum over k of binom(mk,k) u^(k+shift) / k^kdiv, truncated at u^prec.
RSeries binom_sum(long m, long prec, long kfrom, long shift, bool divide_by_k) {
    std::vector<Rational> c(static_cast<std::size_t>(prec), Rational(0));
    for (long k = kfrom; k + shift < prec; ++k) {
        Rational t = binomial(m * k, k);
        if (divide_by_k) t /= Rational(k);
        c[static_cast<std::size_t>(k + shift)] = t;
    }
    return RSeries::from_coeffs(std::move(c), 0, prec);
}

} // namespace

SeriesIdentityReport gkp561_check(long m, long prec) {
    if (prec < 1) throw InvalidArgument("gkp561_check: prec must be >= 1");
    SeriesIdentityReport rep;
    rep.m = m;
    rep.prec = prec;
    rep.lhs = binom_sum(m, prec, 0, 0, false);
    GBSeries b = gbs_series(m, prec);
    RSeries den = RSeries::constant(Rational(1 - m), prec) +
                  RSeries::constant(Rational(m), prec) * ps_inv(b.series);
    rep.rhs = ps_inv(den).truncated(prec);
    rep.equal = !ps_first_difference(rep.lhs, rep.rhs).has_value();
    return rep;
}

LogIdentityReport log_identity_check(long m, long prec) {
    if (m < 1) throw InvalidArgument("log_identity_check: m must be >= 1");
    if (prec < 1) throw InvalidArgument("log_identity_check: prec must be >= 1");
    LogIdentityReport rep;
    rep.m = m;
    rep.prec = prec;

    RSeries one = RSeries::constant(Rational(1), prec);
    RSeries w = RSeries::monomial(Rational(1), 1, prec);
    RSeries onepw = one + w;
    // u = w/(1+w)^m has valuation 1, so composing a u-series with prec terms
    // loses nothing mod w^prec.
    RSeries u = ps_div(w, ps_pow(onepw, m)).truncated(prec);
    RSeries invm = RSeries::constant(reduced(1, m), prec);
    RSeries denw = onepw - RSeries::constant(Rational(m), prec) * w; // 1 + w - wm

    rep.log_form.lhs = ps_compose(invm * binom_sum(m, prec, 1, 0, true), u);
    rep.log_form.rhs = ps_log1p(w);

    rep.derivative_form.lhs = ps_compose(invm * binom_sum(m, prec, 1, -1, false), u);
    rep.derivative_form.rhs = ps_div(ps_pow(onepw, m + 1), denw * onepw).truncated(prec);

    rep.sum_form.lhs = ps_compose(binom_sum(m, prec, 0, 0, false), u);
    rep.sum_form.rhs = ps_div(onepw, denw).truncated(prec);

    rep.equal = true;
    for (SeriesIdentityReport* layer : {&rep.log_form, &rep.derivative_form, &rep.sum_form}) {
        layer->m = m;
        layer->prec = prec;
        layer->equal = !ps_first_difference(layer->lhs, layer->rhs).has_value();
        rep.equal = rep.equal && layer->equal;
    }
    return rep;
}

Rational harmonic(long n) {
    if (n < 0) throw InvalidArgument("harmonic: n must be >= 0");
    Rational h(0);
    for (long k = 1; k <= n; ++k) h += reduced(1, k);
    return h;
}

HarmonicIdentityReport harmonic_identity_check(long m, long n) {
    if (m < 1) throw InvalidArgument("harmonic_identity_check: m must be >= 1");
    if (n < 1) throw InvalidArgument("harmonic_identity_check: n must be >= 1");
    HarmonicIdentityReport rep;
    rep.m = m;
    rep.n = n;
    rep.lhs = harmonic(n);
    Rational s(0);
    for (long k = 1; k <= n; ++k) {
        Rational term = binomial(m * k, k) * binomial(n + (m - 1) * k, n - k) / Rational(k);
        s += (k % 2 == 1) ? term : -term;
    }
    rep.rhs = s / Rational(m);
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

HarmonicGFReport harmonic_gf_check(long m, long prec) {
    if (prec < 2) throw InvalidArgument("harmonic_gf_check: prec must be >= 2");
    HarmonicGFReport rep;
    rep.m = m;
    rep.prec = prec;

    std::vector<Rational> ds(static_cast<std::size_t>(prec), Rational(0));
    for (long n = 1; n < prec; ++n) ds[static_cast<std::size_t>(n)] = harmonic_identity_check(m, n).rhs;
    rep.double_sum = RSeries::from_coeffs(std::move(ds), 0, prec);

    // The only place w and z meet: w = -z turns log(1+w) into log(1-z).
    RSeries wz = RSeries::monomial(Rational(-1), 1, prec);
    RSeries one = RSeries::constant(Rational(1), prec);
    rep.closed_form = -ps_div(ps_log1p(wz), one + wz);

    rep.harmonic_values.reserve(static_cast<std::size_t>(prec));
    Rational h(0);
    for (long n = 0; n < prec; ++n) {
        if (n > 0) h += reduced(1, n);
        rep.harmonic_values.push_back(h);
    }

    rep.equal = true;
    for (long n = 0; n < prec; ++n) {
        const Rational& hn = rep.harmonic_values[static_cast<std::size_t>(n)];
        if (rep.double_sum.coeff(n) != hn || rep.closed_form.coeff(n) != hn) {
            rep.equal = false;
            break;
        }
    }
    return rep;
}

} // namespace gftk
