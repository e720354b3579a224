#include <doctest.h>

#include "gftk/gbs.hpp"
#include "gftk/rational.hpp"

using namespace gftk;

TEST_CASE("gbs_series specializes to known families") {
    // B_0 = 1 + u
    GBSeries b0 = gbs_series(0, 6);
    CHECK(b0.series.coeff(0) == 1);
    CHECK(b0.series.coeff(1) == 1);
    CHECK(b0.series.coeff(2) == 0);

    // B_1 = 1/(1-u)
    GBSeries b1 = gbs_series(1, 6);
    for (long k = 0; k < 6; ++k) CHECK(b1.series.coeff(k) == 1);

    // B_2 = Catalan numbers
    GBSeries b2 = gbs_series(2, 6);
    const Rational cat[] = {1, 1, 2, 5, 14, 42};
    for (long k = 0; k < 6; ++k) CHECK(b2.series.coeff(k) == cat[k]);

    // B_3 = Fuss numbers binom(3k,k)/(2k+1)
    GBSeries b3 = gbs_series(3, 6);
    const Rational fuss[] = {1, 1, 3, 12, 55, 273};
    for (long k = 0; k < 6; ++k) CHECK(b3.series.coeff(k) == fuss[k]);

    // negative order: B_{-1} alternates through the Catalan numbers
    GBSeries bm1 = gbs_series(-1, 6);
    const Rational alt[] = {1, 1, -1, 2, -5, 14};
    for (long k = 0; k < 6; ++k) CHECK(bm1.series.coeff(k) == alt[k]);
}

TEST_CASE("gbs_series satisfies its defining equation") {
    for (long m : {-7L, -2L, 0L, 1L, 2L, 5L, 11L}) {
        GBSeries b = gbs_series(m, 12);
        RSeries u = RSeries::monomial(Rational(1), 1, 12);
        RSeries rhs = RSeries::constant(Rational(1), 12) + u * ps_pow(b.series, m);
        CHECK(ps_first_difference(b.series, rhs) == std::nullopt);
    }
}

TEST_CASE("gbs_series coefficients obey the Fuss-Catalan normalization") {
    // (mk+1) [u^k] B_m = binom(mk+1, k), an integer
    for (long m = 1; m <= 5; ++m) {
        GBSeries b = gbs_series(m, 15);
        for (long k = 0; k < 15; ++k) {
            Rational scaled = b.series.coeff(k) * Rational(m * k + 1);
            CHECK(is_integer(scaled));
            CHECK(scaled == Rational(binomial(m * k + 1, k)));
        }
    }
}

TEST_CASE("gbs_series argument guards") {
    CHECK_THROWS_AS(gbs_series(1, 0), InvalidArgument);
    CHECK_THROWS_AS(gbs_series(65, 4), InvalidArgument);
    CHECK_THROWS_AS(gbs_series(-65, 4), InvalidArgument);
}

TEST_CASE("gkp561_check holds for positive and negative orders") {
    for (long m = -5; m <= 5; ++m) {
        SeriesIdentityReport rep = gkp561_check(m, 25);
        CHECK(rep.equal);
        CHECK(rep.m == m);
        CHECK(rep.prec == 25);
        CHECK(ps_first_difference(rep.lhs, rep.rhs) == std::nullopt);
    }
    // m = 2, the A000984 instance: lhs coefficients are central binomials
    SeriesIdentityReport c = gkp561_check(2, 8);
    const Rational central[] = {1, 2, 6, 20, 70, 252, 924, 3432};
    for (long k = 0; k < 8; ++k) CHECK(c.lhs.coeff(k) == central[k]);
}

TEST_CASE("log_identity_check equates all three layers") {
    for (long m = 1; m <= 5; ++m) {
        LogIdentityReport rep = log_identity_check(m, 18);
        CHECK(rep.equal);
        CHECK(rep.log_form.equal);
        CHECK(rep.derivative_form.equal);
        CHECK(rep.sum_form.equal);
    }
    CHECK_THROWS_AS(log_identity_check(0, 10), InvalidArgument);
    CHECK_THROWS_AS(log_identity_check(-3, 10), InvalidArgument);
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0) == 0);
    CHECK(harmonic(1) == 1);
    CHECK(harmonic(3) == reduced(11, 6));
    CHECK(harmonic(5) == reduced(137, 60));
    CHECK_THROWS_AS(harmonic(-1), InvalidArgument);
}

TEST_CASE("harmonic_identity_check computes H_n from the binomial double sum") {
    HarmonicIdentityReport r = harmonic_identity_check(2, 2);
    CHECK(r.lhs == reduced(3, 2));
    CHECK(r.rhs == reduced(3, 2));
    CHECK(r.equal);

    for (long m = 1; m <= 6; ++m)
        for (long n = 1; n <= 25; ++n) CHECK(harmonic_identity_check(m, n).equal);

    CHECK_THROWS_AS(harmonic_identity_check(0, 3), InvalidArgument);
    CHECK_THROWS_AS(harmonic_identity_check(2, 0), InvalidArgument);
}

TEST_CASE("harmonic_gf_check matches the double sum against -log(1-z)/(1-z)") {
    HarmonicGFReport rep = harmonic_gf_check(2, 6);
    CHECK(rep.equal);
    const Rational h[] = {0, 1, reduced(3, 2), reduced(11, 6), reduced(25, 12), reduced(137, 60)};
    for (long n = 0; n < 6; ++n) {
        CHECK(rep.harmonic_values[static_cast<std::size_t>(n)] == h[n]);
        CHECK(rep.double_sum.coeff(n) == h[n]);
        CHECK(rep.closed_form.coeff(n) == h[n]);
    }
    CHECK(harmonic_gf_check(5, 12).equal);
    CHECK_THROWS_AS(harmonic_gf_check(2, 1), InvalidArgument);
}
