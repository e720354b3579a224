#pragma once

#include <vector>

#include "gftk/series.hpp"

namespace gftk {

// Power-series solution of B = 1 + u*B^m with B(0) = 1, as a series in u.
// m = 2 gives the Catalan numbers, m = 1 the geometric series.
struct GBSeries {
    long m = 0;
    long prec = 0;
    RSeries series;
};

// The unique solution, by fixed-point iteration on the functional equation
// (each pass fixes at least one more coefficient). |m| <= 64.
GBSeries gbs_series(long m, long prec);

// One identity evaluated on both sides; lhs/rhs kept for diagnosis.
struct SeriesIdentityReport {
    RSeries lhs, rhs;
    bool equal = false;
    long m = 0, prec = 0;
};

// sum_{k>=0} binom(mk,k) u^k  ==  1/(1 - m + m/B)  as series in u.
SeriesIdentityReport gkp561_check(long m, long prec);

// The log identity and its two rearrangements, compared as series in w after
// the substitution u = w/(1+w)^m:
//   log_form         (1/m) sum_{k>=1} binom(mk,k) u^k / k  ==  log(1+w)
//   derivative_form  (1/m) sum_{k>=1} binom(mk,k) u^{k-1}  ==  (1+w)^{m+1} / ((1+w-wm)(1+w))
//   sum_form         sum_{k>=0} binom(mk,k) u^k            ==  (1+w) / (1+w-wm)
struct LogIdentityReport {
    SeriesIdentityReport log_form, derivative_form, sum_form;
    bool equal = false;
    long m = 0, prec = 0;
};

LogIdentityReport log_identity_check(long m, long prec);

// H_n = 1 + 1/2 + ... + 1/n, exactly (H_0 = 0).
Rational harmonic(long n);

// H_n  ==  (1/m) sum_{k=1}^n ((-1)^{k+1}/k) binom(mk,k) binom(n+(m-1)k, n-k).
struct HarmonicIdentityReport {
    Rational lhs, rhs; // H_n and the binomial sum
    bool equal = false;
    long m = 0, n = 0;
};

HarmonicIdentityReport harmonic_identity_check(long m, long n);

// sum_{n>=1} H_n z^n built two ways — the double sum whose inner coefficient
// is the identity's right side at parameter m, and -log(1-z)/(1-z) — then
// compared coefficientwise against the harmonic numbers themselves.
struct HarmonicGFReport {
    RSeries double_sum;
    RSeries closed_form;
    std::vector<Rational> harmonic_values; // H_0 .. H_{prec-1}
    bool equal = false;
    long m = 0, prec = 0;
};

HarmonicGFReport harmonic_gf_check(long m, long prec);

} // namespace gftk
