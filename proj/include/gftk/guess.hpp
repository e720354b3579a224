#pragma once

#include <optional>
#include <vector>

#include "gftk/poly.hpp"
#include "gftk/series.hpp"

namespace gftk {

// P(z, g) = Σ grid[i][j]·g^i·z^j with integer entries. Canonical form:
// entries primitive (gcd 1) and the first nonzero entry, scanning i then j
// downwards from (deg_g, deg_z), positive.
struct AlgebraicEquation {
    long deg_g = 0, deg_z = 0;
    std::vector<std::vector<Integer>> grid; // grid[i][j] multiplies g^i z^j
};

// Σ_{i=0}^{order} p_i(m)·a_{m+i} = 0 for every m ≥ 0. Integer polynomials
// stored by ascending power of m; p_order not identically zero; collection
// primitive; leading coefficient of p_order positive.
struct Recurrence {
    long order = 0, deg = 0;
    std::vector<std::vector<Integer>> polys; // polys[i][d] multiplies m^d·a_{m+i}
};

// A guessed relation; `ambiguous` flags that the kernel had dimension > 1 and
// the vector with the most trailing zeros was picked.
template <class T>
struct Guess {
    T value;
    bool ambiguous = false;
};

// Exact-nullspace guess of an algebraic equation for the series with the
// given initial coefficients. Needs (deg_g+1)(deg_z+1) + margin coefficients
// (InsufficientData otherwise); empty optional means no relation exists at
// these bounds. Any returned equation is re-verified against all input data.
std::optional<Guess<AlgebraicEquation>> guess_algeq(const std::vector<Rational>& coeffs, long deg_g, long deg_z,
                                                    long margin = 10);

// Valuation of P(z, g(z)) as a truncated series; equals g's precision when
// the residual vanishes identically. "Verified to order N" = result ≥ N.
long verify_algeq(const AlgebraicEquation& p, const RSeries& g);

// Same scheme for a holonomic recurrence: kernel of Σ_{i,d} c_{i,d} m^d a_{m+i}
// over the windows m = 0..len−order−1. Needs (order+1)(deg+1) + order + margin
// coefficients. Trailing zero coefficient polynomials are trimmed so the
// returned order is the largest i with p_i ≠ 0.
std::optional<Guess<Recurrence>> guess_rec(const std::vector<Rational>& coeffs, long order, long deg, long margin = 10);

// First m in 0..len−order−1 with Σ p_i(m)·a_{m+i} ≠ 0, or none if the
// recurrence holds on all available windows.
std::optional<long> verify_rec(const Recurrence& r, const std::vector<Rational>& coeffs);

// The window sum Σ p_i(m)·a_{m+i} itself, for diagnostics.
Rational rec_window_residual(const Recurrence& r, const std::vector<Rational>& coeffs, long m);

Integer ipoly_eval(const std::vector<Integer>& p, long m);

} // namespace gftk
