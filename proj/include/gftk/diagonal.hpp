#pragma once

#include <vector>

#include "gftk/branch.hpp"
#include "gftk/poly.hpp"

namespace gftk {

// F(zt, 1/t)/t written as a fraction of polynomials in t over Q[z], with the
// common power of t cancelled. den keeps no overall z factor (the constant
// term of the original denominator guarantees a z^0 coefficient survives).
struct DiagonalProblem {
    PolyTZ num;
    PolyTZ den;
};

DiagonalProblem substitute_diagonal(const RationalBivariate& f);

// Diagonal of F mod z^prec as the sum over bounded branches s of den of
// num(s,z) / (d/dt den)(s,z) — the residue at a simple pole. Throws
// MultipleBoundedRoot / UnsupportedRamification when the branch structure is
// outside what the solver handles, and ResidueUndefined when d/dt den is zero
// through the working precision on some branch.
RSeries diagonal_gf(const RationalBivariate& f, long prec);

// Brute force for cross-checking: expand F as a bivariate power series by
// truncated arithmetic on the coefficient grid and read off f_{n,n}. Shares
// nothing with the branch machinery.
Rational diagonal_oracle(const RationalBivariate& f, long n);

// f_{n,n} for n = 0..count-1, computed from one grid expansion.
std::vector<Rational> diagonal_oracle_coeffs(const RationalBivariate& f, long count);

// The A348410 diagonal computed three independent ways, plus the denominator
// derivative factorization the closed forms hinge on. With s4 the bounded
// branch and w = z*s4:
//   residue_series   num(s4,z) / (d/dt den)(s4,z)
//   s4_closed_form   (1 - w^2) / (1 - w - 4w^2)
//   rational_rewrite explicit rational expression in s4 over 256z^2+107z-32
//   derivative_identity  (d/dt den)(s4) == (1 - w)(1 - w - 4w^2)
struct ClosedFormReport {
    RSeries residue_series;
    RSeries s4_closed_form;
    RSeries rational_rewrite;
    bool all_equal = false;
    long checked_order = 0; // prec when equal, else the first mismatch exponent
    bool derivative_identity = false;
};

ClosedFormReport closed_form_check(long prec);

} // namespace gftk
